#include "lyndon/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lyndon {

NcPoly::NcPoly(AlphabetPtr alph) : alph_(std::move(alph)), terms_(DeglexLess{alph_.get()}) {}

NcPoly NcPoly::monomial(AlphabetPtr alph, const Word& w, const Scalar& c) {
    NcPoly f(std::move(alph));
    f.add_term(w, c);
    return f;
}

const Word& NcPoly::leading_word() const {
    if (terms_.empty())
        throw std::logic_error("zero polynomial has no leading word");
    return terms_.rbegin()->first;
}

const Scalar& NcPoly::leading_coeff() const {
    if (terms_.empty())
        throw std::logic_error("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

const Scalar& NcPoly::coeff(const Word& w) const {
    static const Scalar zero = Scalar::zero();
    auto it = terms_.find(w);
    return it == terms_.end() ? zero : it->second;
}

bool NcPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = degree(terms_.begin()->first, *alph_);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        return degree(t.first, *alph_) == d;
    });
}

bool NcPoly::is_constitute_homogeneous() const {
    if (terms_.empty())
        return true;
    auto c0 = constitute(terms_.begin()->first, *alph_);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        return constitute(t.first, *alph_) == c0;
    });
}

std::optional<int> NcPoly::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return degree(terms_.begin()->first, *alph_);
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    if (!alph_->same_as(*o.alph_))
        throw std::invalid_argument("polynomials over different alphabets");
    NcPoly f = *this;
    for (const auto& [w, c] : o.terms_)
        f.add_term(w, c);
    return f;
}

NcPoly NcPoly::operator-() const {
    NcPoly f(alph_);
    for (const auto& [w, c] : terms_)
        f.terms_.emplace(w, -c);
    return f;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    return *this + (-o);
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    if (!alph_->same_as(*o.alph_))
        throw std::invalid_argument("polynomials over different alphabets");
    NcPoly f(alph_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_)
            f.add_term(w1.concat(w2), c1 * c2);
    return f;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly f(alph_);
    if (c.is_zero())
        return f;
    for (const auto& [w, k] : terms_)
        f.add_term(w, k * c);
    return f;
}

NcPoly NcPoly::framed(const Word& a, const Word& b) const {
    NcPoly f(alph_);
    for (const auto& [w, c] : terms_)
        f.terms_.emplace(a.concat(w).concat(b), c);
    return f;
}

NcPoly NcPoly::monic() const {
    if (terms_.empty())
        throw std::logic_error("zero polynomial cannot be made monic");
    if (leading_coeff().is_one())
        return *this;
    return scaled(leading_coeff().inverse());
}

bool NcPoly::operator==(const NcPoly& o) const {
    return (*this - o).is_zero();
}

std::string to_string(const NcPoly& f) {
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        Scalar c = it->second;
        bool neg = false;
        if (c.is_rational() && c.rational() < 0) {
            neg = true;
            c = -c;
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        std::string cs = to_string(c);
        std::string ws = word_to_string(it->first, *f.alphabet());
        bool needs_parens = cs.find(' ') != std::string::npos;
        if (it->first.empty()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << ws;
        } else if (needs_parens) {
            os << "(" << cs << ")*" << ws;
        } else {
            os << cs << "*" << ws;
        }
        first = false;
    }
    return os.str();
}

NcPoly parse_ncpoly(const std::string& text, AlphabetPtr alph, int matrix_size,
                    NumberFieldPtr field) {
    NcPoly f(alph);
    // Split into +/- separated terms at paren depth 0, then split each term
    // into scalar factors and one optional trailing word.
    size_t pos = 0;
    int sign = 1;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip();
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    while (pos < text.size()) {
        skip();
        size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(')
                ++depth;
            else if (c == ')')
                --depth;
            else if ((c == '+' || c == '-') && depth == 0)
                break;
            ++pos;
        }
        std::string chunk = text.substr(start, pos - start);
        // Trailing factor is a word when it starts with a digit or '[' and is
        // not a pure number, or when it contains letters of word syntax.
        size_t cut = chunk.size();
        {
            int d = 0;
            size_t last_star = std::string::npos;
            for (size_t i = 0; i < chunk.size(); ++i) {
                if (chunk[i] == '(')
                    ++d;
                else if (chunk[i] == ')')
                    --d;
                else if (chunk[i] == '*' && d == 0)
                    last_star = i;
            }
            std::string tail = last_star == std::string::npos ? chunk : chunk.substr(last_star + 1);
            auto trim = [](std::string s) {
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                    s.erase(s.begin());
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                    s.pop_back();
                return s;
            };
            tail = trim(tail);
            bool wordlike = !tail.empty() &&
                            (tail.front() == '[' || tail.front() == 'x' ||
                             (std::isdigit(static_cast<unsigned char>(tail.front())) &&
                              tail.find('/') == std::string::npos && tail.find('^') == std::string::npos &&
                              tail != "1"));
            // A lone "1" in word position is the empty word only when it is
            // the entire chunk following a coefficient; treat bare "1" as the
            // rational 1 (words containing the letter x1 use longer strings
            // or the explicit x-form).
            if (wordlike) {
                Word w = parse_word(tail, *alph);
                std::string coefstr = last_star == std::string::npos
                                          ? "1"
                                          : trim(chunk.substr(0, last_star));
                Scalar c = parse_scalar(coefstr, matrix_size, field);
                f.add_term(w, sign < 0 ? -c : c);
                cut = 0;
            }
        }
        if (cut != 0) {
            Scalar c = parse_scalar(chunk, matrix_size, field);
            f.add_term(Word{}, sign < 0 ? -c : c);
        }
        skip();
        if (pos >= text.size())
            break;
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    return f;
}

} // namespace lyndon
