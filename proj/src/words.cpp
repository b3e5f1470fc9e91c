#include "lyndon/words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lyndon {

Alphabet::Alphabet(int n, std::vector<int> weights) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("alphabet needs at least one letter");
    if (weights.empty())
        weights.assign(static_cast<size_t>(n), 1);
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weight list size mismatch");
    for (int d : weights)
        if (d < 1)
            throw std::invalid_argument("letter weights must be positive");
    weights_ = std::move(weights);
    names_.reserve(static_cast<size_t>(n));
    underlying_.reserve(static_cast<size_t>(n));
    base_constitute_.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        names_.push_back("x" + std::to_string(i));
        underlying_.push_back({i});
        std::vector<int> c(static_cast<size_t>(n), 0);
        c[static_cast<size_t>(i - 1)] = 1;
        base_constitute_.push_back(std::move(c));
    }
}

Alphabet::Alphabet(std::shared_ptr<const Alphabet> base,
                   std::vector<std::vector<int>> underlying,
                   std::vector<int> weights,
                   std::vector<std::string> names)
    : n_(static_cast<int>(underlying.size())),
      weights_(std::move(weights)),
      names_(std::move(names)),
      base_(std::move(base)),
      underlying_(std::move(underlying)) {
    if (n_ < 1 || weights_.size() != underlying_.size() || names_.size() != underlying_.size())
        throw std::invalid_argument("inconsistent extended alphabet data");
    base_constitute_.reserve(underlying_.size());
    for (const auto& u : underlying_) {
        std::vector<int> c(static_cast<size_t>(base_->size()), 0);
        for (int l : u)
            c[static_cast<size_t>(l - 1)] += 1;
        base_constitute_.push_back(std::move(c));
    }
}

bool Alphabet::unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](int d) { return d == 1; });
}

const std::vector<int>& Alphabet::underlying(int letter) const {
    return underlying_.at(static_cast<size_t>(letter - 1));
}

const std::vector<int>& Alphabet::base_constitute(int letter) const {
    return base_constitute_.at(static_cast<size_t>(letter - 1));
}

bool Alphabet::same_as(const Alphabet& other) const {
    if (this == &other)
        return true;
    return n_ == other.n_ && weights_ == other.weights_ && underlying_ == other.underlying_;
}

AlphabetPtr make_alphabet(int n, std::vector<int> weights) {
    return std::make_shared<Alphabet>(n, std::move(weights));
}

Word Word::concat(const Word& other) const {
    std::vector<int> ls = ls_;
    ls.insert(ls.end(), other.ls_.begin(), other.ls_.end());
    return Word(std::move(ls));
}

Word Word::subword(size_t pos, size_t len) const {
    return Word(std::vector<int>(ls_.begin() + static_cast<std::ptrdiff_t>(pos),
                                 ls_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Ordering lex_compare(const Word& u, const Word& v) {
    size_t m = std::min(u.length(), v.length());
    for (size_t i = 0; i < m; ++i) {
        if (u.at(i) != v.at(i))
            return u.at(i) < v.at(i) ? Ordering::Less : Ordering::Greater;
    }
    if (u.length() == v.length())
        return Ordering::Equal;
    // A proper prefix is greater than its extensions.
    return u.length() > v.length() ? Ordering::Less : Ordering::Greater;
}

bool lex_less(const Word& u, const Word& v) {
    return lex_compare(u, v) == Ordering::Less;
}

int degree(const Word& u, const Alphabet& a) {
    int d = 0;
    for (int l : u.letters())
        d += a.weight(l);
    return d;
}

std::vector<int> constitute(const Word& u, const Alphabet& a) {
    std::vector<int> c(static_cast<size_t>(a.size()), 0);
    for (int l : u.letters())
        c[static_cast<size_t>(l - 1)] += 1;
    return c;
}

Ordering deglex_compare(const Word& u, const Word& v, const Alphabet& a) {
    int du = degree(u, a), dv = degree(v, a);
    if (du != dv)
        return du < dv ? Ordering::Less : Ordering::Greater;
    return lex_compare(u, v);
}

bool deglex_less(const Word& u, const Word& v, const Alphabet& a) {
    return deglex_compare(u, v, a) == Ordering::Less;
}

bool is_prefix(const Word& p, const Word& u) {
    if (p.length() > u.length())
        return false;
    return std::equal(p.letters().begin(), p.letters().end(), u.letters().begin());
}

bool is_suffix(const Word& s, const Word& u) {
    if (s.length() > u.length())
        return false;
    return std::equal(s.letters().rbegin(), s.letters().rend(), u.letters().rbegin());
}

bool is_factor(const Word& f, const Word& u) {
    if (f.length() > u.length())
        return false;
    if (f.empty())
        return true;
    auto it = std::search(u.letters().begin(), u.letters().end(), f.letters().begin(), f.letters().end());
    return it != u.letters().end();
}

bool is_proper_factor(const Word& f, const Word& u) {
    return f != u && is_factor(f, u);
}

size_t count_occurrences(const Word& f, const Word& u) {
    if (f.empty() || f.length() > u.length())
        return 0;
    size_t count = 0;
    for (size_t pos = 0; pos + f.length() <= u.length(); ++pos) {
        if (std::equal(f.letters().begin(), f.letters().end(), u.letters().begin() + static_cast<std::ptrdiff_t>(pos)))
            ++count;
    }
    return count;
}

bool is_lyndon(const Word& u) {
    // Equivalent characterization: u is greater than each proper non-empty suffix.
    if (u.empty())
        return false;
    for (size_t k = 1; k < u.length(); ++k) {
        if (lex_compare(u, u.suffix(k)) != Ordering::Greater)
            return false;
    }
    return true;
}

LyndonWord::LyndonWord(Word w) : w_(std::move(w)) {
    if (!is_lyndon(w_))
        throw std::invalid_argument("not a Lyndon word");
    if (w_.length() >= 2) {
        // u'' is the longest proper Lyndon suffix; the complementary prefix is Lyndon.
        for (size_t k = w_.length() - 1; k >= 1; --k) {
            Word tail = w_.suffix(k);
            if (is_lyndon(tail)) {
                sh_ = std::make_shared<const std::pair<LyndonWord, LyndonWord>>(
                    LyndonWord(w_.prefix(w_.length() - k)), LyndonWord(std::move(tail)));
                break;
            }
        }
    }
}

const LyndonWord& LyndonWord::sh_left() const {
    if (!sh_)
        throw std::logic_error("Shirshov factorization needs length >= 2");
    return sh_->first;
}

const LyndonWord& LyndonWord::sh_right() const {
    if (!sh_)
        throw std::logic_error("Shirshov factorization needs length >= 2");
    return sh_->second;
}

std::pair<LyndonWord, LyndonWord> shirshov(const LyndonWord& u) {
    return {u.sh_left(), u.sh_right()};
}

std::vector<LyndonWord> lyndon_decomposition(const Word& u) {
    if (u.empty())
        throw std::invalid_argument("no Lyndon decomposition of the empty word");
    // The last factor is the longest Lyndon suffix; peel from the right.
    std::vector<LyndonWord> rev;
    Word rest = u;
    while (!rest.empty()) {
        for (size_t k = rest.length();; --k) {
            Word tail = rest.suffix(k);
            if (is_lyndon(tail)) {
                rev.emplace_back(std::move(tail));
                rest = rest.prefix(rest.length() - k);
                break;
            }
            if (k == 1)
                throw std::logic_error("single letters are Lyndon; unreachable");
        }
    }
    return {rev.rbegin(), rev.rend()};
}

std::vector<LyndonWord> lyndon_factors(const Word& u) {
    std::set<std::vector<int>> seen;
    std::vector<LyndonWord> out;
    for (size_t pos = 0; pos < u.length(); ++pos) {
        for (size_t len = 1; pos + len <= u.length(); ++len) {
            Word f = u.subword(pos, len);
            if (is_lyndon(f) && seen.insert(f.letters()).second)
                out.emplace_back(std::move(f));
        }
    }
    return out;
}

std::vector<LyndonWord> generate_lyndon(const Alphabet& a, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("max_degree must be >= 1");
    // Degree-graded concatenation of pairs u >_lex v; every Lyndon word of
    // length >= 2 arises from its Shirshov pair, so this is complete.
    std::vector<std::vector<Word>> by_degree(static_cast<size_t>(max_degree) + 1);
    for (int i = 1; i <= a.size(); ++i) {
        int d = a.weight(i);
        if (d <= max_degree)
            by_degree[static_cast<size_t>(d)].push_back(Word::letter(i));
    }
    for (int d = 1; d <= max_degree; ++d) {
        std::set<std::vector<int>> found;
        for (const Word& w : by_degree[static_cast<size_t>(d)])
            found.insert(w.letters());
        for (int d1 = 1; d1 < d; ++d1) {
            int d2 = d - d1;
            for (const Word& u : by_degree[static_cast<size_t>(d1)]) {
                for (const Word& v : by_degree[static_cast<size_t>(d2)]) {
                    if (lex_compare(u, v) == Ordering::Greater)
                        found.insert(u.concat(v).letters());
                }
            }
        }
        std::vector<Word> level;
        level.reserve(found.size());
        for (const auto& ls : found)
            level.emplace_back(ls);
        std::sort(level.begin(), level.end(),
                  [&](const Word& x, const Word& y) { return lex_less(x, y); });
        by_degree[static_cast<size_t>(d)] = std::move(level);
    }
    std::vector<LyndonWord> out;
    for (int d = 1; d <= max_degree; ++d)
        for (const Word& w : by_degree[static_cast<size_t>(d)])
            out.emplace_back(w);
    return out;
}

std::vector<Word> generate_words(const Alphabet& a, int max_degree) {
    std::vector<Word> out{Word{}};
    size_t first = 0;
    while (true) {
        size_t last = out.size();
        bool grew = false;
        for (size_t k = first; k < last; ++k) {
            for (int i = 1; i <= a.size(); ++i) {
                Word w = out[k].concat(Word::letter(i));
                if (degree(w, a) <= max_degree) {
                    out.push_back(std::move(w));
                    grew = true;
                }
            }
        }
        first = last;
        if (!grew)
            break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Word& x, const Word& y) { return deglex_less(x, y, a); });
    return out;
}

std::string word_to_string(const Word& u, const Alphabet& a) {
    if (u.empty())
        return "1";
    if (a.is_extended()) {
        std::ostringstream os;
        size_t i = 0;
        bool firstrun = true;
        while (i < u.length()) {
            size_t j = i;
            while (j < u.length() && u.at(j) == u.at(i))
                ++j;
            if (!firstrun)
                os << "*";
            os << a.name(u.at(i));
            if (j - i > 1)
                os << "^" << (j - i);
            firstrun = false;
            i = j;
        }
        return os.str();
    }
    std::ostringstream os;
    if (a.size() <= 9) {
        for (int l : u.letters())
            os << l;
    } else {
        os << "[";
        for (size_t i = 0; i < u.length(); ++i)
            os << (i ? "," : "") << u.at(i);
        os << "]";
    }
    return os.str();
}

Word parse_word(const std::string& text, const Alphabet& a) {
    if (a.is_extended())
        throw std::invalid_argument("extended-alphabet words are not parsed from text");
    std::vector<int> ls;
    if (text.empty())
        return Word{};
    if (text.front() == '[') {
        if (text.back() != ']')
            throw std::invalid_argument("unterminated bracketed word: " + text);
        std::string inner = text.substr(1, text.size() - 2);
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            int l = std::stoi(tok);
            if (l < 1 || l > a.size())
                throw std::invalid_argument("letter index out of range in: " + text);
            ls.push_back(l);
        }
        return Word(std::move(ls));
    }
    // Digit string, optionally with decorative 'x' separators ("x2x1x1").
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'x')
            continue;
        if (c < '1' || c > '9')
            throw std::invalid_argument("bad character in word: " + text);
        int l = c - '0';
        if (l > a.size())
            throw std::invalid_argument("letter index out of range in: " + text);
        ls.push_back(l);
    }
    return Word(std::move(ls));
}

std::string ordering_to_string(Ordering o) {
    switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    default: return "greater";
    }
}

} // namespace lyndon
