#include "lyndon/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lyndon {

NumberField::NumberField(std::string gen_name, std::vector<Rational> monic_modulus)
    : gen_name_(std::move(gen_name)), modulus_(std::move(monic_modulus)) {
    if (modulus_.size() < 3)
        throw std::invalid_argument("extension degree must be >= 2");
    if (modulus_.back() != 1)
        throw std::invalid_argument("modulus must be monic");
}

NumberFieldPtr NumberField::cyclotomic3() {
    static NumberFieldPtr f =
        std::make_shared<NumberField>("zeta", std::vector<Rational>{1, 1, 1});
    return f;
}

namespace {

void trim_poly(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

// Residue of c modulo the monic modulus m.
std::vector<Rational> mod_reduce(std::vector<Rational> c, const std::vector<Rational>& m) {
    size_t d = m.size() - 1;
    while (c.size() > d) {
        Rational lead = c.back();
        size_t shift = c.size() - 1 - d;
        if (lead != 0)
            for (size_t i = 0; i < d; ++i)
                c[shift + i] -= lead * m[i];
        c.pop_back();
    }
    c.resize(d, Rational(0));
    return c;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

} // namespace

Algebraic::Algebraic(NumberFieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(mod_reduce(std::move(coeffs), field_->modulus())) {}

Algebraic Algebraic::from_rational(NumberFieldPtr field, const Rational& r) {
    return Algebraic(std::move(field), std::vector<Rational>{r});
}

Algebraic Algebraic::generator(NumberFieldPtr field) {
    return Algebraic(std::move(field), std::vector<Rational>{0, 1});
}

bool Algebraic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> Algebraic::as_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return std::nullopt;
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Algebraic Algebraic::operator+(const Algebraic& o) const {
    std::vector<Rational> c = coeffs_;
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        c[i] += o.coeffs_[i];
    return Algebraic(field_, std::move(c));
}

Algebraic Algebraic::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c)
        x = -x;
    return Algebraic(field_, std::move(c));
}

Algebraic Algebraic::operator*(const Algebraic& o) const {
    return Algebraic(field_, poly_mul(coeffs_, o.coeffs_));
}

Algebraic Algebraic::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero in extension field");
    // Extended Euclid in Q[t] against the modulus.
    std::vector<Rational> r0 = field_->modulus(), r1 = coeffs_;
    trim_poly(r1);
    std::vector<Rational> s0, s1{1};
    while (true) {
        trim_poly(r1);
        if (r1.empty())
            throw std::logic_error("modulus is not coprime with a nonzero residue");
        if (r1.size() == 1) {
            Rational inv = 1 / r1[0];
            std::vector<Rational> out = s1;
            for (auto& c : out)
                c *= inv;
            return Algebraic(field_, std::move(out));
        }
        // r0 = q*r1 + r2
        std::vector<Rational> q, r2 = r0;
        while (r2.size() >= r1.size()) {
            Rational f = r2.back() / r1.back();
            size_t shift = r2.size() - r1.size();
            if (q.size() < shift + 1)
                q.resize(shift + 1, Rational(0));
            q[shift] = f;
            for (size_t i = 0; i < r1.size(); ++i)
                r2[shift + i] -= f * r1[i];
            trim_poly(r2);
            if (r2.empty())
                break;
        }
        std::vector<Rational> s2 = s0;
        std::vector<Rational> qs = poly_mul(q, s1);
        if (s2.size() < qs.size())
            s2.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i)
            s2[i] -= qs[i];
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

bool Algebraic::operator==(const Algebraic& o) const {
    return coeffs_ == o.coeffs_;
}

LaurentPoly LaurentPoly::constant(int n, const Rational& r) {
    LaurentPoly p(n);
    if (r != 0)
        p.terms_[Exponents(static_cast<size_t>(n) * static_cast<size_t>(n), 0)] = r;
    return p;
}

LaurentPoly LaurentPoly::generator(int n, int i, int j, int e) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("q symbol index out of range");
    LaurentPoly p(n);
    Exponents ex(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    ex[static_cast<size_t>((i - 1) * n + (j - 1))] = e;
    p.terms_[std::move(ex)] = 1;
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<Rational> LaurentPoly::as_rational() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        return std::nullopt;
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("Laurent polynomials over different matrices");
    LaurentPoly p = *this;
    for (const auto& [e, c] : o.terms_)
        p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(n_);
    for (const auto& [e, c] : terms_)
        p.terms_[e] = -c;
    return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("Laurent polynomials over different matrices");
    LaurentPoly p(n_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e = e1;
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += e2[i];
            p.add_term(e, c1 * c2);
        }
    }
    return p;
}

LaurentPoly LaurentPoly::inverse() const {
    if (terms_.size() != 1)
        throw std::domain_error("non-unit Laurent scalar has no inverse (symbolic mode hit a non-monic division)");
    LaurentPoly p(n_);
    Exponents e = terms_.begin()->first;
    for (auto& x : e)
        x = -x;
    p.terms_[std::move(e)] = 1 / terms_.begin()->second;
    return p;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (n_ != o.n_)
        return n_ < o.n_;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
}

LaurentPoly normalize_condition(const LaurentPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("cannot normalize the zero condition");
    size_t k = p.terms().begin()->first.size();
    LaurentPoly::Exponents mins(k, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (first) {
            mins = e;
            first = false;
        } else {
            for (size_t i = 0; i < k; ++i)
                mins[i] = std::min(mins[i], e[i]);
        }
    }
    // Shift exponents so each symbol attains minimum 0, then scale so the
    // term with the lexicographically greatest exponent vector has
    // coefficient 1.
    std::map<LaurentPoly::Exponents, Rational> shifted;
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly::Exponents ne = e;
        for (size_t i = 0; i < k; ++i)
            ne[i] -= mins[i];
        shifted[std::move(ne)] = c;
    }
    Rational lead = shifted.rbegin()->second;
    LaurentPoly out(p.matrix_size());
    for (auto& [e, c] : shifted)
        out.add_term(e, c / lead);
    return out;
}

bool Scalar::is_zero() const {
    if (is_rational())
        return rational() == 0;
    if (is_algebraic())
        return algebraic().is_zero();
    return laurent().is_zero();
}

bool Scalar::is_one() const {
    return *this == Scalar::one();
}

namespace {

// Promotes rationals so both operands live in the same ring.
std::pair<Scalar, Scalar> align(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_algebraic())
        return {Scalar(Algebraic::from_rational(b.algebraic().field(), a.rational())), b};
    if (a.is_algebraic() && b.is_rational())
        return {a, Scalar(Algebraic::from_rational(a.algebraic().field(), b.rational()))};
    if (a.is_rational() && b.is_laurent())
        return {Scalar(LaurentPoly::constant(b.laurent().matrix_size(), a.rational())), b};
    if (a.is_laurent() && b.is_rational())
        return {a, Scalar(LaurentPoly::constant(a.laurent().matrix_size(), b.rational()))};
    if (a.is_algebraic() != b.is_algebraic())
        throw std::invalid_argument("cannot mix algebraic and symbolic scalars");
    return {a, b};
}

} // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    auto [a, b] = align(*this, o);
    if (a.is_rational())
        return Scalar(a.rational() + b.rational());
    if (a.is_algebraic())
        return Scalar(a.algebraic() + b.algebraic());
    return Scalar(a.laurent() + b.laurent());
}

Scalar Scalar::operator-() const {
    if (is_rational())
        return Scalar(-rational());
    if (is_algebraic())
        return Scalar(-algebraic());
    return Scalar(-laurent());
}

Scalar Scalar::operator*(const Scalar& o) const {
    auto [a, b] = align(*this, o);
    if (a.is_rational())
        return Scalar(a.rational() * b.rational());
    if (a.is_algebraic())
        return Scalar(a.algebraic() * b.algebraic());
    return Scalar(a.laurent() * b.laurent());
}

Scalar Scalar::inverse() const {
    if (is_rational()) {
        if (rational() == 0)
            throw std::domain_error("division by zero");
        return Scalar(1 / rational());
    }
    if (is_algebraic())
        return Scalar(algebraic().inverse());
    return Scalar(laurent().inverse());
}

Scalar Scalar::pow(int e) const {
    if (e == 0)
        return Scalar::one();
    Scalar base = e < 0 ? inverse() : *this;
    int k = e < 0 ? -e : e;
    Scalar out = Scalar::one();
    for (int i = 0; i < k; ++i)
        out = out * base;
    return out;
}

bool Scalar::operator==(const Scalar& o) const {
    auto [a, b] = align(*this, o);
    if (a.is_rational())
        return a.rational() == b.rational();
    if (a.is_algebraic())
        return a.algebraic() == b.algebraic();
    return a.laurent() == b.laurent();
}

Scalar evaluate(const LaurentPoly& p, const QAssignment& assignment) {
    for (const auto& [ij, val] : assignment) {
        (void)ij;
        if (!val.is_numeric())
            throw std::invalid_argument("assignments must be numeric");
        if (val.is_zero())
            throw std::invalid_argument("q entries must be nonzero");
    }
    int n = p.matrix_size();
    Scalar out = Scalar::zero();
    for (const auto& [e, c] : p.terms()) {
        Scalar term = Scalar(c);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                int exp = e[static_cast<size_t>((i - 1) * n + (j - 1))];
                if (exp == 0)
                    continue;
                auto it = assignment.find({i, j});
                if (it == assignment.end())
                    throw std::invalid_argument("missing assignment for q" + std::to_string(i) +
                                                std::to_string(j));
                term = term * it->second.pow(exp);
            }
        }
        out = out + term;
    }
    return out;
}

Scalar evaluate(const Scalar& s, const QAssignment& assignment) {
    return s.is_laurent() ? evaluate(s.laurent(), assignment) : s;
}

std::string to_string(const Rational& r) {
    return r.str();
}

std::string to_string(const Algebraic& a) {
    std::ostringstream os;
    bool any = false;
    const auto& c = a.coeffs();
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0)
            continue;
        Rational v = c[k];
        if (!any) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0)
                v = -v;
        }
        if (k == 0 || v != 1)
            os << to_string(v);
        if (k > 0) {
            if (v != 1)
                os << "*";
            os << a.field()->gen_name();
            if (k > 1)
                os << "^" << k;
        }
        any = true;
    }
    return any ? os.str() : "0";
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero())
        return "0";
    int n = p.matrix_size();
    std::ostringstream os;
    bool firstterm = true;
    // Terms in decreasing lex order of exponent vectors, the normalization
    // leader first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rational v = it->second;
        if (firstterm) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0)
                v = -v;
        }
        std::ostringstream mono;
        bool anysym = false;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                int e = it->first[static_cast<size_t>((i - 1) * n + (j - 1))];
                if (e == 0)
                    continue;
                if (anysym)
                    mono << "*";
                mono << "q" << i << j;
                if (e != 1)
                    mono << "^" << e;
                anysym = true;
            }
        }
        if (!anysym) {
            os << to_string(v);
        } else {
            if (v != 1)
                os << to_string(v) << "*";
            os << mono.str();
        }
        firstterm = false;
    }
    return os.str();
}

std::string to_string(const Scalar& s) {
    if (s.is_rational())
        return to_string(s.rational());
    if (s.is_algebraic())
        return to_string(s.algebraic());
    return to_string(s.laurent());
}

namespace {

struct ScalarParser {
    const std::string& text;
    size_t pos = 0;
    int n;
    NumberFieldPtr field;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) +
                                    " in \"" + text + "\": " + what);
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected integer");
        return std::stoi(text.substr(start, pos - start));
    }

    Scalar parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Scalar acc = parse_term();
        if (neg)
            acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    Scalar parse_term() {
        Scalar acc = parse_factor();
        while (eat('*'))
            acc = acc * parse_factor();
        return acc;
    }

    Scalar parse_factor() {
        Scalar base = parse_atom();
        skip_ws();
        if (eat('^'))
            return base.pow(parse_int());
        return base;
    }

    Scalar parse_atom() {
        skip_ws();
        if (pos >= text.size())
            fail("unexpected end of input");
        if (eat('(')) {
            Scalar s = parse_expr();
            if (!eat(')'))
                fail("expected ')'");
            return s;
        }
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            std::string num = text.substr(start, pos - start);
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                size_t dstart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (dstart == pos)
                    fail("expected denominator");
                std::string den = text.substr(dstart, pos - dstart);
                return Scalar(Rational(boost::multiprecision::cpp_int(num),
                                       boost::multiprecision::cpp_int(den)));
            }
            return Scalar(Rational(boost::multiprecision::cpp_int(num)));
        }
        if (c == 'q' && n > 0) {
            if (pos + 2 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[pos + 1])) &&
                std::isdigit(static_cast<unsigned char>(text[pos + 2]))) {
                int i = text[pos + 1] - '0';
                int j = text[pos + 2] - '0';
                pos += 3;
                if (i < 1 || i > n || j < 1 || j > n)
                    fail("q symbol index out of range");
                return Scalar::q_symbol(n, i, j);
            }
            fail("expected two digits after 'q'");
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (field && name == field->gen_name())
                return Scalar(Algebraic::generator(field));
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected character");
    }
};

} // namespace

Scalar parse_scalar(const std::string& text, int matrix_size, NumberFieldPtr field) {
    ScalarParser p{text, 0, matrix_size, std::move(field)};
    Scalar s = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return s;
}

std::vector<Rational> parse_modulus(const std::string& text) {
    // Monic integer polynomial in a single letter variable, e.g. "t^2+t+1".
    std::vector<Rational> coeffs;
    size_t pos = 0;
    char var = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size())
            break;
        int sign = 1;
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in modulus: " + text);
        }
        skip();
        long long coef = 1;
        bool sawnum = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            coef = std::stoll(text.substr(start, pos - start));
            sawnum = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
        }
        int exp = 0;
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            if (var == 0)
                var = text[pos];
            else if (text[pos] != var)
                throw std::invalid_argument("modulus must be univariate: " + text);
            ++pos;
            exp = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (start == pos)
                    throw std::invalid_argument("expected exponent in modulus: " + text);
                exp = std::stoi(text.substr(start, pos - start));
            }
        } else if (!sawnum) {
            throw std::invalid_argument("expected term in modulus: " + text);
        }
        if (coeffs.size() < static_cast<size_t>(exp) + 1)
            coeffs.resize(static_cast<size_t>(exp) + 1, Rational(0));
        coeffs[static_cast<size_t>(exp)] += sign * Rational(coef);
        first = false;
    }
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
    if (coeffs.size() < 3)
        throw std::invalid_argument("extension degree must be >= 2: " + text);
    if (coeffs.back() != 1)
        throw std::invalid_argument("modulus must be monic: " + text);
    return coeffs;
}

} // namespace lyndon
