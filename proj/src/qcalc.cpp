#include "lyndon/qcalc.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lyndon {

QMatrix::QMatrix(int n, std::vector<Scalar> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 1 || entries_.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("bad q matrix size");
    for (const Scalar& s : entries_)
        if (s.is_numeric() && s.is_zero())
            throw std::invalid_argument("q matrix entries must be nonzero");
}

QMatrix QMatrix::symbolic(int n) {
    std::vector<Scalar> entries;
    entries.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            entries.push_back(Scalar::q_symbol(n, i, j));
    return QMatrix(n, std::move(entries));
}

QMatrix QMatrix::constant(int n, const Scalar& value) {
    return QMatrix(n, std::vector<Scalar>(static_cast<size_t>(n) * static_cast<size_t>(n), value));
}

const Scalar& QMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("q matrix index");
    return entries_[static_cast<size_t>((i - 1) * n_ + (j - 1))];
}

bool QMatrix::is_numeric() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& s) { return s.is_numeric(); });
}

QContext::QContext(AlphabetPtr alph, QMatrix q) : alph_(std::move(alph)), q_(std::move(q)) {
    const Alphabet& base = alph_->is_extended() ? *alph_->base() : *alph_;
    if (base.size() != q_.size())
        throw std::invalid_argument("q matrix size does not match the base alphabet");
}

Scalar QContext::q_of(const Word& u, const Word& v) const {
    // Multiplicative in the letters on both sides, so it only depends on the
    // base constitutes: q_{u,v} = prod q_{ab}^{r_a(u) r_b(v)}.
    int n = q_.size();
    std::vector<long long> ru(static_cast<size_t>(n), 0), rv(static_cast<size_t>(n), 0);
    for (int l : u.letters()) {
        const auto& c = alph_->base_constitute(l);
        for (int a = 0; a < n; ++a)
            ru[static_cast<size_t>(a)] += c[static_cast<size_t>(a)];
    }
    for (int l : v.letters()) {
        const auto& c = alph_->base_constitute(l);
        for (int b = 0; b < n; ++b)
            rv[static_cast<size_t>(b)] += c[static_cast<size_t>(b)];
    }
    Scalar out = Scalar::one();
    for (int a = 1; a <= n; ++a) {
        if (ru[static_cast<size_t>(a - 1)] == 0)
            continue;
        for (int b = 1; b <= n; ++b) {
            long long e = ru[static_cast<size_t>(a - 1)] * rv[static_cast<size_t>(b - 1)];
            if (e != 0)
                out = out * q_.at(a, b).pow(static_cast<int>(e));
        }
    }
    return out;
}

NcPoly QContext::bracket(const Word& u, const Word& v) const {
    NcPoly f(alph_);
    f.add_term(u.concat(v), Scalar::one());
    f.add_term(v.concat(u), -q_of(u, v));
    return f;
}

NcPoly QContext::bracket(const NcPoly& f, const NcPoly& g) const {
    NcPoly out(alph_);
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms()) {
            Scalar c = cu * cv;
            out.add_term(u.concat(v), c);
            out.add_term(v.concat(u), -(c * q_of(u, v)));
        }
    return out;
}

const NcPoly& QContext::super_letter(const LyndonWord& u) const {
    auto it = cache_.find(u.word().letters());
    if (it != cache_.end())
        return it->second;
    NcPoly val(alph_);
    if (u.is_letter()) {
        val.add_term(u.word(), Scalar::one());
    } else {
        val = bracket(super_letter(u.sh_left()), super_letter(u.sh_right()));
    }
    return cache_.emplace(u.word().letters(), std::move(val)).first->second;
}

NcPoly QContext::super_word(const std::vector<LyndonWord>& tuple) const {
    NcPoly out = NcPoly::monomial(alph_, Word{});
    for (const LyndonWord& u : tuple)
        out = out * super_letter(u);
    return out;
}

SuperWordExpr::SuperWordExpr(AlphabetPtr alph) : alph_(std::move(alph)) {}

namespace {

std::vector<std::vector<int>> tuple_key(const std::vector<LyndonWord>& t) {
    std::vector<std::vector<int>> key;
    key.reserve(t.size());
    for (const LyndonWord& u : t)
        key.push_back(u.word().letters());
    return key;
}

} // namespace

void SuperWordExpr::add_term(const Tuple& t, const Scalar& c) {
    if (c.is_zero())
        return;
    auto key = tuple_key(t);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::make_pair(t, c));
    } else {
        it->second.second = it->second.second + c;
        if (it->second.second.is_zero())
            terms_.erase(it);
    }
}

SuperWordExpr SuperWordExpr::operator+(const SuperWordExpr& o) const {
    SuperWordExpr out = *this;
    for (const auto& [key, tc] : o.terms_) {
        (void)key;
        out.add_term(tc.first, tc.second);
    }
    return out;
}

SuperWordExpr SuperWordExpr::scaled(const Scalar& c) const {
    SuperWordExpr out(alph_);
    if (c.is_zero())
        return out;
    for (const auto& [key, tc] : terms_) {
        (void)key;
        out.add_term(tc.first, tc.second * c);
    }
    return out;
}

bool SuperWordExpr::operator==(const SuperWordExpr& o) const {
    if (terms_.size() != o.terms_.size())
        return false;
    for (const auto& [key, tc] : terms_) {
        auto it = o.terms_.find(key);
        if (it == o.terms_.end() || !(it->second.second == tc.second))
            return false;
    }
    return true;
}

NcPoly SuperWordExpr::expand(const QContext& ctx) const {
    NcPoly out(alph_);
    for (const auto& [key, tc] : terms_) {
        (void)key;
        out = out + ctx.super_word(tc.first).scaled(tc.second);
    }
    return out;
}

SuperWordExpr to_superword_basis(const NcPoly& f, const QContext& ctx) {
    // Triangular: the monotonic tuple for lw(f) is its Lyndon decomposition;
    // subtracting lc(f) times that super-word strictly lowers the leading word.
    SuperWordExpr out(f.alphabet());
    NcPoly rest = f;
    while (!rest.is_zero()) {
        Word w = rest.leading_word();
        Scalar c = rest.leading_coeff();
        std::vector<LyndonWord> tuple = lyndon_decomposition(w);
        out.add_term(tuple, c);
        rest = rest - ctx.super_word(tuple).scaled(c);
        if (!rest.is_zero() && !deglex_less(rest.leading_word(), w, *f.alphabet()))
            throw std::logic_error("superword expansion did not lower the leading word");
    }
    return out;
}

BraidedTensor::BraidedTensor(AlphabetPtr alph) : alph_(std::move(alph)) {}

void BraidedTensor::add_term(const Word& a, const Word& b, const Scalar& c) {
    if (c.is_zero())
        return;
    auto key = std::make_pair(a.letters(), b.letters());
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BraidedTensor BraidedTensor::operator+(const BraidedTensor& o) const {
    BraidedTensor out = *this;
    for (const auto& [key, c] : o.terms_)
        out.add_term(Word(key.first), Word(key.second), c);
    return out;
}

BraidedTensor BraidedTensor::operator-() const {
    BraidedTensor out(alph_);
    for (const auto& [key, c] : terms_)
        out.terms_.emplace(key, -c);
    return out;
}

BraidedTensor BraidedTensor::multiply(const BraidedTensor& o, const QContext& ctx) const {
    // (a x b)(c x d) = q_{b,c} (ac x bd)
    BraidedTensor out(alph_);
    for (const auto& [k1, c1] : terms_) {
        Word a(k1.first), b(k1.second);
        for (const auto& [k2, c2] : o.terms_) {
            Word c(k2.first), d(k2.second);
            out.add_term(a.concat(c), b.concat(d), c1 * c2 * ctx.q_of(b, c));
        }
    }
    return out;
}

bool BraidedTensor::operator==(const BraidedTensor& o) const {
    if (terms_.size() != o.terms_.size())
        return false;
    for (const auto& [key, c] : terms_) {
        auto it = o.terms_.find(key);
        if (it == o.terms_.end() || !(it->second == c))
            return false;
    }
    return true;
}

BraidedTensor coproduct(const NcPoly& f, const QContext& ctx) {
    BraidedTensor out(f.alphabet());
    for (const auto& [w, c] : f.terms()) {
        BraidedTensor acc(f.alphabet());
        acc.add_term(Word{}, Word{}, c);
        for (int l : w.letters()) {
            BraidedTensor delta(f.alphabet());
            delta.add_term(Word::letter(l), Word{}, Scalar::one());
            delta.add_term(Word{}, Word::letter(l), Scalar::one());
            acc = acc.multiply(delta, ctx);
        }
        out = out + acc;
    }
    return out;
}

bool is_primitive(const NcPoly& f, const QContext& ctx) {
    BraidedTensor expected(f.alphabet());
    for (const auto& [w, c] : f.terms()) {
        expected.add_term(w, Word{}, c);
        expected.add_term(Word{}, w, c);
    }
    return coproduct(f, ctx) == expected;
}

namespace {

// Row-echelon span of polynomials, keyed by leading word. Insertion divides
// by leading coefficients; a non-unit pivot in symbolic mode throws.
class Echelon {
public:
    explicit Echelon(AlphabetPtr alph) : alph_(std::move(alph)) {}

    NcPoly reduce(NcPoly f) const {
        while (!f.is_zero()) {
            auto it = rows_.find(f.leading_word().letters());
            if (it == rows_.end())
                return f;
            f = f - it->second.scaled(f.leading_coeff());
        }
        return f;
    }

    void insert(const NcPoly& f) {
        NcPoly r = reduce(f);
        if (r.is_zero())
            return;
        r = r.scaled(r.leading_coeff().inverse());
        rows_.emplace(r.leading_word().letters(), std::move(r));
    }

    bool contains(const NcPoly& f) const { return reduce(f).is_zero(); }

private:
    AlphabetPtr alph_;
    std::map<std::vector<int>, NcPoly> rows_;
};

} // namespace

bool braiding_stable(const std::vector<NcPoly>& G, const QContext& ctx) {
    if (G.empty())
        return true;
    bool all_ch = std::all_of(G.begin(), G.end(),
                              [](const NcPoly& g) { return g.is_constitute_homogeneous(); });
    if (all_ch)
        return true; // twists are scalar multiples
    Echelon span(ctx.alphabet());
    for (const NcPoly& g : G)
        span.insert(g);
    for (const NcPoly& g : G) {
        for (int j = 1; j <= ctx.alphabet()->size(); ++j) {
            Word xj = Word::letter(j);
            NcPoly right(ctx.alphabet()), left(ctx.alphabet());
            for (const auto& [w, c] : g.terms()) {
                right.add_term(w, c * ctx.q_of(w, xj));
                left.add_term(w, c * ctx.q_of(xj, w));
            }
            if (!span.contains(right) || !span.contains(left))
                return false;
        }
    }
    return true;
}

namespace {

void monotonic_tuples(const std::vector<LyndonWord>& pool, const Alphabet& a, int remaining,
                      size_t from, std::vector<LyndonWord>& cur,
                      std::vector<std::vector<LyndonWord>>& out) {
    if (remaining == 0) {
        if (!cur.empty())
            out.push_back(cur);
        return;
    }
    for (size_t k = from; k < pool.size(); ++k) {
        int d = degree(pool[k].word(), a);
        if (d > remaining)
            continue;
        cur.push_back(pool[k]);
        monotonic_tuples(pool, a, remaining - d, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

bool is_hard(const LyndonWord& u, const RelationSet& G, const QContext& ctx) {
    if (!ctx.q().is_numeric())
        throw std::invalid_argument("hardness needs a numeric q matrix");
    GroebnerReport rep = is_groebner(G);
    if (!rep.ok())
        throw std::invalid_argument("hardness is defined against a Groebner set");
    int d = degree(u.word(), *ctx.alphabet());
    std::vector<LyndonWord> pool;
    for (LyndonWord& w : generate_lyndon(*ctx.alphabet(), d))
        if (lex_less(w.word(), u.word()))
            pool.push_back(std::move(w));
    std::sort(pool.begin(), pool.end(), [](const LyndonWord& x, const LyndonWord& y) {
        return lex_less(x.word(), y.word());
    });
    std::vector<std::vector<LyndonWord>> tuples;
    std::vector<LyndonWord> cur;
    monotonic_tuples(pool, *ctx.alphabet(), d, 0, cur, tuples);
    Echelon span(ctx.alphabet());
    for (const auto& t : tuples)
        span.insert(normal_form(ctx.super_word(t), G));
    return !span.contains(normal_form(ctx.super_letter(u), G));
}

SuperWordExpr parse_superword_expr(const std::string& text, AlphabetPtr alph, int matrix_size,
                                   NumberFieldPtr field) {
    SuperWordExpr out(alph);
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip();
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
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
        size_t lb = chunk.find('[');
        if (lb == std::string::npos)
            throw std::invalid_argument("super-word term without brackets: " + chunk);
        std::string coefstr = chunk.substr(0, lb);
        while (!coefstr.empty() &&
               (std::isspace(static_cast<unsigned char>(coefstr.back())) || coefstr.back() == '*'))
            coefstr.pop_back();
        Scalar c = coefstr.empty() ? Scalar::one() : parse_scalar(coefstr, matrix_size, field);
        std::vector<LyndonWord> tuple;
        size_t p = lb;
        while (p < chunk.size()) {
            if (std::isspace(static_cast<unsigned char>(chunk[p]))) {
                ++p;
                continue;
            }
            if (chunk[p] != '[')
                throw std::invalid_argument("expected '[' in super-word: " + chunk);
            size_t rb = chunk.find(']', p);
            if (rb == std::string::npos)
                throw std::invalid_argument("unterminated bracket in super-word: " + chunk);
            tuple.emplace_back(parse_word(chunk.substr(p + 1, rb - p - 1), *alph));
            p = rb + 1;
        }
        out.add_term(tuple, sign < 0 ? -c : c);
        skip();
        if (pos >= text.size())
            break;
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    return out;
}

std::string to_string(const SuperWordExpr& e) {
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, tc] : e.terms()) {
        (void)key;
        Scalar c = tc.second;
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
        if (cs != "1") {
            if (cs.find(' ') != std::string::npos)
                os << "(" << cs << ")*";
            else
                os << cs << "*";
        }
        for (const LyndonWord& w : tc.first) {
            std::ostringstream ws;
            for (int l : w.word().letters())
                ws << l;
            os << "[" << ws.str() << "]";
        }
        first = false;
    }
    return os.str();
}

} // namespace lyndon
