#ifndef LYNDON_QCALC_HPP
#define LYNDON_QCALC_HPP

#include <map>
#include <vector>

#include "lyndon/groebner.hpp"
#include "lyndon/ncpoly.hpp"
#include "lyndon/words.hpp"

// The q-deformed calculus: bicharacter q_{u,v}, bracket [u,v] = uv - q_{u,v}vu,
// super-letters [u] built along Shirshov factorizations, the monotonic
// super-word basis, and the braided coproduct.

namespace lyndon {

/// n x n matrix of nonzero scalars. Symbolic matrices carry the Laurent
/// generators q_{ij}; numeric ones carry rationals or extension elements.
class QMatrix {
public:
    QMatrix(int n, std::vector<Scalar> entries); // row-major
    static QMatrix symbolic(int n);
    static QMatrix constant(int n, const Scalar& value);

    int size() const { return n_; }
    const Scalar& at(int i, int j) const;
    bool is_numeric() const;

private:
    int n_;
    std::vector<Scalar> entries_;
};

/// Per-(alphabet, q) session: the bicharacter and a super-letter cache.
/// The bicharacter on extended alphabets pulls back through underlying words.
class QContext {
public:
    QContext(AlphabetPtr alph, QMatrix q);

    const AlphabetPtr& alphabet() const { return alph_; }
    const QMatrix& q() const { return q_; }

    /// q_{u,v}: multiplicative in the letters of both arguments;
    /// q_{u,1} = q_{1,u} = 1.
    Scalar q_of(const Word& u, const Word& v) const;

    /// [f,g] = sum over word pairs of c_u d_v (uv - q_{u,v} vu).
    NcPoly bracket(const NcPoly& f, const NcPoly& g) const;
    NcPoly bracket(const Word& u, const Word& v) const;

    /// Super-letter expansion [u]: [x_i] = x_i, [u] = [[u'],[u'']] on sh(u).
    /// Monic, leading word u, constitute-homogeneous. Cached.
    const NcPoly& super_letter(const LyndonWord& u) const;

    /// Product [u_1]...[u_r] as a plain polynomial.
    NcPoly super_word(const std::vector<LyndonWord>& tuple) const;

private:
    AlphabetPtr alph_;
    QMatrix q_;
    mutable std::map<std::vector<int>, NcPoly> cache_;
};

/// Formal sum of tuples of super-letters. The public basis form keeps tuples
/// monotonic (lex-non-decreasing); intermediate rewriting may hold arbitrary
/// tuples.
class SuperWordExpr {
public:
    using Tuple = std::vector<LyndonWord>;

    explicit SuperWordExpr(AlphabetPtr alph);

    const AlphabetPtr& alphabet() const { return alph_; }
    const std::map<std::vector<std::vector<int>>, std::pair<Tuple, Scalar>>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Tuple& t, const Scalar& c);
    SuperWordExpr operator+(const SuperWordExpr& o) const;
    SuperWordExpr scaled(const Scalar& c) const;
    bool operator==(const SuperWordExpr& o) const;

    /// Expand back to a plain polynomial through a context.
    NcPoly expand(const QContext& ctx) const;

private:
    AlphabetPtr alph_;
    // Key: letter sequences of the tuple entries (structural, alphabet-free).
    std::map<std::vector<std::vector<int>>, std::pair<Tuple, Scalar>> terms_;
};

/// The unique expansion of f in the monotonic super-word basis; inverse of
/// SuperWordExpr::expand.
SuperWordExpr to_superword_basis(const NcPoly& f, const QContext& ctx);

/// Element of the braided tensor square: a finite sum of word pairs with
/// multiplication (a x b)(c x d) = q_{b,c} (ac x bd).
class BraidedTensor {
public:
    explicit BraidedTensor(AlphabetPtr alph);

    const std::map<std::pair<std::vector<int>, std::vector<int>>, Scalar>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& a, const Word& b, const Scalar& c);
    BraidedTensor operator+(const BraidedTensor& o) const;
    BraidedTensor operator-() const;
    BraidedTensor multiply(const BraidedTensor& o, const QContext& ctx) const;
    bool operator==(const BraidedTensor& o) const;

private:
    AlphabetPtr alph_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Scalar> terms_;
};

/// Delta(x_i) = x_i x 1 + 1 x x_i extended as an algebra map into the braided
/// tensor square.
BraidedTensor coproduct(const NcPoly& f, const QContext& ctx);

/// Delta(f) = f x 1 + 1 x f, checked exactly.
bool is_primitive(const NcPoly& f, const QContext& ctx);

/// c-stability of kG x k<X> + k<X> x kG: for every g and letter x_j the
/// left/right q-twists of g must stay in span(G). Constitute-homogeneous
/// relation sets pass structurally.
bool braiding_stable(const std::vector<NcPoly>& G, const QContext& ctx);

/// Hard super-letter test modulo a Groebner set (numeric q): [u] is hard iff
/// its normal form is not in the span of the normal forms of same-degree
/// monotonic super-words in lex-smaller super-letters.
bool is_hard(const LyndonWord& u, const RelationSet& G, const QContext& ctx);

std::string to_string(const SuperWordExpr& e);

/// Parses "c*[u1][u2]" sums, e.g. "q21*[21][21] - [221][1]".
SuperWordExpr parse_superword_expr(const std::string& text, AlphabetPtr alph,
                                   int matrix_size = 0, NumberFieldPtr field = nullptr);

} // namespace lyndon

#endif
