#ifndef LYNDON_PRESENTATION_HPP
#define LYNDON_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lyndon/closed_sets.hpp"
#include "lyndon/qcalc.hpp"

// The algebra A(U,q) = k<X>/(G(U,q)) with G(U,q) = {[v] | v in PhiBar(U)},
// its presentation H on the extended alphabet X_U, the J(u,v,w) compositions
// whose triviality certifies the Groebner property, regularity certification
// along both theorem routes, and symbolic condition extraction.

namespace lyndon {

/// X_U together with the letter map rho.
struct ExtendedAlphabet {
    AlphabetPtr ext;
    std::map<std::vector<int>, int> rho; // underlying base word -> letter index

    int letter_of(const Word& base_word) const;
    Word word_of(const std::vector<LyndonWord>& tuple) const;
};

ExtendedAlphabet extend_alphabet(const ClosedSet& U);

/// Optional g_v values for v in PhiBar(U); missing entries mean g_v = 0
/// (the A(U,q) construction). Values must be homogeneous of degree deg(v),
/// supported on tuples over U whose concatenations are lex-smaller than v.
using GValueMap = std::map<std::vector<int>, SuperWordExpr>;

/// G(U,q): the super-letter expansions of all v in PhiBar(U), over X.
RelationSet build_G(const ClosedSet& U, const QMatrix& q);

/// c_{(u|u')}: rewrites [[u],[u']] into a combination of monotonic
/// super-words over U, all concatenations <=_lex uu', congruent modulo the
/// ideal generated by {[v] - g_v}.
SuperWordExpr c_value(const LyndonWord& u, const LyndonWord& v, const ClosedSet& U,
                      const GValueMap& g, const QContext& ctx);

struct PairRelation {
    LyndonWord u, v;    // u >_lex v, members of U
    SuperWordExpr c;    // c_{(u|v)} over the base alphabet
    NcPoly h;           // transliteration of c to X_U
    NcPoly relation;    // [x_u, x_v] - h, monic with leading word x_u x_v
};

class PresentationH {
public:
    PresentationH(ClosedSet U, QMatrix q, GValueMap g = {},
                  std::optional<int> degree_cap = std::nullopt);

    const ClosedSet& closed_set() const { return U_; }
    const ExtendedAlphabet& extended() const { return ext_; }
    const QContext& base_context() const { return base_ctx_; }
    const QContext& ext_context() const { return ext_ctx_; }
    const std::vector<PairRelation>& pairs() const { return pairs_; }
    std::optional<int> degree_cap() const { return cap_; }

    const NcPoly& h_of(const Word& u, const Word& v) const;
    RelationSet relations() const;

private:
    ClosedSet U_;
    ExtendedAlphabet ext_;
    QContext base_ctx_;
    QContext ext_ctx_;
    std::vector<PairRelation> pairs_;
    std::optional<int> cap_;
};

PresentationH build_H(const ClosedSet& U, const QMatrix& q, const GValueMap& g = {},
                      std::optional<int> degree_cap = std::nullopt);

/// J(u,v,w) = [h_{u,v}, x_w] - [x_u, h_{v,w}] + q_{u,v} x_v h_{u,w}
///          - q_{v,w} h_{u,w} x_v, over X_U.
NcPoly jacobi_J(const LyndonWord& u, const LyndonWord& v, const LyndonWord& w,
                const PresentationH& H);

enum class CertifyRoute { Theorem39, Theorem312 };

struct Certificate {
    enum class Status { Certified, Refuted, Undetermined };
    Status status = Status::Refuted;
    CertifyRoute route = CertifyRoute::Theorem39;
    size_t gldim = 0;
    size_t gkdim = 0;
    int gorenstein_parameter = 0;
    // Reported as consequences of the certifying theorems, never computed.
    bool strongly_noetherian = false;
    bool auslander_regular = false;
    bool cohen_macaulay = false;
    size_t compositions_checked = 0;
    size_t triples_checked = 0;
    std::vector<std::string> witnesses;

    bool certified() const { return status == Status::Certified; }
};

/// Route Theorem39: Groebner check of G(U,q) cross-checked against
/// triviality of all J(u,v,w) modulo H. Route Theorem312: a user-supplied
/// Groebner G in the sandwich Phi(U) subset lw(G) subset L\U whose members
/// are primitive, with a c-stable span. Numeric q only.
Certificate certify(const ClosedSet& U, const QMatrix& q, CertifyRoute route,
                    const std::optional<RelationSet>& user_G = std::nullopt);

struct Condition {
    LaurentPoly poly;                     // normalized
    std::vector<std::string> provenance;  // "J(u,v,w) @ word" entries
};

struct ConditionSystem {
    int matrix_size = 0;
    std::vector<Condition> conditions;
    size_t triples_checked = 0;

    bool empty() const { return conditions.empty(); }
};

/// Builds H symbolically, reduces every J(u,v,w) modulo H and collects the
/// normalized residual coefficients. The common nonzero-q solutions are
/// exactly the q making every checked composition trivial.
ConditionSystem extract_conditions(const ClosedSet& U);

struct FibonacciFailureReport {
    int r = 0;
    bool refuted = false;
    std::string detail;
    std::vector<std::string> conditions;     // r = 5 path
    std::string residual;                    // r >= 6 path
    bool unit_term_present = false;
};

/// r = 5: condition extraction plus the paper's four-equation subsystem,
/// shown unsatisfiable by evaluating along the constraint chain. r >= 6: the
/// symbolic residual of J(x2, x2^2x1x2x1, x2x1) modulo H contains a term
/// with unit coefficient, so no q works.
FibonacciFailureReport fibonacci_failure(AlphabetPtr alph, int r);

std::string to_string(CertifyRoute route);

} // namespace lyndon

#endif
