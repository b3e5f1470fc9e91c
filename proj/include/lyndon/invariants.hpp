#ifndef LYNDON_INVARIANTS_HPP
#define LYNDON_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "lyndon/closed_sets.hpp"
#include "lyndon/groebner.hpp"

// Invariants of graded algebras whose obstructions are Lyndon words:
// Hilbert series, GK dimension, global dimension, Gorenstein parameter, and
// the Fibonacci bound on the Gorenstein parameter.

namespace lyndon {

/// Coefficients of prod_{u in U} (1 - t^deg(u))^{-1} through degree cap.
std::vector<long long> hilbert_product(const ClosedSet& U, int cap);

/// Irreducible-word counts per degree 0..cap; agrees with the product for a
/// Groebner G with Phi(U) subset lw(G) subset L\U.
std::vector<long long> hilbert_from_irr(const RelationSet& G, int cap);

/// a_{d-n+3} + n - 3 with integer Fibonacci numbers a_0 = a_1 = 1. Exact; the
/// golden-ratio closed form is documentation only. Unit weights assumed.
long long fibonacci_bound(int d, int n);

struct GlDim {
    size_t value = 0;
    bool exact = true; // false: upper bound #Phi(U)+1
};

size_t gkdim(const ClosedSet& U);
GlDim gldim_info(const ClosedSet& U);
int gorenstein_parameter(const ClosedSet& U);

/// The sandwich condition Phi(U) subset lw(G) subset L\U plus homogeneity.
bool validate_setting(const ClosedSet& U, const RelationSet& G);

struct InvariantReport {
    std::vector<Word> obstructions;
    std::vector<long long> hilbert;
    size_t gkdim = 0;
    GlDim gldim;
    int gorenstein_parameter = 0;
    std::optional<long long> fibonacci_bound; // unit weights only
    bool bound_satisfied = true;
};

InvariantReport invariant_report(const ClosedSet& U, int hilbert_cap);

} // namespace lyndon

#endif
