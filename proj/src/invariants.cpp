#include "lyndon/invariants.hpp"

#include <algorithm>

namespace lyndon {

std::vector<long long> hilbert_product(const ClosedSet& U, int cap) {
    std::vector<long long> h(static_cast<size_t>(cap) + 1, 0);
    h[0] = 1;
    for (const LyndonWord& u : U.elements()) {
        int d = degree(u.word(), *U.alphabet());
        // Multiply by (1 - t^d)^{-1}: prefix sums with stride d.
        for (int m = d; m <= cap; ++m)
            h[static_cast<size_t>(m)] += h[static_cast<size_t>(m - d)];
    }
    return h;
}

std::vector<long long> hilbert_from_irr(const RelationSet& G, int cap) {
    std::vector<long long> h;
    for (size_t c : irr_counts(G, cap))
        h.push_back(static_cast<long long>(c));
    return h;
}

long long fibonacci_bound(int d, int n) {
    if (n < 1 || d < n)
        throw std::invalid_argument("need d >= n >= 1");
    int idx = d - n + 3;
    long long a = 1, b = 1; // a_0, a_1
    for (int i = 2; i <= idx; ++i) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return b + n - 3;
}

size_t gkdim(const ClosedSet& U) {
    return U.size();
}

GlDim gldim_info(const ClosedSet& U) {
    return GlDim{U.size(), true};
}

int gorenstein_parameter(const ClosedSet& U) {
    int l = 0;
    for (const LyndonWord& u : U.elements())
        l += degree(u.word(), *U.alphabet());
    return l;
}

bool validate_setting(const ClosedSet& U, const RelationSet& G) {
    for (const NcPoly& g : G.polys())
        if (!g.is_homogeneous())
            return false;
    std::vector<Word> lws = G.leading_words();
    auto in_lw = [&](const Word& w) {
        return std::any_of(lws.begin(), lws.end(), [&](const Word& v) { return v == w; });
    };
    for (const LyndonWord& v : phi(U))
        if (!in_lw(v.word()))
            return false;
    for (const Word& w : lws) {
        if (!is_lyndon(w) || U.contains(w))
            return false;
    }
    return true;
}

InvariantReport invariant_report(const ClosedSet& U, int hilbert_cap) {
    InvariantReport rep;
    for (const LyndonWord& v : phi(U))
        rep.obstructions.push_back(v.word());
    rep.hilbert = hilbert_product(U, hilbert_cap);
    rep.gkdim = gkdim(U);
    rep.gldim = gldim_info(U);
    rep.gorenstein_parameter = gorenstein_parameter(U);
    if (U.alphabet()->unit_weights()) {
        rep.fibonacci_bound =
            fibonacci_bound(static_cast<int>(U.size()), U.alphabet()->size());
        rep.bound_satisfied = rep.gorenstein_parameter <= *rep.fibonacci_bound;
    }
    return rep;
}

} // namespace lyndon
