#ifndef LYNDON_CLOSED_SETS_HPP
#define LYNDON_CLOSED_SETS_HPP

#include <vector>

#include "lyndon/words.hpp"

// Closed sets of Lyndon words and the maps Phi, PhiBar, Psi, Upsilon.
// A set U of Lyndon words is closed when it contains every letter and every
// Lyndon factor of each of its members.

namespace lyndon {

/// A finite closed set, kept deglex-sorted.
class ClosedSet {
public:
    ClosedSet(AlphabetPtr alph, std::vector<LyndonWord> elements);

    const AlphabetPtr& alphabet() const { return alph_; }
    const std::vector<LyndonWord>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }
    bool contains(const Word& w) const;

    /// Elements sorted lex-descending: z_1 >_lex z_2 >_lex ... >_lex z_d.
    std::vector<LyndonWord> lex_descending() const;

private:
    AlphabetPtr alph_;
    std::vector<LyndonWord> elems_;
};

bool is_closed(const Alphabet& a, const std::vector<LyndonWord>& elements);

/// Smallest closed set containing seed (letters and all Lyndon factors added).
ClosedSet close(AlphabetPtr alph, const std::vector<LyndonWord>& seed);

/// Phi(U): minimal Lyndon non-members of U, i.e. the v in L\U with no proper
/// factor in L\U. Finite for finite closed U (contained in the pairwise
/// concatenations of U), deglex-sorted. Always an antichain.
std::vector<LyndonWord> phi(const ClosedSet& U);

/// PhiBar(U): the v in L\U whose Shirshov parts both lie in U. Contains Phi(U).
std::vector<LyndonWord> phibar(const ClosedSet& U);

/// Psi(V): Lyndon words of degree <= degree_cap with no factor in V.
/// V must contain no letters.
std::vector<LyndonWord> psi(const Alphabet& a, const std::vector<LyndonWord>& V, int degree_cap);

/// Phi computed against a degree-truncated (possibly infinite) closed set:
/// members is U restricted to degree <= degree_cap; output is
/// Phi(U) restricted to degree <= degree_cap.
std::vector<LyndonWord> phi_bounded(const Alphabet& a, const std::vector<LyndonWord>& members,
                                    int degree_cap);

/// Upsilon(U): lex-adjacent pairs u >_lex v of U, in descending order of u.
std::vector<std::pair<LyndonWord, LyndonWord>> upsilon(const ClosedSet& U);

/// Fibonacci words f_0 = x1, f_1 = x2, f_{2r} = f_{2r-1}f_{2r-2},
/// f_{2r+1} = f_{2r-1}f_{2r}; requires a two-letter alphabet.
std::vector<LyndonWord> fibonacci_words(AlphabetPtr alph, int count);

/// U_p = {f_0, ..., f_{p-1}}, closed for every p >= 2.
ClosedSet fibonacci_closed(AlphabetPtr alph, int p);

/// The paper's formula for Phi(U_p):
/// {f_{2r-1}f_{2r+1} | 2r+1 <= p} u {f_{2r}f_{2r-2} | 2r <= p} u {f_p}.
std::vector<LyndonWord> fibonacci_phi_formula(AlphabetPtr alph, int p);

std::vector<LyndonWord> sort_deglex(std::vector<LyndonWord> ws, const Alphabet& a);
bool contains_word(const std::vector<LyndonWord>& ws, const Word& w);

} // namespace lyndon

#endif
