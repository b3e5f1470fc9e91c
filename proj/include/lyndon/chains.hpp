#ifndef LYNDON_CHAINS_HPP
#define LYNDON_CHAINS_HPP

#include <string>
#include <vector>

#include "lyndon/closed_sets.hpp"
#include "lyndon/words.hpp"

// The graph of chains on an antichain V and p-chain enumeration.
// Vertices are {1} u (X\V) u S where S holds the proper suffixes of V-words
// of length >= 2; u -> v exists iff uv has a unique factor in V and that
// factor is a suffix of uv.

namespace lyndon {

bool is_antichain(const std::vector<Word>& V);

struct ChainGraph {
    AlphabetPtr alph;
    std::vector<Word> vertices;                     // vertices[0] is the empty word (root)
    std::vector<std::pair<size_t, size_t>> arrows;  // index pairs into vertices

    std::vector<size_t> successors(size_t v) const;
};

ChainGraph chain_graph(AlphabetPtr alph, const std::vector<Word>& V);

/// All products v_1...v_p over paths 1 -> v_1 -> ... -> v_p, deglex-sorted.
/// C_0 = {1}, C_1 = X\V, C_2 = V\X.
std::vector<Word> chains(const ChainGraph& g, int p);
std::vector<Word> chains(AlphabetPtr alph, const std::vector<Word>& V, int p);

struct ChainUniquenessReport {
    bool pass = false;
    size_t d = 0;
    Word expected;              // z_1 z_2 ... z_d, z's lex-descending
    std::vector<Word> c_d;      // C_d(Phi(U))
    std::vector<Word> c_d1;     // C_{d+1}
    std::vector<Word> c_d2;     // C_{d+2}
    std::string detail;
};

/// Checks C_d(Phi(U)) = {z_1...z_d} for U = {z_1 > ... > z_d} and that
/// C_{d+1} and C_{d+2} are empty.
ChainUniquenessReport verify_chain_uniqueness(const ClosedSet& U);

} // namespace lyndon

#endif
