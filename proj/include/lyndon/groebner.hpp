#ifndef LYNDON_GROEBNER_HPP
#define LYNDON_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "lyndon/ncpoly.hpp"

// Ordered rewriting in the free algebra: reduction modulo a relation set,
// overlap/inclusion ambiguities, compositions, the Groebner property and
// bounded Buchberger completion. Relations are monic and homogeneous; the
// reduction strategy (deglex-largest reducible word first, earliest-listed
// matching relation, leftmost occurrence) is fixed so that failure residuals
// are deterministic.

namespace lyndon {

class RelationSet {
public:
    RelationSet(AlphabetPtr alph, std::vector<NcPoly> polys);

    const AlphabetPtr& alphabet() const { return alph_; }
    const std::vector<NcPoly>& polys() const { return polys_; }
    size_t size() const { return polys_.size(); }
    bool empty() const { return polys_.empty(); }

    std::vector<Word> leading_words() const;
    bool is_reduced() const;

private:
    AlphabetPtr alph_;
    std::vector<NcPoly> polys_;
};

struct Ambiguity {
    enum class Kind { Inclusion, Overlap };
    size_t i = 0, j = 0;  // relation indices: l1*lw(f_i)*r1 = l2*lw(f_j)*r2
    Word l1, r1, l2, r2;
    Kind kind = Kind::Overlap;
};

struct GroebnerReport {
    enum class Status { Groebner, NotGroebner, BoundedPass };
    Status status = Status::Groebner;
    size_t compositions_checked = 0;
    std::vector<std::pair<Ambiguity, NcPoly>> failures;
    std::optional<int> degree_bound;

    bool ok() const { return status != Status::NotGroebner; }
};

/// Fully reduces f modulo G; the output has no word reducible modulo G.
NcPoly normal_form(const NcPoly& f, const RelationSet& G);

/// All inclusion and overlap ambiguities among pairs of leading words,
/// including self-overlaps, in deterministic order.
std::vector<Ambiguity> ambiguities(const RelationSet& G);

NcPoly composition(const NcPoly& f1, const NcPoly& f2, const Ambiguity& amb);

/// Checks that every composition reduces to zero. Residuals of failing
/// compositions are reported. By default G is inter-reduced first, which
/// rules out inclusion ambiguities.
GroebnerReport is_groebner(const RelationSet& G, bool reduce_first = true);

/// Inter-reduction to the reduced form generating the same ideal.
RelationSet reduce_set(const RelationSet& G);

/// Buchberger completion truncated at degree_bound; the result is a Groebner
/// set for the ideal in degrees <= degree_bound.
RelationSet complete(const RelationSet& G, int degree_bound);

/// Words with no factor in lw(G), graded by degree 0..cap.
std::vector<std::vector<Word>> irr_words(const RelationSet& G, int degree_cap);
std::vector<size_t> irr_counts(const RelationSet& G, int degree_cap);

/// Minimal elements of lw(G) under the factor order.
std::vector<Word> obstructions(const RelationSet& G);

std::string to_string(const Ambiguity& amb, const Alphabet& a);

} // namespace lyndon

#endif
