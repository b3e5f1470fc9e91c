#ifndef LYNDON_NCPOLY_HPP
#define LYNDON_NCPOLY_HPP

#include <map>
#include <optional>
#include <string>

#include "lyndon/scalar.hpp"
#include "lyndon/words.hpp"

namespace lyndon {

/// Noncommutative polynomial: a finite map Word -> nonzero Scalar over a
/// fixed alphabet, with deglex leading-word structure.
class NcPoly {
public:
    explicit NcPoly(AlphabetPtr alph);
    static NcPoly monomial(AlphabetPtr alph, const Word& w, const Scalar& c = Scalar::one());

    const AlphabetPtr& alphabet() const { return alph_; }
    const std::map<Word, Scalar, DeglexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Word& leading_word() const;
    const Scalar& leading_coeff() const;
    const Scalar& coeff(const Word& w) const; // zero scalar if absent

    bool is_homogeneous() const;
    /// All words share one occurrence-count vector.
    bool is_constitute_homogeneous() const;
    std::optional<int> homogeneous_degree() const;

    void add_term(const Word& w, const Scalar& c);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly scaled(const Scalar& c) const;
    /// a * this * b for words a, b.
    NcPoly framed(const Word& a, const Word& b) const;
    NcPoly monic() const; // divides by the leading coefficient (must be a unit)

    bool operator==(const NcPoly& o) const;
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

private:
    AlphabetPtr alph_;
    std::map<Word, Scalar, DeglexLess> terms_;
};

std::string to_string(const NcPoly& f);

/// Parses "211 - 2*121 + 112" style sums of coef*word terms; word syntax from
/// the words module, scalar syntax from the scalars module.
NcPoly parse_ncpoly(const std::string& text, AlphabetPtr alph, int matrix_size = 0,
                    NumberFieldPtr field = nullptr);

} // namespace lyndon

#endif
