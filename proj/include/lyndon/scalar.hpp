#ifndef LYNDON_SCALAR_HPP
#define LYNDON_SCALAR_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact coefficient arithmetic. Three kinds of scalar share one value type:
// rationals, elements of a single simple extension Q[t]/(m), and Laurent
// polynomials in the q-matrix entries (used for symbolic condition
// extraction). Rationals coerce into the other two; Laurent scalars never
// mix with algebraic ones.

namespace lyndon {

using Rational = boost::multiprecision::cpp_rational;

/// Q[t]/(m) for a monic irreducible m. Only one extension per session is
/// supported; the shipped preset is t^2 + t + 1 (a primitive cube root of 1).
class NumberField {
public:
    NumberField(std::string gen_name, std::vector<Rational> monic_modulus);

    static std::shared_ptr<const NumberField> cyclotomic3(); // t^2 + t + 1

    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<Rational>& modulus() const { return modulus_; } // c0..c_d, c_d = 1
    const std::string& gen_name() const { return gen_name_; }

private:
    std::string gen_name_;
    std::vector<Rational> modulus_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

/// Residue of a polynomial modulo the field's defining polynomial.
class Algebraic {
public:
    Algebraic(NumberFieldPtr field, std::vector<Rational> coeffs);
    static Algebraic from_rational(NumberFieldPtr field, const Rational& r);
    static Algebraic generator(NumberFieldPtr field);

    const NumberFieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; } // size = deg(m), low to high
    bool is_zero() const;
    std::optional<Rational> as_rational() const;

    Algebraic operator+(const Algebraic& o) const;
    Algebraic operator-() const;
    Algebraic operator*(const Algebraic& o) const;
    Algebraic inverse() const;
    bool operator==(const Algebraic& o) const;

private:
    NumberFieldPtr field_;
    std::vector<Rational> coeffs_;
};

/// Sparse Laurent polynomial in the n*n symbols q_{ij}, row-major exponent
/// vectors, rational coefficients, no zero terms stored.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;

    explicit LaurentPoly(int n) : n_(n) {}
    static LaurentPoly constant(int n, const Rational& r);
    /// q_{ij}^e
    static LaurentPoly generator(int n, int i, int j, int e = 1);

    int matrix_size() const { return n_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> as_rational() const;
    /// Unit test: a single term (invertible in the Laurent ring).
    bool is_unit() const { return terms_.size() == 1; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly inverse() const; // throws on non-units

    bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator<(const LaurentPoly& o) const;

    void add_term(const Exponents& e, const Rational& c);

private:
    int n_;
    std::map<Exponents, Rational> terms_;
};

/// Divides by the unique unit making every symbol's minimal exponent zero and
/// the leading rational coefficient one. Idempotent; zero input rejected.
LaurentPoly normalize_condition(const LaurentPoly& p);

class Scalar;
using QAssignment = std::map<std::pair<int, int>, Scalar>;

/// Tagged union of the three scalar kinds with implicit rational promotion.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(const Rational& r) : v_(r) {}
    Scalar(long long i) : v_(Rational(i)) {}
    Scalar(Algebraic a) : v_(std::move(a)) {}
    Scalar(LaurentPoly p) : v_(std::move(p)) {}

    static Scalar zero() { return Scalar(Rational(0)); }
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar q_symbol(int n, int i, int j) { return Scalar(LaurentPoly::generator(n, i, j)); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_algebraic() const { return std::holds_alternative<Algebraic>(v_); }
    bool is_laurent() const { return std::holds_alternative<LaurentPoly>(v_); }
    bool is_numeric() const { return !is_laurent(); }

    const Rational& rational() const { return std::get<Rational>(v_); }
    const Algebraic& algebraic() const { return std::get<Algebraic>(v_); }
    const LaurentPoly& laurent() const { return std::get<LaurentPoly>(v_); }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const;
    /// Inversion of units only; non-unit Laurent scalars throw (a non-monic
    /// division in symbolic mode is a reportable error, never silent).
    Scalar inverse() const;
    Scalar pow(int e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    std::variant<Rational, Algebraic, LaurentPoly> v_;
};

/// Substitution homomorphism; every q_{ij} must be assigned a nonzero
/// numeric value.
Scalar evaluate(const LaurentPoly& p, const QAssignment& assignment);
Scalar evaluate(const Scalar& s, const QAssignment& assignment);

std::string to_string(const Rational& r);
std::string to_string(const Algebraic& a);
std::string to_string(const LaurentPoly& p);
std::string to_string(const Scalar& s);

/// Parses "3/4", "zeta", "q21^-1*q12", sums/products with explicit '*', '^'.
/// matrix_size enables the q_{ij} symbols (0 disables them); field enables
/// the extension generator by its name.
Scalar parse_scalar(const std::string& text, int matrix_size = 0, NumberFieldPtr field = nullptr);

/// Parses "t^2+t+1" style monic integer polynomials in one variable.
std::vector<Rational> parse_modulus(const std::string& text);

} // namespace lyndon

#endif
