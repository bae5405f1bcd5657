#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "carry/rational.hpp"

namespace carry {

/// Raised when an exact polynomial division leaves a nonzero remainder.
class InexactDivision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// Trailing zero coefficients are never stored; the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);
    Polynomial(std::initializer_list<Rational> ascending);

    static Polynomial constant(const Rational& c);
    /// c * x^power
    static Polynomial monomial(const Rational& c, std::size_t power);
    /// The linear factor (x - root).
    static Polynomial linear_root(const Rational& root);
    /// prod_i (x - roots[i])
    static Polynomial from_roots(std::span<const Rational> roots);

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^i (zero beyond the degree).
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational leading() const;

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    /// x^deg * p(1/x) with deg = degree().
    Polynomial reversed() const;
    /// Terms of degree < n.
    Polynomial truncated(std::size_t n) const;
    /// Rescale the argument: p(c * x).
    Polynomial scale_argument(const Rational& c) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned exponent) const;

    /// Human-readable rendering in the given variable, highest degree first.
    std::string str(const std::string& var = "x") const;
    /// Ascending coefficients as reduced fraction strings.
    std::vector<std::string> coefficient_strings() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

DivMod divmod(const Polynomial& p, const Polynomial& q);

/// p / q; throws InexactDivision when q does not divide p, std::domain_error when q = 0.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

/// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// p(x) with rational coefficients scaled to a primitive integer polynomial
/// (positive leading coefficient, content 1).
std::vector<BigInt> primitive_integer_form(const Polynomial& p);

/// All rational roots, repeated according to multiplicity, in ascending order.
std::vector<Rational> rational_roots(const Polynomial& p);

/// True when gcd(p, p') is constant.
bool is_squarefree(const Polynomial& p);

/// Determinant of a square matrix with polynomial entries. Uses cofactor
/// expansion up to dimension 4, Bareiss fraction-free elimination above.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);
Polynomial determinant_cofactor(const std::vector<std::vector<Polynomial>>& m);
Polynomial determinant_bareiss(std::vector<std::vector<Polynomial>> m);

}  // namespace carry
