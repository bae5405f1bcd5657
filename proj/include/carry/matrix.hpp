#pragma once

#include <span>
#include <string>
#include <vector>

#include "carry/polynomial.hpp"
#include "carry/rational.hpp"

namespace carry {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);
    /// Builds from nested rows; all rows must share one length.
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return data_; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;

    Matrix transpose() const;
    Rational trace() const;
    /// Principal submatrix on the given (ascending) indices.
    Matrix principal_submatrix(std::span<const std::size_t> keep) const;
    /// Submatrix on arbitrary row and column index lists.
    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    /// Repeated squaring; exponent 0 gives the identity.
    Matrix pow(unsigned long exponent) const;

    bool all_integer() const;
    std::vector<std::vector<std::string>> to_strings() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(const Matrix& m);

/// Reduced row echelon form; returns the pivot column list alongside.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of the right nullspace {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

/// Characteristic polynomial det(lambda I - m) by Faddeev–LeVerrier.
Polynomial characteristic_polynomial(const Matrix& m);

/// det(lambda I - m) via fraction-free elimination over Q[lambda].
Polynomial characteristic_polynomial_bareiss(const Matrix& m);

/// Evaluates a polynomial at a square matrix (Horner).
Matrix eval_polynomial(const Polynomial& p, const Matrix& m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
/// a b^T
Matrix outer(std::span<const Rational> a, std::span<const Rational> b);
/// x^T m (row vector times matrix)
Vector left_multiply(const Vector& x, const Matrix& m);

}  // namespace carry
