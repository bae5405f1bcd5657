#include "carry/matrix.hpp"

#include <stdexcept>

namespace carry {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Rational> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Rational Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::principal_submatrix(std::span<const std::size_t> keep) const {
    return submatrix(keep, keep);
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
}

Matrix Matrix::pow(unsigned long exponent) const {
    if (!is_square()) throw std::invalid_argument("power of a non-square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (exponent > 0) {
        if (exponent & 1UL) result = result * base;
        exponent >>= 1UL;
        if (exponent > 0) base = base * base;
    }
    return result;
}

bool Matrix::all_integer() const {
    for (const auto& x : data_)
        if (!x.is_integer()) return false;
    return true;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).str());
    return out;
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            det = -det;
        }
        det *= a(k, k);
        const Rational inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Rational f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    Matrix a = m;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        const Rational inv = a(row, col).inverse();
        for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return a;
}

std::vector<Vector> nullspace(const Matrix& m) {
    std::vector<std::size_t> pivots;
    const Matrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Polynomial characteristic_polynomial(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + id * c[n - k + 1];
        c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

Polynomial characteristic_polynomial_bareiss(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial>> pm(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pm[i][j] = i == j ? Polynomial({-m(i, j), 1}) : Polynomial::constant(-m(i, j));
    return determinant_bareiss(std::move(pm));
}

Matrix eval_polynomial(const Polynomial& p, const Matrix& m) {
    Matrix acc(m.rows(), m.cols());
    const Matrix id = Matrix::identity(m.rows());
    for (int i = p.degree(); i >= 0; --i) acc = acc * m + id * p.coeff(static_cast<std::size_t>(i));
    return acc;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Matrix outer(std::span<const Rational> a, std::span<const Rational> b) {
    Matrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
    return m;
}

Vector left_multiply(const Vector& x, const Matrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("row-vector shape mismatch");
    Vector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
    return out;
}

}  // namespace carry
