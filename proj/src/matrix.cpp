#include "hlya/matrix.hpp"

#include <stdexcept>

namespace hlya {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols_)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::col(int c) const {
    Vec v(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vec Matrix::row(int r) const {
    Vec v(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

void Matrix::set_col(int c, const Vec& v) {
    assert(static_cast<int>(v.size()) == rows_);
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::set_block(int r0, int c0, const Matrix& m) {
    assert(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_);
    for (int r = 0; r < m.rows_; ++r)
        for (int c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::pow(int k) const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: square matrix required");
    if (k < 0) throw std::invalid_argument("Matrix::pow: negative exponent");
    Matrix acc = identity(rows_);
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b(k, j).is_zero()) continue;
                c(i, j) += aik * b(k, j);
            }
        }
    return c;
}

Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.e_) x = s * x;
    return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.cols_)
        throw std::invalid_argument("Matrix apply: shape mismatch");
    Vec y(static_cast<std::size_t>(m.rows_));
    for (int r = 0; r < m.rows_; ++r)
        for (int c = 0; c < m.cols_; ++c) {
            if (m(r, c).is_zero() || v[c].is_zero()) continue;
            y[r] += m(r, c) * v[c];
        }
    return y;
}

} // namespace hlya
