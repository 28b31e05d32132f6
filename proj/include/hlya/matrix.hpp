#pragma once

#include "hlya/rational.hpp"

#include <cassert>
#include <vector>

namespace hlya {

using Vec = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return e_[std::size_t(r) * cols_ + c];
    }
    const Rational& operator()(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return e_[std::size_t(r) * cols_ + c];
    }

    Vec col(int c) const;
    Vec row(int r) const;
    void set_col(int c, const Vec& v);
    void set_block(int r0, int c0, const Matrix& m);

    Matrix transpose() const;
    Matrix pow(int k) const; // square matrices, k >= 0

    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& m);
    friend Vec operator*(const Matrix& m, const Vec& v);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

// --- generic small-vector helpers, shared by the exact and the λ-polynomial
// --- evaluation paths (K is Rational or Poly)

template <class K>
bool vec_is_zero(const std::vector<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
std::vector<K>& vec_add_inplace(std::vector<K>& a, const std::vector<K>& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class K>
std::vector<K>& vec_sub_inplace(std::vector<K>& a, const std::vector<K>& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class K>
std::vector<K> vec_add(std::vector<K> a, const std::vector<K>& b) { vec_add_inplace(a, b); return a; }

template <class K>
std::vector<K> vec_sub(std::vector<K> a, const std::vector<K>& b) { vec_sub_inplace(a, b); return a; }

template <class K>
std::vector<K> vec_neg(std::vector<K> a) {
    for (auto& x : a) x = -x;
    return a;
}

/// m * x with the rational matrix entries promoted into K.
template <class K>
std::vector<K> mat_apply(const Matrix& m, const std::vector<K>& x) {
    assert(static_cast<int>(x.size()) == m.cols());
    std::vector<K> y(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        K acc{};
        for (int c = 0; c < m.cols(); ++c) {
            if (m(r, c).is_zero() || x[c].is_zero()) continue;
            acc += K(m(r, c)) * x[c];
        }
        y[r] = std::move(acc);
    }
    return y;
}

/// Column c of m promoted into K.
template <class K>
std::vector<K> col_as(const Matrix& m, int c) {
    std::vector<K> v(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) v[r] = K(m(r, c));
    return v;
}

template <class K>
std::vector<K> unit_vec(int n, int i) {
    std::vector<K> v(static_cast<std::size_t>(n));
    v[i] = K(Rational(1));
    return v;
}

} // namespace hlya
