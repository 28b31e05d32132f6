#include "hlya/linalg.hpp"

#include "hlya/parallel.hpp"

#include <stdexcept>

namespace hlya {
namespace linalg {

namespace {

// Gauss-Jordan over the rationals. The only difference between the parallel
// and the reference kernel is whether the independent row updates of one
// elimination step run under OpenMP; pivot choice and arithmetic agree.
Rref eliminate(Matrix m, bool parallel) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int next_row = 0;
    for (int c = 0; c < cols && next_row < rows; ++c) {
        int p = -1;
        for (int r = next_row; r < rows; ++r) {
            if (!m(r, c).is_zero()) { p = r; break; }
        }
        if (p < 0) continue;
        if (p != next_row)
            for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(next_row, j));
        p = next_row;

        const Rational inv_pivot = Rational(1) / m(p, c);
        for (int j = c; j < cols; ++j) m(p, j) = inv_pivot * m(p, j);

        auto update_row = [&](std::size_t ri) {
            const int r = static_cast<int>(ri);
            if (r == p || m(r, c).is_zero()) return;
            const Rational f = m(r, c);
            for (int j = c; j < cols; ++j) {
                if (m(p, j).is_zero()) continue;
                m(r, j) -= f * m(p, j);
            }
        };
        if (parallel) {
            parallel_for(static_cast<std::size_t>(rows), update_row);
        } else {
            for (int r = 0; r < rows; ++r) update_row(static_cast<std::size_t>(r));
        }

        pivots.push_back(c);
        ++next_row;
    }
    return Rref{std::move(m), std::move(pivots)};
}

} // namespace

Rref rref(Matrix m) { return eliminate(std::move(m), true); }

namespace reference {
Rref rref(Matrix m) { return eliminate(std::move(m), false); }
} // namespace reference

int rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    const Rref r = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Vec> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        Vec v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(fc)] = Rational(1);
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            v[static_cast<std::size_t>(r.pivot_cols[pr])] = -r.mat(static_cast<int>(pr), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (int r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[static_cast<std::size_t>(r)];

    const Rref r = rref(std::move(aug));
    for (int pc : r.pivot_cols)
        if (pc == m.cols()) return std::nullopt;

    Vec x(static_cast<std::size_t>(m.cols()));
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
        x[static_cast<std::size_t>(r.pivot_cols[pr])] = r.mat(static_cast<int>(pr), m.cols());
    return x;
}

std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve_columns: shape mismatch");
    Matrix x(m.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        auto xc = solve(m, b.col(c));
        if (!xc) return std::nullopt;
        x.set_col(c, *xc);
    }
    return x;
}

Matrix left_inverse(const Matrix& m) {
    // L m = I. Transpose to m^T L^T = I and solve columnwise; consistency is
    // guaranteed when rank(m) == cols(m).
    auto lt = solve_columns(m.transpose(), Matrix::identity(m.cols()));
    if (!lt) throw std::invalid_argument("left_inverse: matrix has deficient column rank");
    return lt->transpose();
}

} // namespace linalg
} // namespace hlya
