#pragma once

#include "hlya/matrix.hpp"

#include <optional>
#include <vector>

namespace hlya {
namespace linalg {

/// Reduced row echelon form plus the pivot columns, computed by exact
/// Gauss-Jordan elimination with the deterministic pivot rule: scan columns
/// left to right, take the first row with a nonzero entry.
struct Rref {
    Matrix mat;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

/// Production kernel; row updates run under OpenMP when the matrix is large
/// enough. Identical output to reference::rref by construction.
Rref rref(Matrix m);

int rank(const Matrix& m);

/// Basis of the right null space in reduced echelon form: one vector per
/// free column, taken in ascending column order, with that free variable set
/// to 1 and all other free variables 0.
std::vector<Vec> kernel_basis(const Matrix& m);

/// One particular solution of m x = b with every free variable set to 0, or
/// nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Columnwise solve: returns X with m X = b for each column of b, absent if
/// any column is inconsistent. Free variables 0.
std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& b);

/// Deterministic left inverse of an injective matrix (rank == cols).
Matrix left_inverse(const Matrix& m);

namespace reference {
/// Plain textbook serial elimination, kept as the parity oracle for the
/// OpenMP kernel and as the benchmark baseline.
Rref rref(Matrix m);
} // namespace reference

} // namespace linalg
} // namespace hlya
