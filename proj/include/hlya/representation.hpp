#pragma once

#include "hlya/algebra.hpp"

#include <vector>

namespace hlya {

/// Representation (rho, D, theta) of a HLYA on a Hom-vector space (V, beta),
/// stored as matrices on basis vectors resp. basis pairs. Values on brackets
/// are obtained by expanding the bracket through the structure constants.
struct Representation {
    HomLYAlgebra algebra;
    int vdim = 0;
    Matrix beta;               // vdim x vdim
    std::vector<Matrix> rho;   // dim entries, rho[i] = rho(e_i)
    std::vector<Matrix> dmap;  // dim^2 entries, dmap[i*dim+j] = D(e_i, e_j)
    std::vector<Matrix> theta; // dim^2 entries

    const Matrix& d_at(int i, int j) const { return dmap[static_cast<std::size_t>(i) * algebra.dim + j]; }
    Matrix& d_at(int i, int j) { return dmap[static_cast<std::size_t>(i) * algebra.dim + j]; }
    const Matrix& theta_at(int i, int j) const { return theta[static_cast<std::size_t>(i) * algebra.dim + j]; }
    Matrix& theta_at(int i, int j) { return theta[static_cast<std::size_t>(i) * algebra.dim + j]; }

    bool shape_ok() const;

    /// rho = D = theta = 0 on a module of the given dimension.
    static Representation zero(HomLYAlgebra A, int vdim, Matrix beta);

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.algebra == b.algebra && a.vdim == b.vdim && a.beta == b.beta &&
               a.rho == b.rho && a.dmap == b.dmap && a.theta == b.theta;
    }
    friend bool operator!=(const Representation& a, const Representation& b) { return !(a == b); }
};

/// Linear/bilinear extension to coordinate vectors on the algebra side.
Matrix rho_of(const Representation& R, const Vec& x);
Matrix d_of(const Representation& R, const Vec& x, const Vec& y);
Matrix theta_of(const Representation& R, const Vec& x, const Vec& y);

enum class RepCondition { HR01, HR02, HR03, HR31, HR41, HR42, HR51, HR52, HR61, HR62 };

const char* rep_condition_name(RepCondition c);
int rep_condition_arity(RepCondition c);

/// Defect of one representation condition on one basis tuple (0-based),
/// returned as the flattened vdim x vdim matrix difference of the two sides.
/// alpha2 and beta2 must be the squared twists.
Vec rep_defect(const Representation& R, const Matrix& alpha2, const Matrix& beta2,
               RepCondition cond, std::span<const int> tuple);

using RepReport = CheckReport;

/// Expands HR01..HR62 on all basis tuples; exact matrix equality per tuple.
RepReport check_representation(const Representation& R);

/// Natural representation of A on itself: rho(x)y = [x, y],
/// D(x1,x2)x3 = [x1, x2, x3], theta(x1,x2)x3 = [x3, x1, x2], beta = alpha.
/// Rejects algebras that fail check_hlya.
Representation adjoint(const HomLYAlgebra& A);

/// Semidirect product T x| V on the basis (e_1..e_n, u_1..u_m). Shape-valid
/// input suffices: the result passes check_hlya exactly when R passes
/// check_representation.
HomLYAlgebra semidirect(const Representation& R);

} // namespace hlya
