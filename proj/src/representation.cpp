#include "hlya/representation.hpp"

#include "hlya/errors.hpp"
#include "hlya/parallel.hpp"

#include <stdexcept>

namespace hlya {

bool Representation::shape_ok() const {
    if (!algebra.shape_ok() || vdim < 0) return false;
    const auto n = static_cast<std::size_t>(algebra.dim);
    if (beta.rows() != vdim || beta.cols() != vdim) return false;
    if (rho.size() != n || dmap.size() != n * n || theta.size() != n * n) return false;
    for (const auto& m : rho)
        if (m.rows() != vdim || m.cols() != vdim) return false;
    for (const auto& m : dmap)
        if (m.rows() != vdim || m.cols() != vdim) return false;
    for (const auto& m : theta)
        if (m.rows() != vdim || m.cols() != vdim) return false;
    return true;
}

Representation Representation::zero(HomLYAlgebra A, int vdim, Matrix beta) {
    Representation R;
    const auto n = static_cast<std::size_t>(A.dim);
    R.algebra = std::move(A);
    R.vdim = vdim;
    R.beta = std::move(beta);
    R.rho.assign(n, Matrix(vdim, vdim));
    R.dmap.assign(n * n, Matrix(vdim, vdim));
    R.theta.assign(n * n, Matrix(vdim, vdim));
    return R;
}

Matrix rho_of(const Representation& R, const Vec& x) {
    Matrix acc(R.vdim, R.vdim);
    for (int i = 0; i < R.algebra.dim; ++i) {
        if (x[i].is_zero()) continue;
        acc += x[i] * R.rho[i];
    }
    return acc;
}

Matrix d_of(const Representation& R, const Vec& x, const Vec& y) {
    Matrix acc(R.vdim, R.vdim);
    for (int i = 0; i < R.algebra.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < R.algebra.dim; ++j) {
            if (y[j].is_zero()) continue;
            acc += (x[i] * y[j]) * R.d_at(i, j);
        }
    }
    return acc;
}

Matrix theta_of(const Representation& R, const Vec& x, const Vec& y) {
    Matrix acc(R.vdim, R.vdim);
    for (int i = 0; i < R.algebra.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < R.algebra.dim; ++j) {
            if (y[j].is_zero()) continue;
            acc += (x[i] * y[j]) * R.theta_at(i, j);
        }
    }
    return acc;
}

const char* rep_condition_name(RepCondition c) {
    switch (c) {
        case RepCondition::HR01: return "HR01";
        case RepCondition::HR02: return "HR02";
        case RepCondition::HR03: return "HR03";
        case RepCondition::HR31: return "HR31";
        case RepCondition::HR41: return "HR41";
        case RepCondition::HR42: return "HR42";
        case RepCondition::HR51: return "HR51";
        case RepCondition::HR52: return "HR52";
        case RepCondition::HR61: return "HR61";
        case RepCondition::HR62: return "HR62";
    }
    return "?";
}

int rep_condition_arity(RepCondition c) {
    switch (c) {
        case RepCondition::HR01: return 1;
        case RepCondition::HR02:
        case RepCondition::HR03:
        case RepCondition::HR31: return 2;
        case RepCondition::HR41:
        case RepCondition::HR42:
        case RepCondition::HR51:
        case RepCondition::HR52: return 3;
        case RepCondition::HR61:
        case RepCondition::HR62: return 4;
    }
    return 0;
}

namespace {

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

} // namespace

Vec rep_defect(const Representation& R, const Matrix& alpha2, const Matrix& beta2,
               RepCondition cond, std::span<const int> tuple) {
    const HomLYAlgebra& A = R.algebra;
    const auto a1 = [&](int i) { return A.alpha.col(i); };
    const auto a2 = [&](int i) { return alpha2.col(i); };

    switch (cond) {
        case RepCondition::HR01: {
            const int i = tuple[0];
            return flatten(rho_of(R, a1(i)) * R.beta - R.beta * R.rho[i]);
        }
        case RepCondition::HR02: {
            const int i = tuple[0], j = tuple[1];
            return flatten(d_of(R, a1(i), a1(j)) * R.beta - R.beta * R.d_at(i, j));
        }
        case RepCondition::HR03: {
            const int i = tuple[0], j = tuple[1];
            return flatten(theta_of(R, a1(i), a1(j)) * R.beta - R.beta * R.theta_at(i, j));
        }
        case RepCondition::HR31: {
            const int i = tuple[0], j = tuple[1];
            return flatten(R.d_at(i, j) - R.theta_at(j, i) + R.theta_at(i, j) +
                           rho_of(R, A.bracket(i, j)) * R.beta - rho_of(R, a1(i)) * R.rho[j] +
                           rho_of(R, a1(j)) * R.rho[i]);
        }
        case RepCondition::HR41: {
            const int i = tuple[0], j = tuple[1], k = tuple[2];
            return flatten(d_of(R, A.bracket(i, j), a1(k)) + d_of(R, A.bracket(j, k), a1(i)) +
                           d_of(R, A.bracket(k, i), a1(j)));
        }
        case RepCondition::HR42: {
            const int i = tuple[0], j = tuple[1], y1 = tuple[2];
            return flatten(theta_of(R, A.bracket(i, j), a1(y1)) * R.beta -
                           theta_of(R, a1(i), a1(y1)) * R.rho[j] +
                           theta_of(R, a1(j), a1(y1)) * R.rho[i]);
        }
        case RepCondition::HR51: {
            const int i = tuple[0], j = tuple[1], y2 = tuple[2];
            return flatten(d_of(R, a1(i), a1(j)) * R.rho[y2] - rho_of(R, a2(y2)) * R.d_at(i, j) -
                           rho_of(R, A.bracket(i, j, y2)) * beta2);
        }
        case RepCondition::HR52: {
            const int x1 = tuple[0], y1 = tuple[1], y2 = tuple[2];
            return flatten(theta_of(R, a1(x1), A.bracket(y1, y2)) * R.beta -
                           rho_of(R, a2(y1)) * R.theta_at(x1, y2) +
                           rho_of(R, a2(y2)) * R.theta_at(x1, y1));
        }
        case RepCondition::HR61: {
            const int i = tuple[0], j = tuple[1], y1 = tuple[2], y2 = tuple[3];
            return flatten(d_of(R, a2(i), a2(j)) * R.theta_at(y1, y2) -
                           theta_of(R, a2(y1), a2(y2)) * R.d_at(i, j) -
                           theta_of(R, A.bracket(i, j, y1), a2(y2)) * beta2 -
                           theta_of(R, a2(y1), A.bracket(i, j, y2)) * beta2);
        }
        case RepCondition::HR62: {
            const int x1 = tuple[0], y1 = tuple[1], y2 = tuple[2], y3 = tuple[3];
            return flatten(theta_of(R, a2(x1), A.bracket(y1, y2, y3)) * beta2 -
                           theta_of(R, a2(y2), a2(y3)) * R.theta_at(x1, y1) +
                           theta_of(R, a2(y1), a2(y3)) * R.theta_at(x1, y2) -
                           d_of(R, a2(y1), a2(y2)) * R.theta_at(x1, y3));
        }
    }
    throw std::logic_error("unreachable rep condition");
}

RepReport check_representation(const Representation& R) {
    if (!R.shape_ok()) throw std::invalid_argument("check_representation: shape mismatch");
    const int n = R.algebra.dim;
    const Matrix alpha2 = R.algebra.alpha * R.algebra.alpha;
    const Matrix beta2 = R.beta * R.beta;

    static constexpr RepCondition all[] = {
        RepCondition::HR01, RepCondition::HR02, RepCondition::HR03, RepCondition::HR31,
        RepCondition::HR41, RepCondition::HR42, RepCondition::HR51, RepCondition::HR52,
        RepCondition::HR61, RepCondition::HR62};

    RepReport report;
    for (RepCondition cond : all) {
        const int arity = rep_condition_arity(cond);
        std::size_t count = 1;
        for (int r = 0; r < arity; ++r) count *= static_cast<std::size_t>(n);
        auto scan = scan_defects(count, [&](std::size_t idx) {
            int tup[4];
            std::size_t rem = idx;
            for (int k = arity - 1; k >= 0; --k) {
                tup[k] = static_cast<int>(rem % static_cast<std::size_t>(n));
                rem /= static_cast<std::size_t>(n);
            }
            return rep_defect(R, alpha2, beta2, cond,
                              std::span<const int>(tup, static_cast<std::size_t>(arity)));
        });
        report.conditions.push_back(detail::make_status(rep_condition_name(cond), scan, n, arity));
    }
    return report;
}

Representation adjoint(const HomLYAlgebra& A) {
    AxiomReport ax = check_hlya(A);
    if (!ax.passed())
        throw PreconditionError("InvalidAlgebra",
                                "adjoint requires a HLYA; first failing axiom " +
                                    ax.failing_names().front());
    const int n = A.dim;
    Representation R = Representation::zero(A, n, A.alpha);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                R.rho[i](l, j) = A.b(i, j, l); // rho(e_i) e_j = [e_i, e_j]
                for (int k = 0; k < n; ++k) {
                    R.d_at(i, j)(l, k) = A.t(i, j, k, l);     // D(e_i,e_j) e_k = [e_i, e_j, e_k]
                    R.theta_at(i, j)(l, k) = A.t(k, i, j, l); // theta(e_i,e_j) e_k = [e_k, e_i, e_j]
                }
            }
    return R;
}

HomLYAlgebra semidirect(const Representation& R) {
    if (!R.shape_ok()) throw std::invalid_argument("semidirect: shape mismatch");
    const int n = R.algebra.dim, m = R.vdim, nm = n + m;
    Matrix twist(nm, nm);
    twist.set_block(0, 0, R.algebra.alpha);
    twist.set_block(n, n, R.beta);
    HomLYAlgebra S = HomLYAlgebra::zero(nm, std::move(twist));

    // binary: [T,T] structure constants plus [x, v] = rho(x)v, [u, y] = -rho(y)u
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) S.b(i, j, k) = R.algebra.b(i, j, k);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < m; ++a)
            for (int c = 0; c < m; ++c) {
                S.b(i, n + a, n + c) = R.rho[i](c, a);
                S.b(n + a, i, n + c) = -R.rho[i](c, a);
            }

    // ternary: [T,T,T] plus D / theta placements; two module slots vanish
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) S.t(i, j, k, l) = R.algebra.t(i, j, k, l);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < m; ++a)
                for (int c = 0; c < m; ++c) {
                    S.t(i, j, n + a, n + c) = R.d_at(i, j)(c, a);      // D(x1,x2)(u3)
                    S.t(i, n + a, j, n + c) = -R.theta_at(i, j)(c, a); // -theta(x1,x3)(u2)
                    S.t(n + a, i, j, n + c) = R.theta_at(i, j)(c, a);  // +theta(x2,x3)(u1)
                }
    return S;
}

} // namespace hlya
