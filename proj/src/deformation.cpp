#include "hlya/deformation.hpp"

#include "hlya/errors.hpp"
#include "hlya/parallel.hpp"

#include <array>
#include <stdexcept>

namespace hlya {

LambdaAlgebra lift(const HomLYAlgebra& A) {
    LambdaAlgebra L = LambdaAlgebra::zero(A.dim, A.alpha);
    for (std::size_t i = 0; i < A.binary.size(); ++i) L.binary[i] = Poly(A.binary[i]);
    for (std::size_t i = 0; i < A.ternary.size(); ++i) L.ternary[i] = Poly(A.ternary[i]);
    return L;
}

LambdaAlgebra deform(const HomLYAlgebra& A, const CocyclePair& p) {
    const int n = A.dim;
    if (!A.shape_ok()) throw std::invalid_argument("deform: algebra shape mismatch");
    if (p.nu.arity != 2 || p.omega.arity != 3 || p.nu.dim != n || p.omega.dim != n ||
        p.nu.vdim != n || p.omega.vdim != n || !p.nu.shape_ok() || !p.omega.shape_ok())
        throw PreconditionError("ShapeMismatch", "deform expects a T-valued (2,3)-pair");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < n; ++c) {
                if (!(p.nu.at(std::array{i, j}, c) + p.nu.at(std::array{j, i}, c)).is_zero())
                    throw PreconditionError("NotAntisymmetric", "nu must be antisymmetric");
                for (int k = 0; k < n; ++k)
                    if (!(p.omega.at(std::array{i, j, k}, c) +
                          p.omega.at(std::array{j, i, k}, c)).is_zero())
                        throw PreconditionError("NotAntisymmetric",
                                                "omega must be antisymmetric in its first two slots");
            }

    LambdaAlgebra L = lift(A);
    const Poly l = Poly::lambda();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                L.b(i, j, k) += p.nu.at(std::array{i, j}, k) * l;
                for (int m = 0; m < n; ++m)
                    L.t(i, j, k, m) += p.omega.at(std::array{i, j, k}, m) * l;
            }
    return L;
}

AxiomReport check_lambda(const LambdaAlgebra& L) {
    return check_axioms(L, AlgebraKind::Standard);
}

Theorem31Split theorem31_split(const HomLYAlgebra& A, const CocyclePair& p) {
    Theorem31Split out;
    out.cocycle = check_cocycle23(adjoint(A), p);

    HomLYAlgebra D = HomLYAlgebra::zero(A.dim, A.alpha);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < A.dim; ++k) {
                D.b(i, j, k) = p.nu.at(std::array{i, j}, k);
                for (int m = 0; m < A.dim; ++m)
                    D.t(i, j, k, m) = p.omega.at(std::array{i, j, k}, m);
            }
    out.deformation_type = check_deformation_type(D);
    return out;
}

NijenhuisReport check_nijenhuis(const HomLYAlgebra& A, const Matrix& N) {
    if (!A.shape_ok()) throw std::invalid_argument("check_nijenhuis: algebra shape mismatch");
    if (N.rows() != A.dim || N.cols() != A.dim)
        throw std::invalid_argument("check_nijenhuis: N must be dim x dim");
    const int n = A.dim;
    const auto nn = static_cast<std::size_t>(n);
    const auto e = [&](int i) { return unit_vec<Rational>(n, i); };
    const auto Ncol = [&](int i) { return N.col(i); };

    NijenhuisReport report;
    {
        // N[Nx1,x2] + N[x1,Nx2] - N^2[x1,x2] - [Nx1,Nx2] = 0
        auto scan = scan_defects(nn * nn, [&](std::size_t idx) {
            const int i = static_cast<int>(idx / nn), j = static_cast<int>(idx % nn);
            Vec d = N * eval_binary(A, Ncol(i), e(j));
            vec_add_inplace(d, N * eval_binary(A, e(i), Ncol(j)));
            vec_sub_inplace(d, N * (N * A.bracket(i, j)));
            vec_sub_inplace(d, eval_binary(A, Ncol(i), Ncol(j)));
            return d;
        });
        report.conditions.push_back(detail::make_status("NIJ-BIN", scan, n, 2));
    }
    {
        // N[Nx1,x2,x3] + N[x1,Nx2,x3] + N[x1,x2,Nx3] - N^2[x1,x2,x3]
        //   = [Nx1,Nx2,x3] + [Nx1,x2,Nx3] + [x1,Nx2,Nx3]
        auto scan = scan_defects(nn * nn * nn, [&](std::size_t idx) {
            const int k = static_cast<int>(idx % nn);
            const int j = static_cast<int>((idx / nn) % nn);
            const int i = static_cast<int>(idx / (nn * nn));
            Vec d = N * eval_ternary(A, Ncol(i), e(j), e(k));
            vec_add_inplace(d, N * eval_ternary(A, e(i), Ncol(j), e(k)));
            vec_add_inplace(d, N * eval_ternary(A, e(i), e(j), Ncol(k)));
            vec_sub_inplace(d, N * (N * A.bracket(i, j, k)));
            vec_sub_inplace(d, eval_ternary(A, Ncol(i), Ncol(j), e(k)));
            vec_sub_inplace(d, eval_ternary(A, Ncol(i), e(j), Ncol(k)));
            vec_sub_inplace(d, eval_ternary(A, e(i), Ncol(j), Ncol(k)));
            return d;
        });
        report.conditions.push_back(detail::make_status("NIJ-TER", scan, n, 3));
    }
    return report;
}

bool is_nijenhuis(const HomLYAlgebra& A, const Matrix& N) {
    return check_nijenhuis(A, N).passed();
}

CocyclePair nijenhuis_deformation(const HomLYAlgebra& A, const Matrix& N) {
    if (N.rows() != A.dim || N.cols() != A.dim)
        throw std::invalid_argument("nijenhuis_deformation: N must be dim x dim");
    if (!(A.alpha * N == N * A.alpha))
        throw PreconditionError("AlphaIncompatible",
                                "N must commute with alpha for the deformed family to satisfy "
                                "HLY01/HLY02");
    if (!is_nijenhuis(A, N))
        throw PreconditionError("NotNijenhuis", "N fails a Nijenhuis integrability identity");

    const int n = A.dim;
    const auto e = [&](int i) { return unit_vec<Rational>(n, i); };
    CocyclePair p = CocyclePair::zeros(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec nu = eval_binary(A, N.col(i), e(j));
            vec_add_inplace(nu, eval_binary(A, e(i), N.col(j)));
            vec_sub_inplace(nu, N * A.bracket(i, j));
            for (int c = 0; c < n; ++c) p.nu.at(std::array{i, j}, c) = nu[c];
            for (int k = 0; k < n; ++k) {
                Vec om = eval_ternary(A, N.col(i), e(j), e(k));
                vec_add_inplace(om, eval_ternary(A, e(i), N.col(j), e(k)));
                vec_add_inplace(om, eval_ternary(A, e(i), e(j), N.col(k)));
                vec_sub_inplace(om, N * A.bracket(i, j, k));
                for (int c = 0; c < n; ++c) p.omega.at(std::array{i, j, k}, c) = om[c];
            }
        }
    return p;
}

bool check_trivial(const HomLYAlgebra& A, const Matrix& N, const CocyclePair& p) {
    if (N.rows() != A.dim || N.cols() != A.dim)
        throw std::invalid_argument("check_trivial: N must be dim x dim");
    const int n = A.dim;
    const LambdaAlgebra L = deform(A, p); // validates the pair shapes
    const LambdaAlgebra orig = lift(A);
    const Poly l = Poly::lambda();

    // phi_l(v) = v + l * N v over polynomial vectors
    auto phi = [&](const std::vector<Poly>& v) {
        std::vector<Poly> nv = mat_apply(N, v);
        std::vector<Poly> out = v;
        for (int c = 0; c < n; ++c) out[c] += l * nv[c];
        return out;
    };
    const auto e = [&](int i) { return unit_vec<Poly>(n, i); };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // phi_l [e_i, e_j]_l = [phi_l e_i, phi_l e_j]
            std::vector<Poly> lhs = phi(L.bracket(i, j));
            std::vector<Poly> rhs = eval_binary(orig, phi(e(i)), phi(e(j)));
            if (!vec_is_zero(vec_sub(std::move(lhs), rhs))) return false;
            for (int k = 0; k < n; ++k) {
                std::vector<Poly> lt = phi(L.bracket(i, j, k));
                std::vector<Poly> rt = eval_ternary(orig, phi(e(i)), phi(e(j)), phi(e(k)));
                if (!vec_is_zero(vec_sub(std::move(lt), rt))) return false;
            }
        }
    return true;
}

} // namespace hlya
