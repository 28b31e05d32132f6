#include "hlya/algebra.hpp"

#include "hlya/parallel.hpp"

#include <array>
#include <stdexcept>

namespace hlya {

namespace {

template <class K>
void require_dim(const HomLYAlgebraT<K>& A, const std::vector<K>& v, const char* what) {
    if (static_cast<int>(v.size()) != A.dim)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

template <class K>
void require_shape(const HomLYAlgebraT<K>& A) {
    if (!A.shape_ok()) throw std::invalid_argument("algebra tensor shapes inconsistent with dim");
}

} // namespace

template <class K>
std::vector<K> eval_binary(const HomLYAlgebraT<K>& A, const std::vector<K>& x,
                           const std::vector<K>& y) {
    require_dim(A, x, "eval_binary");
    require_dim(A, y, "eval_binary");
    const int n = A.dim;
    std::vector<K> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const K xy = x[i] * y[j];
            for (int k = 0; k < n; ++k) {
                if (A.b(i, j, k).is_zero()) continue;
                out[k] += xy * A.b(i, j, k);
            }
        }
    }
    return out;
}

template <class K>
std::vector<K> eval_ternary(const HomLYAlgebraT<K>& A, const std::vector<K>& x,
                            const std::vector<K>& y, const std::vector<K>& z) {
    require_dim(A, x, "eval_ternary");
    require_dim(A, y, "eval_ternary");
    require_dim(A, z, "eval_ternary");
    const int n = A.dim;
    std::vector<K> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const K xy = x[i] * y[j];
            for (int k = 0; k < n; ++k) {
                if (z[k].is_zero()) continue;
                const K xyz = xy * z[k];
                for (int l = 0; l < n; ++l) {
                    if (A.t(i, j, k, l).is_zero()) continue;
                    out[l] += xyz * A.t(i, j, k, l);
                }
            }
        }
    }
    return out;
}

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::HLY01: return "HLY01";
        case Axiom::HLY02: return "HLY02";
        case Axiom::HLY1: return "HLY1";
        case Axiom::HLY2: return "HLY2";
        case Axiom::HLY3: return "HLY3";
        case Axiom::HLY3Prime: return "HLY3'";
        case Axiom::HLY4: return "HLY4";
        case Axiom::HLY5: return "HLY5";
        case Axiom::HLY6: return "HLY6";
    }
    return "?";
}

int axiom_arity(Axiom a) {
    switch (a) {
        case Axiom::HLY01:
        case Axiom::HLY1: return 2;
        case Axiom::HLY02:
        case Axiom::HLY2:
        case Axiom::HLY3:
        case Axiom::HLY3Prime: return 3;
        case Axiom::HLY4:
        case Axiom::HLY5: return 4;
        case Axiom::HLY6: return 5;
    }
    return 0;
}

std::vector<Axiom> axioms_for(AlgebraKind kind) {
    if (kind == AlgebraKind::DeformationType)
        return {Axiom::HLY01, Axiom::HLY02, Axiom::HLY1, Axiom::HLY2,
                Axiom::HLY3Prime, Axiom::HLY4, Axiom::HLY5, Axiom::HLY6};
    return {Axiom::HLY01, Axiom::HLY02, Axiom::HLY1, Axiom::HLY2,
            Axiom::HLY3, Axiom::HLY4, Axiom::HLY5, Axiom::HLY6};
}

template <class K>
std::vector<K> axiom_defect(const HomLYAlgebraT<K>& A, const Matrix& alpha2, Axiom ax,
                            std::span<const int> tuple) {
    const auto a1col = [&](int i) { return col_as<K>(A.alpha, i); };
    const auto a2col = [&](int i) { return col_as<K>(alpha2, i); };

    switch (ax) {
        case Axiom::HLY01: {
            const int i = tuple[0], j = tuple[1];
            // alpha([e_i, e_j]) - [alpha e_i, alpha e_j]
            auto d = mat_apply(A.alpha, A.bracket(i, j));
            return vec_sub_inplace(d, eval_binary(A, a1col(i), a1col(j)));
        }
        case Axiom::HLY02: {
            const int i = tuple[0], j = tuple[1], k = tuple[2];
            auto d = mat_apply(A.alpha, A.bracket(i, j, k));
            return vec_sub_inplace(d, eval_ternary(A, a1col(i), a1col(j), a1col(k)));
        }
        case Axiom::HLY1: {
            const int i = tuple[0], j = tuple[1];
            return vec_add(A.bracket(i, j), A.bracket(j, i));
        }
        case Axiom::HLY2: {
            const int i = tuple[0], j = tuple[1], k = tuple[2];
            return vec_add(A.bracket(i, j, k), A.bracket(j, i, k));
        }
        case Axiom::HLY3:
        case Axiom::HLY3Prime: {
            const std::array<int, 3> c = {tuple[0], tuple[1], tuple[2]};
            std::vector<K> d(static_cast<std::size_t>(A.dim));
            for (int p = 0; p < 3; ++p) {
                const int x1 = c[p], x2 = c[(p + 1) % 3], x3 = c[(p + 2) % 3];
                vec_add_inplace(d, eval_binary(A, A.bracket(x1, x2), a1col(x3)));
                if (ax == Axiom::HLY3) vec_add_inplace(d, A.bracket(x1, x2, x3));
            }
            return d;
        }
        case Axiom::HLY4: {
            const std::array<int, 3> c = {tuple[0], tuple[1], tuple[2]};
            const int y1 = tuple[3];
            std::vector<K> d(static_cast<std::size_t>(A.dim));
            for (int p = 0; p < 3; ++p) {
                const int x1 = c[p], x2 = c[(p + 1) % 3], x3 = c[(p + 2) % 3];
                vec_add_inplace(d, eval_ternary(A, A.bracket(x1, x2), a1col(x3), a1col(y1)));
            }
            return d;
        }
        case Axiom::HLY5: {
            const int x1 = tuple[0], x2 = tuple[1], y1 = tuple[2], y2 = tuple[3];
            auto d = eval_ternary(A, a1col(x1), a1col(x2), A.bracket(y1, y2));
            vec_sub_inplace(d, eval_binary(A, A.bracket(x1, x2, y1), a2col(y2)));
            vec_sub_inplace(d, eval_binary(A, a2col(y1), A.bracket(x1, x2, y2)));
            return d;
        }
        case Axiom::HLY6: {
            const int x1 = tuple[0], x2 = tuple[1];
            const int y1 = tuple[2], y2 = tuple[3], y3 = tuple[4];
            auto d = eval_ternary(A, a2col(x1), a2col(x2), A.bracket(y1, y2, y3));
            vec_sub_inplace(d, eval_ternary(A, A.bracket(x1, x2, y1), a2col(y2), a2col(y3)));
            vec_sub_inplace(d, eval_ternary(A, a2col(y1), A.bracket(x1, x2, y2), a2col(y3)));
            vec_sub_inplace(d, eval_ternary(A, a2col(y1), a2col(y2), A.bracket(x1, x2, y3)));
            return d;
        }
    }
    throw std::logic_error("unreachable axiom");
}

template <class K>
AxiomReport check_axioms(const HomLYAlgebraT<K>& A, AlgebraKind kind) {
    require_shape(A);
    const int n = A.dim;
    const Matrix alpha2 = A.alpha * A.alpha;
    AxiomReport report;
    for (Axiom ax : axioms_for(kind)) {
        const int arity = axiom_arity(ax);
        std::size_t count = 1;
        for (int r = 0; r < arity; ++r) count *= static_cast<std::size_t>(n);
        auto scan = scan_defects(count, [&](std::size_t idx) {
            int tup[5];
            std::size_t rem = idx;
            for (int k = arity - 1; k >= 0; --k) {
                tup[k] = static_cast<int>(rem % static_cast<std::size_t>(n));
                rem /= static_cast<std::size_t>(n);
            }
            return axiom_defect(A, alpha2, ax, std::span<const int>(tup, static_cast<std::size_t>(arity)));
        });
        report.conditions.push_back(detail::make_status(axiom_name(ax), scan, n, arity));
    }
    return report;
}

AxiomReport check_hlya(const HomLYAlgebra& A) { return check_axioms(A, AlgebraKind::Standard); }

AxiomReport check_deformation_type(const HomLYAlgebra& A) {
    return check_axioms(A, AlgebraKind::DeformationType);
}

MorphismReport is_morphism(const Matrix& phi, const HomLYAlgebra& A, const HomLYAlgebra& B) {
    if (phi.rows() != B.dim || phi.cols() != A.dim)
        throw std::invalid_argument("is_morphism: phi must be dim(B) x dim(A)");
    const int n = A.dim;
    MorphismReport rep;

    {
        // phi o alpha_A = alpha_B o phi, checked columnwise
        auto scan = scan_defects(static_cast<std::size_t>(n), [&](std::size_t i) {
            return vec_sub(mat_apply<Rational>(phi, A.alpha.col(static_cast<int>(i))),
                           mat_apply<Rational>(B.alpha, phi.col(static_cast<int>(i))));
        });
        rep.conditions.push_back(detail::make_status("TWIST", scan, n, 1));
    }
    {
        auto scan = scan_defects(static_cast<std::size_t>(n) * n, [&](std::size_t idx) {
            const int i = static_cast<int>(idx / static_cast<std::size_t>(n));
            const int j = static_cast<int>(idx % static_cast<std::size_t>(n));
            return vec_sub(mat_apply<Rational>(phi, A.bracket(i, j)),
                           eval_binary(B, phi.col(i), phi.col(j)));
        });
        rep.conditions.push_back(detail::make_status("BINARY", scan, n, 2));
    }
    {
        auto scan = scan_defects(static_cast<std::size_t>(n) * n * n, [&](std::size_t idx) {
            const int k = static_cast<int>(idx % static_cast<std::size_t>(n));
            const int j = static_cast<int>((idx / static_cast<std::size_t>(n)) % static_cast<std::size_t>(n));
            const int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
            return vec_sub(mat_apply<Rational>(phi, A.bracket(i, j, k)),
                           eval_ternary(B, phi.col(i), phi.col(j), phi.col(k)));
        });
        rep.conditions.push_back(detail::make_status("TERNARY", scan, n, 3));
    }
    return rep;
}

HomLYAlgebra from_lie(int dim, const std::vector<Rational>& binary, Matrix alpha) {
    HomLYAlgebra A = HomLYAlgebra::zero(dim, std::move(alpha));
    if (binary.size() != A.binary.size())
        throw std::invalid_argument("from_lie: binary tensor has wrong size");
    A.binary = binary;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (!(A.b(i, j, k) + A.b(j, i, k)).is_zero())
                    throw std::invalid_argument("from_lie: binary tensor is not antisymmetric");
    // [e_i, e_j, e_k] := [[e_i, e_j], e_k]
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                for (int l = 0; l < dim; ++l) {
                    Rational acc;
                    for (int m = 0; m < dim; ++m) acc += A.b(i, j, m) * A.b(m, k, l);
                    A.t(i, j, k, l) = acc;
                }
            }
    return A;
}

// explicit instantiations for the exact and the λ-polynomial scalar
template std::vector<Rational> eval_binary(const HomLYAlgebraT<Rational>&,
                                           const std::vector<Rational>&,
                                           const std::vector<Rational>&);
template std::vector<Poly> eval_binary(const HomLYAlgebraT<Poly>&, const std::vector<Poly>&,
                                       const std::vector<Poly>&);
template std::vector<Rational> eval_ternary(const HomLYAlgebraT<Rational>&,
                                            const std::vector<Rational>&,
                                            const std::vector<Rational>&,
                                            const std::vector<Rational>&);
template std::vector<Poly> eval_ternary(const HomLYAlgebraT<Poly>&, const std::vector<Poly>&,
                                        const std::vector<Poly>&, const std::vector<Poly>&);
template std::vector<Rational> axiom_defect(const HomLYAlgebraT<Rational>&, const Matrix&, Axiom,
                                            std::span<const int>);
template std::vector<Poly> axiom_defect(const HomLYAlgebraT<Poly>&, const Matrix&, Axiom,
                                        std::span<const int>);
template AxiomReport check_axioms(const HomLYAlgebraT<Rational>&, AlgebraKind);
template AxiomReport check_axioms(const HomLYAlgebraT<Poly>&, AlgebraKind);

} // namespace hlya
