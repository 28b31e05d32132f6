#pragma once

#include "hlya/matrix.hpp"
#include "hlya/poly.hpp"
#include "hlya/report.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hlya {

/// A Hom-Lie-Yamaguti algebra given by structure constants on a fixed basis:
/// a twist map alpha (always over the rationals), an antisymmetric binary
/// bracket [e_i, e_j] = sum_k binary[i][j][k] e_k, and a ternary bracket
/// [e_i, e_j, e_k] = sum_l ternary[i][j][k][l] e_l that is antisymmetric in
/// its first two slots. Axioms are verified separately by check_hlya.
///
/// The scalar K is Rational for ordinary algebras and Poly for the
/// one-parameter deformed family.
template <class K>
struct HomLYAlgebraT {
    int dim = 0;
    Matrix alpha;
    std::vector<K> binary;  // dim^3 entries, index (i*dim + j)*dim + k
    std::vector<K> ternary; // dim^4 entries, index ((i*dim + j)*dim + k)*dim + l

    static HomLYAlgebraT zero(int n, Matrix a) {
        HomLYAlgebraT A;
        A.dim = n;
        A.alpha = std::move(a);
        A.binary.assign(static_cast<std::size_t>(n) * n * n, K{});
        A.ternary.assign(static_cast<std::size_t>(n) * n * n * n, K{});
        return A;
    }

    const K& b(int i, int j, int k) const {
        return binary[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    K& b(int i, int j, int k) {
        return binary[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    const K& t(int i, int j, int k, int l) const {
        return ternary[((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l];
    }
    K& t(int i, int j, int k, int l) {
        return ternary[((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l];
    }

    /// Coordinates of [e_i, e_j].
    std::vector<K> bracket(int i, int j) const {
        std::vector<K> v(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) v[k] = b(i, j, k);
        return v;
    }
    /// Coordinates of [e_i, e_j, e_k].
    std::vector<K> bracket(int i, int j, int k) const {
        std::vector<K> v(static_cast<std::size_t>(dim));
        for (int l = 0; l < dim; ++l) v[l] = t(i, j, k, l);
        return v;
    }

    bool shape_ok() const {
        const auto n = static_cast<std::size_t>(dim);
        return dim >= 0 && alpha.rows() == dim && alpha.cols() == dim &&
               binary.size() == n * n * n && ternary.size() == n * n * n * n;
    }

    friend bool operator==(const HomLYAlgebraT& a, const HomLYAlgebraT& b) {
        return a.dim == b.dim && a.alpha == b.alpha && a.binary == b.binary &&
               a.ternary == b.ternary;
    }
    friend bool operator!=(const HomLYAlgebraT& a, const HomLYAlgebraT& b) { return !(a == b); }
};

using HomLYAlgebra = HomLYAlgebraT<Rational>;

/// Bilinear extension of the binary bracket to coordinate vectors.
/// Throws std::invalid_argument on a dimension mismatch.
template <class K>
std::vector<K> eval_binary(const HomLYAlgebraT<K>& A, const std::vector<K>& x,
                           const std::vector<K>& y);

/// Trilinear extension of the ternary bracket.
template <class K>
std::vector<K> eval_ternary(const HomLYAlgebraT<K>& A, const std::vector<K>& x,
                            const std::vector<K>& y, const std::vector<K>& z);

enum class AlgebraKind {
    Standard,        // HLY01, HLY02, HLY1..HLY6
    DeformationType, // HLY3 replaced by the pure binary Jacobi condition HLY3'
};

enum class Axiom { HLY01, HLY02, HLY1, HLY2, HLY3, HLY3Prime, HLY4, HLY5, HLY6 };

const char* axiom_name(Axiom a);
int axiom_arity(Axiom a);
std::vector<Axiom> axioms_for(AlgebraKind kind);

/// Defect of one axiom on one basis tuple (0-based indices); zero vector iff
/// the axiom holds there. alpha2 must equal A.alpha^2.
template <class K>
std::vector<K> axiom_defect(const HomLYAlgebraT<K>& A, const Matrix& alpha2, Axiom ax,
                            std::span<const int> tuple);

using AxiomReport = CheckReport;

/// Expands every axiom of the requested kind on all basis tuples and reports
/// pass/fail per axiom with the lexicographically first witness.
template <class K>
AxiomReport check_axioms(const HomLYAlgebraT<K>& A, AlgebraKind kind);

AxiomReport check_hlya(const HomLYAlgebra& A);
AxiomReport check_deformation_type(const HomLYAlgebra& A);

struct MorphismReport {
    std::vector<ConditionStatus> conditions; // TWIST, BINARY, TERNARY
    bool passed() const {
        for (const auto& c : conditions)
            if (!c.passed) return false;
        return true;
    }
};

/// Checks that phi : A -> B commutes with the twists and preserves both
/// brackets on all basis tuples. phi is dim(B) x dim(A).
MorphismReport is_morphism(const Matrix& phi, const HomLYAlgebra& A, const HomLYAlgebra& B);

/// Builds the ternary bracket [x, y, z] := [[x, y], z] on top of a given
/// antisymmetric binary bracket. With alpha = id and a Lie bracket this is
/// the classical Lie-Yamaguti construction; the result still has to pass
/// check_hlya before use.
HomLYAlgebra from_lie(int dim, const std::vector<Rational>& binary, Matrix alpha);

} // namespace hlya
