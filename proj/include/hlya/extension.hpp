#pragma once

#include "hlya/cohomology.hpp"

#include <optional>

namespace hlya {

/// An abelian extension 0 -> h -> T^ -> T -> 0 presented by the total
/// algebra, the injection of the module, the projection onto the base, and
/// the module twist beta. The module h carries zero brackets.
struct AbelianExtension {
    HomLYAlgebra total; // dim n + m with twist alpha^
    Matrix inj;         // (n+m) x m
    Matrix proj;        // n x (n+m)
    HomLYAlgebra base;  // dim n
    int module_dim = 0; // m
    Matrix module_twist; // beta, m x m

    bool shape_ok() const;
};

/// A twist-compatible linear splitting of proj.
struct Section {
    Matrix sigma; // (n+m) x n, proj sigma = id, alpha^ sigma = sigma alpha
};

using ExtensionReport = CheckReport;

/// Verifies exactness (ranks, proj o inj = 0), that inj and proj are HLYA
/// homomorphisms including the twist squares, that both total and base pass
/// check_hlya, and that the image of inj is an abelian ideal: binary and
/// ternary brackets with two or more module arguments vanish.
ExtensionReport validate_extension(const AbelianExtension& E);

/// Deterministic solution of proj sigma = id, alpha^ sigma = sigma alpha.
/// Throws PreconditionError("NoCompatibleSection") when the linear system is
/// inconsistent -- the paper-level standing assumption fails for E.
Section find_section(const AbelianExtension& E);

/// rho(x)(u) = [sigma x, i u], D(x1,x2)(u) = [sigma x1, sigma x2, i u],
/// theta(x1,x2)(u) = [i u, sigma x1, sigma x2], pulled back through a fixed
/// left inverse of inj. Section-independent for valid extensions.
Representation induced_representation(const AbelianExtension& E, const Section& s);

/// nu(x1,x2) = [sigma x1, sigma x2] - sigma [x1,x2] and the ternary
/// analogue, pulled back to module coordinates.
CocyclePair induced_cocycle(const AbelianExtension& E, const Section& s);

/// T (+) V with the cocycle-twisted brackets; canonical block inj/proj.
/// Rejects an invalid representation or a non-cocycle pair.
AbelianExtension build_extension(const HomLYAlgebra& T, const Representation& R,
                                 const CocyclePair& p);

/// Equivalence test for extensions presented over the same base, module, and
/// induced representation. On success returns the equivalence F (n+m square,
/// verified homomorphism with F inj1 = inj2 and proj2 F = proj1).
std::optional<Matrix> are_equivalent(const AbelianExtension& E1, const AbelianExtension& E2);

/// Coordinates of the extension's cohomology class in the deterministic
/// representative basis of cohomology23 over the induced representation.
Vec classify(const AbelianExtension& E, const SizeGuard& guard = {});

} // namespace hlya
