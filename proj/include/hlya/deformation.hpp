#pragma once

#include "hlya/cohomology.hpp"

#include <utility>

namespace hlya {

/// The one-parameter family T_l with brackets [.,.] + l*nu and
/// [.,.,.] + l*omega: structure constants are degree-<=1 polynomials in the
/// deformation parameter, the twist stays rational.
using LambdaAlgebra = HomLYAlgebraT<Poly>;

/// A embedded as constant polynomials.
LambdaAlgebra lift(const HomLYAlgebra& A);

/// Builds T_l from a T-valued pair (nu antisymmetric, omega antisymmetric in
/// its first two slots; both vdim == dim).
LambdaAlgebra deform(const HomLYAlgebra& A, const CocyclePair& p);

/// Every HLY axiom expanded coefficientwise in the parameter; a failure names
/// the axiom, the basis tuple, and the offending polynomial degrees
/// (degree 1 <-> cocycle conditions, degree 2 <-> deformation-type ones).
AxiomReport check_lambda(const LambdaAlgebra& L);

struct Theorem31Split {
    CocycleReport cocycle;        // (nu, omega) against the adjoint representation
    AxiomReport deformation_type; // (T, nu, omega, alpha) as a deformation-type algebra

    bool both_pass() const { return cocycle.passed() && deformation_type.passed(); }
};

/// The two sides of the deformation theorem: both pass exactly when
/// check_lambda(deform(A, p)) passes (for a valid A).
Theorem31Split theorem31_split(const HomLYAlgebra& A, const CocyclePair& p);

using NijenhuisReport = CheckReport; // conditions NIJ-BIN / NIJ-TER

/// Checks the binary and ternary Nijenhuis integrability identities on all
/// basis pairs/triples.
NijenhuisReport check_nijenhuis(const HomLYAlgebra& A, const Matrix& N);
bool is_nijenhuis(const HomLYAlgebra& A, const Matrix& N);

/// nu(x1,x2) = [Nx1,x2] + [x1,Nx2] - N[x1,x2] and the ternary analogue.
/// Requires N Nijenhuis and (reported separately) alpha N = N alpha, without
/// which the deformed family would violate HLY01/HLY02.
CocyclePair nijenhuis_deformation(const HomLYAlgebra& A, const Matrix& N);

/// Verifies phi_l = id + l N intertwines the deformed and the original
/// brackets, as exact polynomial identities on basis tuples. Assumes
/// deform(A, p) passes check_lambda.
bool check_trivial(const HomLYAlgebra& A, const Matrix& N, const CocyclePair& p);

} // namespace hlya
