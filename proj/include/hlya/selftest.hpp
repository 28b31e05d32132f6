#pragma once

#include "hlya/deformation.hpp"
#include "hlya/extension.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace hlya {
namespace selftest {

using Rng = std::mt19937_64;

// --- fixtures ---------------------------------------------------------------

/// dim 2, alpha = id, [e1,e2] = e1, ternary [x,y,z] = [[x,y],z].
HomLYAlgebra dim2_solvable();
/// Same bracket with the unipotent twist alpha = [[1,1],[0,1]].
HomLYAlgebra dim2_solvable_twisted();
/// dim 3 cross-product algebra, alpha = id, ternary from the binary bracket.
HomLYAlgebra cross_product3();
/// dim 3 Heisenberg [e1,e2] = e3, alpha = id.
HomLYAlgebra heisenberg3();
HomLYAlgebra abelian(int n, Matrix alpha);

/// rho = D = theta = 0; valid for any beta.
Representation trivial_rep(const HomLYAlgebra& A, int vdim, Matrix beta);
/// On an abelian algebra with alpha = id: theta(x,y) = phi(x) phi(y) for a
/// random functional phi, D = 0, rho = 0, beta = id (vdim 1).
Representation rank1_theta_rep(Rng& rng, int dim);

// --- random generators --------------------------------------------------------

Rational small_rational(Rng& rng);
Rational small_nonzero_rational(Rng& rng);

HomLYAlgebra random_valid_algebra(Rng& rng);
/// Arbitrary antisymmetric tensors with alpha = id (not necessarily a HLYA);
/// for agreement tests against classical specializations.
HomLYAlgebra random_classical_tensors(Rng& rng, int dim);

Representation random_valid_rep(Rng& rng);
Representation random_valid_rep_over(Rng& rng, const HomLYAlgebra& A);

/// Adds a small nonzero value to one random entry.
void perturb_algebra(Rng& rng, HomLYAlgebra& A);
void perturb_rep(Rng& rng, Representation& R);
void perturb_pair(Rng& rng, CocyclePair& p);

/// Random element of the (2,3)-cocycle space of R (may be zero).
CocyclePair random_cocycle(Rng& rng, const Representation& R);
/// Random BB01-compatible map as a vdim x dim matrix (may be zero).
Matrix random_bb01(Rng& rng, const Representation& R);

/// Nijenhuis operators commuting with alpha on A: the zero map plus
/// diagonal/nilpotent candidates that pass the integrability identities.
std::vector<Matrix> nijenhuis_operators(const HomLYAlgebra& A);

// --- property suites -----------------------------------------------------------

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

SuiteResult suite_linalg(Rng& rng, int trials);
SuiteResult suite_axiom_fixtures(Rng& rng, int perturbations);
SuiteResult suite_semidirect_equivalence(Rng& rng, int candidates, int max_dim = 3,
                                         int max_vdim = 3);
SuiteResult suite_delta_squared(Rng& rng, int reps, bool exact_dim2 = false);
SuiteResult suite_coboundaries_are_cocycles(Rng& rng, int maps, int reps);
SuiteResult suite_cohomology_fixture();
SuiteResult suite_deformation_theorem(Rng& rng, int pairs);
SuiteResult suite_nijenhuis_trivial(Rng& rng);
SuiteResult suite_extension_roundtrip(Rng& rng, int triples);
SuiteResult suite_classification(Rng& rng, int cases);

/// Runs all suites; prints one line per suite to `log` when given.
std::vector<SuiteResult> run_all(std::uint64_t seed, bool quick, std::ostream* log);

} // namespace selftest
} // namespace hlya
