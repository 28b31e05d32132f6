#include "hlya/representation.hpp"
#include "hlya/errors.hpp"
#include "hlya/selftest.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hlya;
namespace st = hlya::selftest;

TEST_SUITE_BEGIN("representation");

TEST_CASE("zero maps form a representation for any module twist") {
    st::Rng rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        const HomLYAlgebra A = st::random_valid_algebra(rng);
        Matrix beta(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) beta(i, j) = st::small_rational(rng);
        CHECK(check_representation(st::trivial_rep(A, 2, beta)).passed());
    }
}

TEST_CASE("adjoint representation structure and validity") {
    const HomLYAlgebra A = st::dim2_solvable();
    const Representation R = adjoint(A);
    CHECK(R.vdim == 2);
    CHECK(R.beta == A.alpha);

    // rho(e_i) e_j = [e_i, e_j] read off the structure constants
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(R.rho[static_cast<std::size_t>(i)].col(j) == A.bracket(i, j));
    // theta(e_i, e_j) e_k = [e_k, e_i, e_j]
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(R.theta_at(i, j).col(k) == A.bracket(k, i, j));

    CHECK(check_representation(R).passed());
    CHECK(check_representation(adjoint(st::cross_product3())).passed());
    CHECK(check_representation(adjoint(st::dim2_solvable_twisted())).passed());
}

TEST_CASE("adjoint rejects non-algebras") {
    HomLYAlgebra A = st::dim2_solvable();
    A.b(0, 1, 1) = Rational(5); // breaks antisymmetry
    CHECK_THROWS_AS(adjoint(A), PreconditionError);
}

TEST_CASE("zeroing theta on the adjoint breaks HR31") {
    Representation R = adjoint(st::dim2_solvable());
    for (auto& m : R.theta) m = Matrix(R.vdim, R.vdim);
    const RepReport rep = check_representation(R);
    CHECK_FALSE(rep.passed());
    const ConditionStatus* hr31 = rep.find("HR31");
    REQUIRE(hr31 != nullptr);
    CHECK_FALSE(hr31->passed);
}

TEST_CASE("semidirect product basics") {
    const HomLYAlgebra A = st::dim2_solvable();

    // zero representation -> direct sum; valid iff A is
    const HomLYAlgebra S0 = semidirect(st::trivial_rep(A, 1, Matrix::identity(1)));
    CHECK(S0.dim == 3);
    CHECK(check_hlya(S0).passed());

    // adjoint -> T x| T is a HLYA (checked exhaustively)
    const HomLYAlgebra S = semidirect(adjoint(A));
    CHECK(check_hlya(S).passed());
    CHECK(oracle::naive_passes(S));

    // module part is an abelian ideal: brackets with >= 2 module slots vanish
    const int n = 2, m = 2, nm = n + m;
    for (int a = n; a < nm; ++a)
        for (int b = n; b < nm; ++b) {
            for (int k = 0; k < nm; ++k) CHECK(S.b(a, b, k) == Rational(0));
            for (int w = 0; w < nm; ++w)
                for (int l = 0; l < nm; ++l) {
                    CHECK(S.t(a, b, w, l) == Rational(0));
                    CHECK(S.t(a, w, b, l) == Rational(0));
                    CHECK(S.t(w, a, b, l) == Rational(0));
                }
        }
}

TEST_CASE("a broken HR31 surfaces as a mixed-tuple HLY3 failure") {
    Representation R = adjoint(st::dim2_solvable());
    for (auto& m : R.theta) m = Matrix(R.vdim, R.vdim);
    const AxiomReport rep = check_hlya(semidirect(R));
    CHECK_FALSE(rep.passed());
    const ConditionStatus* hly3 = rep.find("HLY3");
    REQUIRE(hly3 != nullptr);
    CHECK_FALSE(hly3->passed);
    REQUIRE(hly3->witness.has_value());
    bool has_base = false, has_module = false;
    for (int x : hly3->witness->tuple) {
        has_base = has_base || x <= 2;
        has_module = has_module || x > 2;
    }
    CHECK(has_base);
    CHECK(has_module);
}

TEST_CASE("representation validity is equivalent to semidirect validity") {
    st::Rng rng(43);
    const auto r = st::suite_semidirect_equivalence(rng, 16);
    CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("alpha = id reduction matches classical representation conditions") {
    st::Rng rng(47);
    for (int trial = 0; trial < 8; ++trial) {
        // arbitrary classical tensors and arbitrary maps, all twists id
        const HomLYAlgebra A = st::random_classical_tensors(rng, 2);
        Representation R = st::trivial_rep(A, 2, Matrix::identity(2));
        for (auto& m : R.rho)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) m(i, j) = st::small_rational(rng);
        for (auto& m : R.dmap)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) m(i, j) = st::small_rational(rng);
        for (auto& m : R.theta)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) m(i, j) = st::small_rational(rng);

        const Matrix alpha2 = A.alpha * A.alpha;
        const Matrix beta2 = R.beta * R.beta;
        const RepCondition conds[] = {RepCondition::HR31, RepCondition::HR41, RepCondition::HR42,
                                      RepCondition::HR51, RepCondition::HR52, RepCondition::HR61,
                                      RepCondition::HR62};
        for (RepCondition c : conds) {
            const int arity = rep_condition_arity(c);
            std::vector<int> t(static_cast<std::size_t>(arity), 0);
            while (true) {
                const Vec ours = rep_defect(R, alpha2, beta2, c, t);
                const Matrix cl = oracle::classical_rep_defect(R, rep_condition_name(c), t);
                Vec flat;
                for (int r = 0; r < cl.rows(); ++r)
                    for (int cc = 0; cc < cl.cols(); ++cc) flat.push_back(cl(r, cc));
                CHECK_MESSAGE(ours == flat, rep_condition_name(c));
                int k = arity - 1;
                while (k >= 0 && ++t[static_cast<std::size_t>(k)] == 2)
                    t[static_cast<std::size_t>(k--)] = 0;
                if (k < 0) break;
            }
        }
    }
}

TEST_SUITE_END();
