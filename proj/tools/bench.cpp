// Compares the OpenMP elimination and defect-scan kernels against their
// serial reference implementations: first for equality, then for speed.
// With --check-only the timing loops are skipped (used as a ctest entry).

#include "hlya/algebra.hpp"
#include "hlya/linalg.hpp"
#include "hlya/parallel.hpp"
#include "hlya/selftest.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>

using namespace hlya;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

Matrix random_matrix(selftest::Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = selftest::small_rational(rng);
    return m;
}

// a mid-size algebra with dense enough tensors to make the tuple scans work
HomLYAlgebra scan_instance(selftest::Rng& rng, int dim) {
    HomLYAlgebra A = HomLYAlgebra::zero(dim, Matrix::identity(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                const Rational v = selftest::small_rational(rng);
                A.b(i, j, k) = v;
                A.b(j, i, k) = -v;
            }
    return A;
}

} // namespace

int main(int argc, char** argv) {
    const bool check_only = argc > 1 && std::strcmp(argv[1], "--check-only") == 0;
    selftest::Rng rng(42);

    std::cout << "threads: " << worker_count() << "\n";

    // --- elimination kernel parity -------------------------------------------
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix m = random_matrix(rng, 2 + trial % 20, 2 + (trial * 7) % 20);
        const auto a = linalg::rref(m);
        const auto b = linalg::reference::rref(m);
        if (!(a.mat == b.mat) || a.pivot_cols != b.pivot_cols) {
            std::cout << "FAIL: elimination kernels disagree\n";
            return 1;
        }
    }
    std::cout << "parity: rref == reference::rref on 30 random matrices\n";

    // --- scan kernel parity ---------------------------------------------------
    {
        const HomLYAlgebra A = scan_instance(rng, 5);
        const Matrix alpha2 = A.alpha * A.alpha;
        for (Axiom ax : axioms_for(AlgebraKind::Standard)) {
            const int arity = axiom_arity(ax);
            std::size_t count = 1;
            for (int r = 0; r < arity; ++r) count *= static_cast<std::size_t>(A.dim);
            auto defect = [&](std::size_t idx) {
                int t[5];
                std::size_t rem = idx;
                for (int k = arity - 1; k >= 0; --k) {
                    t[k] = static_cast<int>(rem % static_cast<std::size_t>(A.dim));
                    rem /= static_cast<std::size_t>(A.dim);
                }
                return axiom_defect(A, alpha2, ax, std::span<const int>(t, static_cast<std::size_t>(arity)));
            };
            const auto par = scan_defects(count, defect);
            const auto ser = scan_defects_serial(count, defect);
            const bool same_first = (!par.first && !ser.first) ||
                                    (par.first && ser.first && par.first->index == ser.first->index &&
                                     par.first->defect == ser.first->defect);
            if (par.fail_count != ser.fail_count || !same_first) {
                std::cout << "FAIL: scan kernels disagree on " << axiom_name(ax) << "\n";
                return 1;
            }
        }
        std::cout << "parity: scan_defects == scan_defects_serial on all axioms\n";
    }

    if (check_only) {
        std::cout << "RESULT: pass\n";
        return 0;
    }

    // --- timings ----------------------------------------------------------------
    {
        const Matrix m = random_matrix(rng, 180, 120);
        const auto t0 = std::chrono::steady_clock::now();
        const auto ref = linalg::reference::rref(m);
        const auto t1 = std::chrono::steady_clock::now();
        const auto par = linalg::rref(m);
        const auto t2 = std::chrono::steady_clock::now();
        if (!(ref.mat == par.mat)) return 1;
        std::cout << "rref 180x120      serial " << seconds(t0, t1) << "s   omp "
                  << seconds(t1, t2) << "s\n";
    }
    {
        const HomLYAlgebra A = scan_instance(rng, 8);
        const Matrix alpha2 = A.alpha * A.alpha;
        auto defect = [&](std::size_t idx) {
            int t[5];
            std::size_t rem = idx;
            for (int k = 4; k >= 0; --k) {
                t[k] = static_cast<int>(rem % static_cast<std::size_t>(A.dim));
                rem /= static_cast<std::size_t>(A.dim);
            }
            return axiom_defect(A, alpha2, Axiom::HLY6, std::span<const int>(t, 5));
        };
        std::size_t count = 1;
        for (int r = 0; r < 5; ++r) count *= static_cast<std::size_t>(A.dim);
        const auto t0 = std::chrono::steady_clock::now();
        const auto ser = scan_defects_serial(count, defect);
        const auto t1 = std::chrono::steady_clock::now();
        const auto par = scan_defects(count, defect);
        const auto t2 = std::chrono::steady_clock::now();
        if (par.fail_count != ser.fail_count) return 1;
        std::cout << "HLY6 scan dim 8   serial " << seconds(t0, t1) << "s   omp "
                  << seconds(t1, t2) << "s\n";
    }
    std::cout << "RESULT: pass\n";
    return 0;
}
