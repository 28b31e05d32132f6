// Independent oracle implementations used by the unit and acceptance tests.
// These share only the scalar/matrix primitives with the library; every
// expansion (bracket contraction, axiom sums, coboundary formulas, constraint
// enumeration) is coded separately so that agreement is meaningful.
#pragma once

#include "hlya/cohomology.hpp"
#include "hlya/linalg.hpp"
#include "hlya/representation.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using hlya::Cochain;
using hlya::HomLYAlgebra;
using hlya::Matrix;
using hlya::Rational;
using hlya::Representation;
using hlya::Vec;

inline Vec basis(int n, int i) {
    Vec v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = Rational(1);
    return v;
}

inline Vec mv(const Matrix& m, const Vec& x) {
    Vec y(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        Rational acc(0);
        for (int c = 0; c < m.cols(); ++c) acc += m(r, c) * x[static_cast<std::size_t>(c)];
        y[static_cast<std::size_t>(r)] = acc;
    }
    return y;
}

inline Vec br(const HomLYAlgebra& A, const Vec& x, const Vec& y) {
    Vec out(static_cast<std::size_t>(A.dim));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < A.dim; ++k)
                out[static_cast<std::size_t>(k)] +=
                    x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] * A.b(i, j, k);
    return out;
}

inline Vec tbr(const HomLYAlgebra& A, const Vec& x, const Vec& y, const Vec& z) {
    Vec out(static_cast<std::size_t>(A.dim));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < A.dim; ++k)
                for (int l = 0; l < A.dim; ++l)
                    out[static_cast<std::size_t>(l)] += x[static_cast<std::size_t>(i)] *
                                                        y[static_cast<std::size_t>(j)] *
                                                        z[static_cast<std::size_t>(k)] *
                                                        A.t(i, j, k, l);
    return out;
}

inline Vec vadd(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline Vec vsub(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline bool vzero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// --- literal transcription of the twisted axioms on one basis tuple ----------

inline Vec naive_axiom_defect(const HomLYAlgebra& A, const std::string& name,
                              const std::vector<int>& t, bool deformation_type = false) {
    const Matrix& al = A.alpha;
    const Matrix al2 = al * al;
    auto e = [&](int i) { return basis(A.dim, i); };
    auto a1 = [&](int i) { return mv(al, e(i)); };
    auto a2 = [&](int i) { return mv(al2, e(i)); };

    if (name == "HLY01")
        return vsub(mv(al, br(A, e(t[0]), e(t[1]))), br(A, a1(t[0]), a1(t[1])));
    if (name == "HLY02")
        return vsub(mv(al, tbr(A, e(t[0]), e(t[1]), e(t[2]))),
                    tbr(A, a1(t[0]), a1(t[1]), a1(t[2])));
    if (name == "HLY1") return vadd(br(A, e(t[0]), e(t[1])), br(A, e(t[1]), e(t[0])));
    if (name == "HLY2")
        return vadd(tbr(A, e(t[0]), e(t[1]), e(t[2])), tbr(A, e(t[1]), e(t[0]), e(t[2])));
    if (name == "HLY3" || name == "HLY3'") {
        Vec acc(static_cast<std::size_t>(A.dim));
        const int c[3] = {t[0], t[1], t[2]};
        for (int q = 0; q < 3; ++q) {
            acc = vadd(acc, br(A, br(A, e(c[q]), e(c[(q + 1) % 3])), a1(c[(q + 2) % 3])));
            if (!deformation_type && name == "HLY3")
                acc = vadd(acc, tbr(A, e(c[q]), e(c[(q + 1) % 3]), e(c[(q + 2) % 3])));
        }
        return acc;
    }
    if (name == "HLY4") {
        Vec acc(static_cast<std::size_t>(A.dim));
        const int c[3] = {t[0], t[1], t[2]};
        for (int q = 0; q < 3; ++q)
            acc = vadd(acc, tbr(A, br(A, e(c[q]), e(c[(q + 1) % 3])), a1(c[(q + 2) % 3]),
                                a1(t[3])));
        return acc;
    }
    if (name == "HLY5") {
        Vec lhs = tbr(A, a1(t[0]), a1(t[1]), br(A, e(t[2]), e(t[3])));
        Vec rhs = vadd(br(A, tbr(A, e(t[0]), e(t[1]), e(t[2])), a2(t[3])),
                       br(A, a2(t[2]), tbr(A, e(t[0]), e(t[1]), e(t[3]))));
        return vsub(lhs, rhs);
    }
    if (name == "HLY6") {
        Vec lhs = tbr(A, a2(t[0]), a2(t[1]), tbr(A, e(t[2]), e(t[3]), e(t[4])));
        Vec rhs = tbr(A, tbr(A, e(t[0]), e(t[1]), e(t[2])), a2(t[3]), a2(t[4]));
        rhs = vadd(rhs, tbr(A, a2(t[2]), tbr(A, e(t[0]), e(t[1]), e(t[3])), a2(t[4])));
        rhs = vadd(rhs, tbr(A, a2(t[2]), a2(t[3]), tbr(A, e(t[0]), e(t[1]), e(t[4]))));
        return vsub(lhs, rhs);
    }
    throw std::logic_error("oracle: unknown axiom " + name);
}

/// Failure counts per axiom by brute-force loops over every basis tuple.
inline std::map<std::string, long long> naive_failures(const HomLYAlgebra& A,
                                                       bool deformation_type = false) {
    const int n = A.dim;
    std::map<std::string, long long> out;
    auto scan = [&](const std::string& name, int arity) {
        long long fails = 0;
        std::vector<int> t(static_cast<std::size_t>(arity), 0);
        while (true) {
            if (!vzero(naive_axiom_defect(A, name, t, deformation_type))) ++fails;
            int k = arity - 1;
            while (k >= 0 && ++t[static_cast<std::size_t>(k)] == n)
                t[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
        }
        out[name] = fails;
    };
    scan("HLY01", 2);
    scan("HLY02", 3);
    scan("HLY1", 2);
    scan("HLY2", 3);
    scan(deformation_type ? "HLY3'" : "HLY3", 3);
    scan("HLY4", 4);
    scan("HLY5", 4);
    scan("HLY6", 5);
    return out;
}

inline bool naive_passes(const HomLYAlgebra& A, bool deformation_type = false) {
    for (const auto& [name, fails] : naive_failures(A, deformation_type))
        if (fails != 0) return false;
    return true;
}

/// Early-exit variant: true as soon as any axiom fails on any tuple.
inline bool naive_any_failure(const HomLYAlgebra& A) {
    const int n = A.dim;
    const char* names[8] = {"HLY1", "HLY2", "HLY01", "HLY02", "HLY3", "HLY4", "HLY5", "HLY6"};
    const int arities[8] = {2, 3, 2, 3, 3, 4, 4, 5};
    for (int a = 0; a < 8; ++a) {
        std::vector<int> t(static_cast<std::size_t>(arities[a]), 0);
        while (true) {
            if (!vzero(naive_axiom_defect(A, names[a], t))) return true;
            int k = arities[a] - 1;
            while (k >= 0 && ++t[static_cast<std::size_t>(k)] == n)
                t[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
        }
    }
    return false;
}

// --- classical (alpha = beta = id) specializations ----------------------------

/// LY1..LY6 as written for a classical Lie-Yamaguti algebra (no twists).
inline Vec classical_ly_defect(const HomLYAlgebra& A, int which, const std::vector<int>& t) {
    auto e = [&](int i) { return basis(A.dim, i); };
    switch (which) {
        case 1: return vadd(br(A, e(t[0]), e(t[1])), br(A, e(t[1]), e(t[0])));
        case 2:
            return vadd(tbr(A, e(t[0]), e(t[1]), e(t[2])), tbr(A, e(t[1]), e(t[0]), e(t[2])));
        case 3: {
            Vec acc(static_cast<std::size_t>(A.dim));
            const int c[3] = {t[0], t[1], t[2]};
            for (int q = 0; q < 3; ++q) {
                acc = vadd(acc, br(A, br(A, e(c[q]), e(c[(q + 1) % 3])), e(c[(q + 2) % 3])));
                acc = vadd(acc, tbr(A, e(c[q]), e(c[(q + 1) % 3]), e(c[(q + 2) % 3])));
            }
            return acc;
        }
        case 4: {
            Vec acc(static_cast<std::size_t>(A.dim));
            const int c[3] = {t[0], t[1], t[2]};
            for (int q = 0; q < 3; ++q)
                acc = vadd(acc,
                           tbr(A, br(A, e(c[q]), e(c[(q + 1) % 3])), e(c[(q + 2) % 3]), e(t[3])));
            return acc;
        }
        case 5: {
            Vec lhs = tbr(A, e(t[0]), e(t[1]), br(A, e(t[2]), e(t[3])));
            Vec rhs = vadd(br(A, tbr(A, e(t[0]), e(t[1]), e(t[2])), e(t[3])),
                           br(A, e(t[2]), tbr(A, e(t[0]), e(t[1]), e(t[3]))));
            return vsub(lhs, rhs);
        }
        case 6: {
            Vec lhs = tbr(A, e(t[0]), e(t[1]), tbr(A, e(t[2]), e(t[3]), e(t[4])));
            Vec rhs = tbr(A, tbr(A, e(t[0]), e(t[1]), e(t[2])), e(t[3]), e(t[4]));
            rhs = vadd(rhs, tbr(A, e(t[2]), tbr(A, e(t[0]), e(t[1]), e(t[3])), e(t[4])));
            rhs = vadd(rhs, tbr(A, e(t[2]), e(t[3]), tbr(A, e(t[0]), e(t[1]), e(t[4]))));
            return vsub(lhs, rhs);
        }
    }
    throw std::logic_error("oracle: unknown LY axiom");
}

/// Classical representation conditions with all twists id.
inline Matrix classical_rep_defect(const Representation& R, const std::string& name,
                                   const std::vector<int>& t) {
    const HomLYAlgebra& A = R.algebra;
    auto rho_vec = [&](const Vec& x) {
        Matrix acc(R.vdim, R.vdim);
        for (int i = 0; i < A.dim; ++i) acc += x[static_cast<std::size_t>(i)] * R.rho[i];
        return acc;
    };
    auto d_vec = [&](const Vec& x, const Vec& y) {
        Matrix acc(R.vdim, R.vdim);
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j)
                acc += (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) *
                       R.d_at(i, j);
        return acc;
    };
    auto th_vec = [&](const Vec& x, const Vec& y) {
        Matrix acc(R.vdim, R.vdim);
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j)
                acc += (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) *
                       R.theta_at(i, j);
        return acc;
    };
    auto e = [&](int i) { return basis(A.dim, i); };
    auto b2 = [&](int i, int j) { return br(A, e(i), e(j)); };
    auto b3 = [&](int i, int j, int k) { return tbr(A, e(i), e(j), e(k)); };

    if (name == "HR01" || name == "HR02" || name == "HR03")
        return Matrix(R.vdim, R.vdim); // trivial with beta = id
    if (name == "HR31")
        return R.d_at(t[0], t[1]) - R.theta_at(t[1], t[0]) + R.theta_at(t[0], t[1]) +
               rho_vec(b2(t[0], t[1])) - R.rho[t[0]] * R.rho[t[1]] + R.rho[t[1]] * R.rho[t[0]];
    if (name == "HR41")
        return d_vec(b2(t[0], t[1]), e(t[2])) + d_vec(b2(t[1], t[2]), e(t[0])) +
               d_vec(b2(t[2], t[0]), e(t[1]));
    if (name == "HR42")
        return th_vec(b2(t[0], t[1]), e(t[2])) - R.theta_at(t[0], t[2]) * R.rho[t[1]] +
               R.theta_at(t[1], t[2]) * R.rho[t[0]];
    if (name == "HR51")
        return R.d_at(t[0], t[1]) * R.rho[t[2]] - R.rho[t[2]] * R.d_at(t[0], t[1]) -
               rho_vec(b3(t[0], t[1], t[2]));
    if (name == "HR52")
        return th_vec(e(t[0]), b2(t[1], t[2])) - R.rho[t[1]] * R.theta_at(t[0], t[2]) +
               R.rho[t[2]] * R.theta_at(t[0], t[1]);
    if (name == "HR61")
        return R.d_at(t[0], t[1]) * R.theta_at(t[2], t[3]) -
               R.theta_at(t[2], t[3]) * R.d_at(t[0], t[1]) -
               th_vec(b3(t[0], t[1], t[2]), e(t[3])) - th_vec(e(t[2]), b3(t[0], t[1], t[3]));
    if (name == "HR62")
        return th_vec(e(t[0]), b3(t[1], t[2], t[3])) -
               R.theta_at(t[2], t[3]) * R.theta_at(t[0], t[1]) +
               R.theta_at(t[1], t[3]) * R.theta_at(t[0], t[2]) -
               R.d_at(t[1], t[2]) * R.theta_at(t[0], t[3]);
    throw std::logic_error("oracle: unknown rep condition " + name);
}

// --- independent cochain evaluation and coboundary oracles ----------------------

inline Vec ev(const Cochain& c, const std::vector<Vec>& args) {
    Vec out(static_cast<std::size_t>(c.vdim));
    if (c.dim == 0) return out;
    std::vector<int> t(static_cast<std::size_t>(c.arity), 0);
    while (true) {
        Rational w(1);
        for (int k = 0; k < c.arity; ++k)
            w *= args[static_cast<std::size_t>(k)][static_cast<std::size_t>(t[static_cast<std::size_t>(k)])];
        if (!w.is_zero())
            for (int comp = 0; comp < c.vdim; ++comp)
                out[static_cast<std::size_t>(comp)] += w * c.at(t, comp);
        int k = c.arity - 1;
        while (k >= 0 && ++t[static_cast<std::size_t>(k)] == c.dim)
            t[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
    }
    return out;
}

/// Level-1 coboundary from the displayed sums, expanded by hand. The brackets
/// inserted by the double sum are ternary.
inline std::pair<Cochain, Cochain> delta1(const Representation& R, const Cochain& nu,
                                          const Cochain& om) {
    const HomLYAlgebra& A = R.algebra;
    const int n = A.dim, v = R.vdim;
    const Matrix al2 = A.alpha * A.alpha;
    auto e = [&](int i) { return basis(n, i); };
    auto a1 = [&](int i) { return mv(A.alpha, e(i)); };
    auto a2 = [&](int i) { return mv(al2, e(i)); };
    auto rho_vec = [&](const Vec& x) {
        Matrix acc(v, v);
        for (int i = 0; i < n; ++i) acc += x[static_cast<std::size_t>(i)] * R.rho[i];
        return acc;
    };
    auto d_vec = [&](const Vec& x, const Vec& y) {
        Matrix acc(v, v);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc += (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) *
                       R.d_at(i, j);
        return acc;
    };
    auto th_vec = [&](const Vec& x, const Vec& y) {
        Matrix acc(v, v);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc += (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) *
                       R.theta_at(i, j);
        return acc;
    };

    Cochain out1 = Cochain::zeros(4, n, v);
    {
        std::vector<int> t(4, 0);
        while (true) {
            Vec acc = mv(rho_vec(a2(t[2])), ev(om, {e(t[0]), e(t[1]), e(t[3])}));
            acc = vsub(acc, mv(rho_vec(a2(t[3])), ev(om, {e(t[0]), e(t[1]), e(t[2])})));
            acc = vsub(acc, ev(om, {a1(t[0]), a1(t[1]), br(A, e(t[2]), e(t[3]))}));
            acc = vsub(acc, mv(d_vec(a1(t[0]), a1(t[1])), ev(nu, {e(t[2]), e(t[3])})));
            acc = vadd(acc, ev(nu, {tbr(A, e(t[0]), e(t[1]), e(t[2])), a2(t[3])}));
            acc = vadd(acc, ev(nu, {a2(t[2]), tbr(A, e(t[0]), e(t[1]), e(t[3]))}));
            for (int comp = 0; comp < v; ++comp)
                out1.at(t, comp) = acc[static_cast<std::size_t>(comp)];
            int k = 3;
            while (k >= 0 && ++t[static_cast<std::size_t>(k)] == n)
                t[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
        }
    }
    Cochain out2 = Cochain::zeros(5, n, v);
    {
        std::vector<int> s(5, 0);
        while (true) {
            Vec acc = mv(th_vec(a2(s[3]), a2(s[4])), ev(om, {e(s[0]), e(s[1]), e(s[2])}));
            acc = vsub(acc, mv(th_vec(a2(s[2]), a2(s[4])), ev(om, {e(s[0]), e(s[1]), e(s[3])})));
            acc = vsub(acc, mv(d_vec(a2(s[0]), a2(s[1])), ev(om, {e(s[2]), e(s[3]), e(s[4])})));
            acc = vadd(acc, mv(d_vec(a2(s[2]), a2(s[3])), ev(om, {e(s[0]), e(s[1]), e(s[4])})));
            acc = vadd(acc, ev(om, {tbr(A, e(s[0]), e(s[1]), e(s[2])), a2(s[3]), a2(s[4])}));
            acc = vadd(acc, ev(om, {a2(s[2]), tbr(A, e(s[0]), e(s[1]), e(s[3])), a2(s[4])}));
            acc = vadd(acc, ev(om, {a2(s[2]), a2(s[3]), tbr(A, e(s[0]), e(s[1]), e(s[4]))}));
            acc = vsub(acc, ev(om, {a2(s[0]), a2(s[1]), tbr(A, e(s[2]), e(s[3]), e(s[4]))}));
            for (int comp = 0; comp < v; ++comp)
                out2.at(s, comp) = acc[static_cast<std::size_t>(comp)];
            int k = 4;
            while (k >= 0 && ++s[static_cast<std::size_t>(k)] == n)
                s[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
        }
    }
    return {std::move(out1), std::move(out2)};
}

/// Classical coboundary (alpha = beta = id) at any level, coded directly from
/// the untwisted sums.
inline std::pair<Cochain, Cochain> classical_delta(const Representation& R, int level,
                                                   const Cochain& f, const Cochain& g) {
    const HomLYAlgebra& A = R.algebra;
    const int n = A.dim, v = R.vdim;
    auto e = [&](int i) { return basis(n, i); };
    auto rho_vec = [&](const Vec& x) {
        Matrix acc(v, v);
        for (int i = 0; i < n; ++i) acc += x[static_cast<std::size_t>(i)] * R.rho[i];
        return acc;
    };
    auto d_vec = [&](const Vec& x, const Vec& y) {
        Matrix acc(v, v);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc += (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) *
                       R.d_at(i, j);
        return acc;
    };
    auto th_vec = [&](const Vec& x, const Vec& y) {
        Matrix acc(v, v);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc += (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) *
                       R.theta_at(i, j);
        return acc;
    };
    auto sgn = [](int x) { return x % 2 == 0 ? 1 : -1; };

    const int n1 = 2 * level + 2, n2 = 2 * level + 3;
    Cochain out1 = Cochain::zeros(n1, n, v);
    Cochain out2 = Cochain::zeros(n2, n, v);

    std::vector<int> t(static_cast<std::size_t>(n1), 0);
    while (true) {
        std::vector<Vec> eargs;
        for (int q = 0; q < n1; ++q) eargs.push_back(e(t[static_cast<std::size_t>(q)]));

        std::vector<Vec> gargs(eargs.begin(), eargs.end() - 2);
        gargs.push_back(eargs[static_cast<std::size_t>(n1 - 1)]);
        Vec acc = mv(rho_vec(eargs[static_cast<std::size_t>(n1 - 2)]), ev(g, gargs));
        gargs.back() = eargs[static_cast<std::size_t>(n1 - 2)];
        acc = vsub(acc, mv(rho_vec(eargs[static_cast<std::size_t>(n1 - 1)]), ev(g, gargs)));
        gargs.back() = br(A, eargs[static_cast<std::size_t>(n1 - 2)],
                          eargs[static_cast<std::size_t>(n1 - 1)]);
        acc = vsub(acc, ev(g, gargs));

        for (int k = 1; k <= level; ++k) {
            std::vector<Vec> fargs;
            for (int q = 1; q <= n1; ++q)
                if (q != 2 * k - 1 && q != 2 * k) fargs.push_back(eargs[static_cast<std::size_t>(q - 1)]);
            Vec term = mv(d_vec(eargs[static_cast<std::size_t>(2 * k - 2)],
                                eargs[static_cast<std::size_t>(2 * k - 1)]),
                          ev(f, fargs));
            acc = sgn(level + k + 1) > 0 ? vadd(acc, term) : vsub(acc, term);
            for (int j = 2 * k + 1; j <= n1; ++j) {
                std::vector<Vec> fa;
                for (int q = 1; q <= n1; ++q) {
                    if (q == 2 * k - 1 || q == 2 * k) continue;
                    if (q == j)
                        fa.push_back(tbr(A, eargs[static_cast<std::size_t>(2 * k - 2)],
                                         eargs[static_cast<std::size_t>(2 * k - 1)],
                                         eargs[static_cast<std::size_t>(q - 1)]));
                    else
                        fa.push_back(eargs[static_cast<std::size_t>(q - 1)]);
                }
                Vec term2 = ev(f, fa);
                acc = sgn(level + k) > 0 ? vadd(acc, term2) : vsub(acc, term2);
            }
        }
        for (int comp = 0; comp < v; ++comp) out1.at(t, comp) = acc[static_cast<std::size_t>(comp)];
        int k = n1 - 1;
        while (k >= 0 && ++t[static_cast<std::size_t>(k)] == n) t[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
    }

    std::vector<int> s(static_cast<std::size_t>(n2), 0);
    while (true) {
        std::vector<Vec> eargs;
        for (int q = 0; q < n2; ++q) eargs.push_back(e(s[static_cast<std::size_t>(q)]));

        std::vector<Vec> gargs(eargs.begin(), eargs.end() - 3);
        gargs.push_back(eargs[static_cast<std::size_t>(n2 - 3)]);
        Vec acc = mv(th_vec(eargs[static_cast<std::size_t>(n2 - 2)],
                            eargs[static_cast<std::size_t>(n2 - 1)]),
                     ev(g, gargs));
        gargs.back() = eargs[static_cast<std::size_t>(n2 - 2)];
        acc = vsub(acc, mv(th_vec(eargs[static_cast<std::size_t>(n2 - 3)],
                                  eargs[static_cast<std::size_t>(n2 - 1)]),
                           ev(g, gargs)));

        for (int k = 1; k <= level + 1; ++k) {
            std::vector<Vec> ga;
            for (int q = 1; q <= n2; ++q)
                if (q != 2 * k - 1 && q != 2 * k) ga.push_back(eargs[static_cast<std::size_t>(q - 1)]);
            Vec term = mv(d_vec(eargs[static_cast<std::size_t>(2 * k - 2)],
                                eargs[static_cast<std::size_t>(2 * k - 1)]),
                          ev(g, ga));
            acc = sgn(level + k + 1) > 0 ? vadd(acc, term) : vsub(acc, term);
            for (int j = 2 * k + 1; j <= n2; ++j) {
                std::vector<Vec> ga2;
                for (int q = 1; q <= n2; ++q) {
                    if (q == 2 * k - 1 || q == 2 * k) continue;
                    if (q == j)
                        ga2.push_back(tbr(A, eargs[static_cast<std::size_t>(2 * k - 2)],
                                          eargs[static_cast<std::size_t>(2 * k - 1)],
                                          eargs[static_cast<std::size_t>(q - 1)]));
                    else
                        ga2.push_back(eargs[static_cast<std::size_t>(q - 1)]);
                }
                Vec term2 = ev(g, ga2);
                acc = sgn(level + k) > 0 ? vadd(acc, term2) : vsub(acc, term2);
            }
        }
        for (int comp = 0; comp < v; ++comp) out2.at(s, comp) = acc[static_cast<std::size_t>(comp)];
        int k = n2 - 1;
        while (k >= 0 && ++s[static_cast<std::size_t>(k)] == n) s[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
    }
    return {std::move(out1), std::move(out2)};
}

// --- constraint enumeration for the abelian / trivial-representation fixture ----

struct FixtureDims {
    int c2 = 0, c3 = 0, z = 0, b = 0, h = 0;
};

/// Abelian T of dim 2, alpha = beta = id, trivial representation on a
/// 1-dimensional module: every space is enumerated as an explicit linear
/// system over the 12 raw coordinates (4 for nu, 8 for omega).
inline FixtureDims enumerate_fixture_dims() {
    using hlya::linalg::rank;
    const int n = 2;
    auto nu_idx = [&](int i, int j) { return i * n + j; };               // 0..3
    auto om_idx = [&](int i, int j, int k) { return 4 + (i * n + j) * n + k; }; // 4..11

    std::vector<Vec> rows;
    auto row = [&] { return Vec(12, Rational(0)); };

    // C^2: nu antisymmetric (equivariance is vacuous at alpha = beta = id)
    std::vector<Vec> c2_rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec r(4, Rational(0));
            r[static_cast<std::size_t>(nu_idx(i, j))] += Rational(1);
            r[static_cast<std::size_t>(nu_idx(j, i))] += Rational(1);
            c2_rows.push_back(std::move(r));
        }
    const int c2 = 4 - rank(Matrix::from_rows(c2_rows));

    // C^3: omega antisymmetric in the first two slots
    std::vector<Vec> c3_rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec r(8, Rational(0));
                r[static_cast<std::size_t>(om_idx(i, j, k) - 4)] += Rational(1);
                r[static_cast<std::size_t>(om_idx(j, i, k) - 4)] += Rational(1);
                c3_rows.push_back(std::move(r));
            }
    const int c3 = 8 - rank(Matrix::from_rows(c3_rows));

    // Z: membership plus CC1..CC4. With zero brackets and a trivial
    // representation, CC1 is the cyclic sum of omega and CC2..CC4 vanish.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec r = row();
            r[static_cast<std::size_t>(nu_idx(i, j))] += Rational(1);
            r[static_cast<std::size_t>(nu_idx(j, i))] += Rational(1);
            rows.push_back(std::move(r));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec r = row();
                r[static_cast<std::size_t>(om_idx(i, j, k))] += Rational(1);
                r[static_cast<std::size_t>(om_idx(j, i, k))] += Rational(1);
                rows.push_back(std::move(r));
                Vec cc1 = row();
                cc1[static_cast<std::size_t>(om_idx(i, j, k))] += Rational(1);
                cc1[static_cast<std::size_t>(om_idx(j, k, i))] += Rational(1);
                cc1[static_cast<std::size_t>(om_idx(k, i, j))] += Rational(1);
                rows.push_back(std::move(cc1));
            }
    const int z = 12 - rank(Matrix::from_rows(rows));

    // B: with rho = D = theta = 0 and zero brackets, both BB1 and BB2 are
    // identically zero, so every coboundary vanishes.
    const int b = 0;
    return FixtureDims{c2, c3, z, b, z - b};
}

} // namespace oracle
