#include "hlya/extension.hpp"

#include "hlya/errors.hpp"
#include "hlya/linalg.hpp"
#include "hlya/parallel.hpp"

#include <array>
#include <stdexcept>

namespace hlya {

bool AbelianExtension::shape_ok() const {
    const int n = base.dim, m = module_dim;
    return total.shape_ok() && base.shape_ok() && m >= 0 && total.dim == n + m &&
           inj.rows() == n + m && inj.cols() == m && proj.rows() == n && proj.cols() == n + m &&
           module_twist.rows() == m && module_twist.cols() == m;
}

ExtensionReport validate_extension(const AbelianExtension& E) {
    if (!E.shape_ok()) throw std::invalid_argument("validate_extension: shape mismatch");
    const int n = E.base.dim, m = E.module_dim, nm = n + m;
    const auto nn = static_cast<std::size_t>(nm);
    ExtensionReport rep;

    auto push_bool = [&](const char* name, bool ok) {
        ConditionStatus st;
        st.name = name;
        st.passed = ok;
        st.fail_count = ok ? 0 : 1;
        rep.conditions.push_back(std::move(st));
    };

    push_bool("BASE-HLYA", check_hlya(E.base).passed());
    push_bool("TOTAL-HLYA", check_hlya(E.total).passed());
    push_bool("EXACT-COMPOSE", (E.proj * E.inj).is_zero());
    push_bool("EXACT-RANK-INJ", linalg::rank(E.inj) == m);
    push_bool("EXACT-RANK-PROJ", linalg::rank(E.proj) == n);
    // im(inj) = ker(proj) then follows by dimension count.
    push_bool("TWIST-INJ", E.total.alpha * E.inj == E.inj * E.module_twist);
    push_bool("TWIST-PROJ", E.base.alpha * E.proj == E.proj * E.total.alpha);

    {
        auto scan = scan_defects(nn * nn, [&](std::size_t idx) {
            const int r = static_cast<int>(idx / nn), s = static_cast<int>(idx % nn);
            return vec_sub(mat_apply<Rational>(E.proj, E.total.bracket(r, s)),
                           eval_binary(E.base, E.proj.col(r), E.proj.col(s)));
        });
        rep.conditions.push_back(detail::make_status("PROJ-BINARY", scan, nm, 2));
    }
    {
        auto scan = scan_defects(nn * nn * nn, [&](std::size_t idx) {
            const int k = static_cast<int>(idx % nn);
            const int j = static_cast<int>((idx / nn) % nn);
            const int i = static_cast<int>(idx / (nn * nn));
            return vec_sub(mat_apply<Rational>(E.proj, E.total.bracket(i, j, k)),
                           eval_ternary(E.base, E.proj.col(i), E.proj.col(j), E.proj.col(k)));
        });
        rep.conditions.push_back(detail::make_status("PROJ-TERNARY", scan, nm, 3));
    }
    {
        const auto mm = static_cast<std::size_t>(m);
        auto scan = scan_defects(mm * mm, [&](std::size_t idx) {
            const int a = static_cast<int>(idx / mm), b = static_cast<int>(idx % mm);
            return eval_binary(E.total, E.inj.col(a), E.inj.col(b));
        });
        rep.conditions.push_back(detail::make_status("ABELIAN-BINARY", scan, m, 2));
    }
    {
        // [iu, iv, w] = [iu, w, iv] = [w, iu, iv] = 0 for module u, v and any w;
        // witness triples are (module, module, total) indices
        const auto mm = static_cast<std::size_t>(m);
        auto scan = scan_defects(mm * mm * nn, [&](std::size_t idx) {
            const int w = static_cast<int>(idx % nn);
            const int b = static_cast<int>((idx / nn) % mm);
            const int a = static_cast<int>(idx / (nn * mm));
            const Vec iu = E.inj.col(a), iv = E.inj.col(b);
            const Vec ew = unit_vec<Rational>(nm, w);
            Vec d = eval_ternary(E.total, iu, iv, ew);
            Vec d2 = eval_ternary(E.total, iu, ew, iv);
            Vec d3 = eval_ternary(E.total, ew, iu, iv);
            d.insert(d.end(), d2.begin(), d2.end());
            d.insert(d.end(), d3.begin(), d3.end());
            return d;
        });
        ConditionStatus st;
        st.name = "ABELIAN-TERNARY";
        st.fail_count = scan.fail_count;
        st.passed = scan.fail_count == 0;
        if (scan.first) {
            ConditionWitness wit;
            std::size_t idx = scan.first->index;
            wit.tuple = {static_cast<int>(idx / (nn * mm)) + 1,
                         static_cast<int>((idx / nn) % mm) + 1,
                         static_cast<int>(idx % nn) + 1};
            for (const auto& x : scan.first->defect) wit.defect.push_back(x.str());
            st.witness = std::move(wit);
        }
        rep.conditions.push_back(std::move(st));
    }
    return rep;
}

Section find_section(const AbelianExtension& E) {
    const int n = E.base.dim, nm = E.base.dim + E.module_dim;
    // unknowns sigma(r, c) flattened as r*n + c
    const int unknowns = nm * n;
    const int rows = n * n + nm * n;
    Matrix sys(rows, unknowns);
    Vec rhs(static_cast<std::size_t>(rows), Rational(0));

    int row = 0;
    // proj sigma = id
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            for (int s = 0; s < nm; ++s) sys(row, s * n + c) += E.proj(r, s);
            rhs[static_cast<std::size_t>(row)] = r == c ? Rational(1) : Rational(0);
            ++row;
        }
    // alpha^ sigma - sigma alpha = 0
    for (int r = 0; r < nm; ++r)
        for (int c = 0; c < n; ++c) {
            for (int s = 0; s < nm; ++s) sys(row, s * n + c) += E.total.alpha(r, s);
            for (int s = 0; s < n; ++s) sys(row, r * n + s) -= E.base.alpha(s, c);
            ++row;
        }

    auto sol = linalg::solve(sys, rhs);
    if (!sol)
        throw PreconditionError("NoCompatibleSection",
                                "no section satisfies both p o sigma = id and "
                                "alpha^ o sigma = sigma o alpha");
    Section s;
    s.sigma = Matrix(nm, n);
    for (int r = 0; r < nm; ++r)
        for (int c = 0; c < n; ++c) s.sigma(r, c) = (*sol)[static_cast<std::size_t>(r) * n + c];
    return s;
}

namespace {

void require_section(const AbelianExtension& E, const Section& s) {
    const int n = E.base.dim, nm = E.base.dim + E.module_dim;
    if (s.sigma.rows() != nm || s.sigma.cols() != n)
        throw std::invalid_argument("section shape mismatch");
    if (!(E.proj * s.sigma == Matrix::identity(n)))
        throw PreconditionError("InvalidSection", "proj o sigma != id");
    if (!(E.total.alpha * s.sigma == s.sigma * E.base.alpha))
        throw PreconditionError("InvalidSection", "sigma does not intertwine the twists");
}

/// Pulls a total-space vector known to lie in im(inj) back to module
/// coordinates; rejects values outside the image (corrupted data).
Vec pull_back(const AbelianExtension& E, const Matrix& left_inv, const Vec& v) {
    Vec u = left_inv * v;
    if (!vec_is_zero(vec_sub(E.inj * u, v)))
        throw PreconditionError("ValueOutsideModule",
                                "bracket value escapes the image of the injection");
    return u;
}

} // namespace

Representation induced_representation(const AbelianExtension& E, const Section& s) {
    require_section(E, s);
    const int n = E.base.dim, m = E.module_dim;
    const Matrix L = linalg::left_inverse(E.inj);

    Representation R = Representation::zero(E.base, m, E.module_twist);
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < m; ++a) {
            const Vec v = eval_binary(E.total, s.sigma.col(i), E.inj.col(a));
            R.rho[i].set_col(a, pull_back(E, L, v));
        }
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < m; ++a) {
                const Vec vd =
                    eval_ternary(E.total, s.sigma.col(i), s.sigma.col(j), E.inj.col(a));
                R.d_at(i, j).set_col(a, pull_back(E, L, vd));
                const Vec vt =
                    eval_ternary(E.total, E.inj.col(a), s.sigma.col(i), s.sigma.col(j));
                R.theta_at(i, j).set_col(a, pull_back(E, L, vt));
            }
    }
    return R;
}

CocyclePair induced_cocycle(const AbelianExtension& E, const Section& s) {
    require_section(E, s);
    const int n = E.base.dim, m = E.module_dim;
    const Matrix L = linalg::left_inverse(E.inj);

    CocyclePair p = CocyclePair::zeros(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v = eval_binary(E.total, s.sigma.col(i), s.sigma.col(j));
            vec_sub_inplace(v, mat_apply<Rational>(s.sigma, E.base.bracket(i, j)));
            if (!vec_is_zero(E.proj * v))
                throw PreconditionError("ValueOutsideModule", "p o nu != 0: corrupted extension");
            const Vec u = pull_back(E, L, v);
            for (int c = 0; c < m; ++c) p.nu.at(std::array{i, j}, c) = u[c];
            for (int k = 0; k < n; ++k) {
                Vec w = eval_ternary(E.total, s.sigma.col(i), s.sigma.col(j), s.sigma.col(k));
                vec_sub_inplace(w, mat_apply<Rational>(s.sigma, E.base.bracket(i, j, k)));
                if (!vec_is_zero(E.proj * w))
                    throw PreconditionError("ValueOutsideModule",
                                            "p o omega != 0: corrupted extension");
                const Vec uw = pull_back(E, L, w);
                for (int c = 0; c < m; ++c) p.omega.at(std::array{i, j, k}, c) = uw[c];
            }
        }
    return p;
}

AbelianExtension build_extension(const HomLYAlgebra& T, const Representation& R,
                                 const CocyclePair& p) {
    if (R.algebra != T) throw std::invalid_argument("build_extension: R is not over T");
    {
        RepReport rr = check_representation(R);
        if (!rr.passed())
            throw PreconditionError("InvalidRepresentation",
                                    "build_extension: first failing condition " +
                                        rr.failing_names().front());
        CocycleReport cr = check_cocycle23(R, p);
        if (!cr.passed())
            throw PreconditionError("NotACocycle", "build_extension: first failing condition " +
                                                       cr.failing_names().front());
    }
    const int n = T.dim, m = R.vdim;

    AbelianExtension E;
    E.total = semidirect(R);
    // add the cocycle twist on the T x T (x T) slots
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < m; ++c) {
                E.total.b(i, j, n + c) += p.nu.at(std::array{i, j}, c);
                for (int k = 0; k < n; ++k)
                    E.total.t(i, j, k, n + c) += p.omega.at(std::array{i, j, k}, c);
            }
    E.base = T;
    E.module_dim = m;
    E.module_twist = R.beta;
    E.inj = Matrix(n + m, m);
    for (int a = 0; a < m; ++a) E.inj(n + a, a) = Rational(1);
    E.proj = Matrix(n, n + m);
    for (int i = 0; i < n; ++i) E.proj(i, i) = Rational(1);
    return E;
}

std::optional<Matrix> are_equivalent(const AbelianExtension& E1, const AbelianExtension& E2) {
    if (!validate_extension(E1).passed() || !validate_extension(E2).passed())
        throw PreconditionError("InvalidExtension", "are_equivalent requires valid extensions");
    if (E1.base != E2.base || E1.module_dim != E2.module_dim ||
        E1.module_twist != E2.module_twist)
        throw PreconditionError("MismatchedExtensions",
                                "extensions must share base algebra and module");

    const Section s1 = find_section(E1), s2 = find_section(E2);
    const Representation R1 = induced_representation(E1, s1);
    const Representation R2 = induced_representation(E2, s2);
    if (R1 != R2)
        throw PreconditionError("MismatchedExtensions",
                                "extensions induce different representations");

    const CocyclePair p1 = induced_cocycle(E1, s1);
    const CocyclePair p2 = induced_cocycle(E2, s2);
    auto f = decompose(R1, p1 - p2);
    if (!f) return std::nullopt;

    // F = sigma2 proj1 + inj2 f proj1 + inj2 L1 (id - sigma1 proj1)
    const int nm = E1.base.dim + E1.module_dim;
    const Matrix L1 = linalg::left_inverse(E1.inj);
    Matrix F = s2.sigma * E1.proj;
    F += E2.inj * (*f) * E1.proj;
    F += E2.inj * L1 * (Matrix::identity(nm) - s1.sigma * E1.proj);

    if (!is_morphism(F, E1.total, E2.total).passed() || !(F * E1.inj == E2.inj) ||
        !(E2.proj * F == E1.proj))
        throw std::logic_error("are_equivalent: constructed map failed verification");
    return F;
}

Vec classify(const AbelianExtension& E, const SizeGuard& guard) {
    ExtensionReport er = validate_extension(E);
    if (!er.passed())
        throw PreconditionError("InvalidExtension",
                                "classify: first failing condition " + er.failing_names().front());
    const Section s = find_section(E);
    const Representation R = induced_representation(E, s);
    const Cohomology23 H = cohomology23(R, guard);
    return H.class_coordinates(induced_cocycle(E, s));
}

} // namespace hlya
