#include "hlya/cohomology.hpp"

#include "hlya/errors.hpp"
#include "hlya/linalg.hpp"
#include "hlya/parallel.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>

namespace hlya {

namespace {

std::size_t ipow(int base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
    return r;
}

void check_guard(int vdim, int dim, int arity, const SizeGuard& guard) {
    long long raw = vdim;
    for (int i = 0; i < arity; ++i) {
        raw *= dim;
        if (raw > guard.max_raw)
            throw PreconditionError("SizeGuardExceeded",
                                    "raw cochain space vdim*dim^arity exceeds " +
                                        std::to_string(guard.max_raw));
    }
}

void unpack(std::size_t idx, int n, int arity, int* out) {
    for (int k = arity - 1; k >= 0; --k) {
        out[k] = static_cast<int>(idx % static_cast<std::size_t>(n));
        idx /= static_cast<std::size_t>(n);
    }
}

} // namespace

// --- Cochain --------------------------------------------------------------

Cochain Cochain::zeros(int arity, int dim, int vdim) {
    Cochain c;
    c.arity = arity;
    c.dim = dim;
    c.vdim = vdim;
    c.coeffs.assign(ipow(dim, arity) * static_cast<std::size_t>(vdim), Rational(0));
    return c;
}

std::size_t Cochain::tuple_count() const { return ipow(dim, arity); }

std::size_t Cochain::flat(std::span<const int> tuple) const {
    std::size_t idx = 0;
    for (int k = 0; k < arity; ++k) idx = idx * static_cast<std::size_t>(dim) + tuple[k];
    return idx;
}

Rational& Cochain::at(std::span<const int> tuple, int comp) {
    return coeffs[flat(tuple) * static_cast<std::size_t>(vdim) + comp];
}

const Rational& Cochain::at(std::span<const int> tuple, int comp) const {
    return coeffs[flat(tuple) * static_cast<std::size_t>(vdim) + comp];
}

Vec Cochain::value(std::span<const int> tuple) const {
    const std::size_t base = flat(tuple) * static_cast<std::size_t>(vdim);
    return Vec(coeffs.begin() + base, coeffs.begin() + base + vdim);
}

bool Cochain::shape_ok() const {
    return arity >= 1 && dim >= 0 && vdim >= 0 &&
           coeffs.size() == ipow(dim, arity) * static_cast<std::size_t>(vdim);
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (arity != o.arity || dim != o.dim || vdim != o.vdim)
        throw std::invalid_argument("Cochain add: shape mismatch");
    vec_add_inplace(coeffs, o.coeffs);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (arity != o.arity || dim != o.dim || vdim != o.vdim)
        throw std::invalid_argument("Cochain sub: shape mismatch");
    vec_sub_inplace(coeffs, o.coeffs);
    return *this;
}

Cochain operator*(const Rational& s, Cochain c) {
    for (auto& x : c.coeffs) x = s * x;
    return c;
}

Vec eval_cochain(const Cochain& c, const std::vector<Vec>& args) {
    if (static_cast<int>(args.size()) != c.arity)
        throw std::invalid_argument("eval_cochain: wrong argument count");
    for (const auto& a : args)
        if (static_cast<int>(a.size()) != c.dim)
            throw std::invalid_argument("eval_cochain: argument dimension mismatch");

    // contract one argument at a time: cur holds an order-(arity-k) tensor
    std::vector<Rational> cur = c.coeffs;
    for (int k = 0; k < c.arity; ++k) {
        const std::size_t block = cur.size() / static_cast<std::size_t>(c.dim);
        std::vector<Rational> next(block, Rational(0));
        for (int i = 0; i < c.dim; ++i) {
            const Rational& w = args[k][i];
            if (w.is_zero()) continue;
            const std::size_t off = static_cast<std::size_t>(i) * block;
            for (std::size_t r = 0; r < block; ++r) {
                if (cur[off + r].is_zero()) continue;
                next[r] += w * cur[off + r];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

bool is_cochain(const Representation& R, const Cochain& c) {
    if (!c.shape_ok() || c.dim != R.algebra.dim || c.vdim != R.vdim) return false;
    const int n = c.dim, m = c.arity;
    int tup[16], swapped[16];
    if (m > 16) return false;

    std::vector<Vec> acols;
    for (int i = 0; i < n; ++i) acols.push_back(R.algebra.alpha.col(i));

    for (std::size_t idx = 0; idx < c.tuple_count(); ++idx) {
        unpack(idx, n, m, tup);
        std::vector<Vec> args;
        args.reserve(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) args.push_back(acols[tup[k]]);
        Vec lhs = eval_cochain(c, args);
        Vec rhs = mat_apply<Rational>(R.beta, c.value(std::span<const int>(tup, m)));
        if (!vec_is_zero(vec_sub(std::move(lhs), rhs))) return false;

        for (int p = 0; 2 * p + 1 < m; ++p) {
            std::copy(tup, tup + m, swapped);
            std::swap(swapped[2 * p], swapped[2 * p + 1]);
            Vec sum = vec_add(c.value(std::span<const int>(tup, m)),
                              c.value(std::span<const int>(swapped, m)));
            if (!vec_is_zero(sum)) return false;
        }
    }
    return true;
}

// --- cochain spaces --------------------------------------------------------

namespace {

struct SparseRow {
    std::vector<std::pair<std::size_t, Rational>> entries;
    void add(std::size_t col, const Rational& v) {
        if (v.is_zero()) return;
        for (auto& e : entries)
            if (e.first == col) { e.second += v; return; }
        entries.emplace_back(col, v);
    }
    bool nonzero() const {
        for (const auto& e : entries)
            if (!e.second.is_zero()) return true;
        return false;
    }
};

/// Enumerates all source tuples s with a nonzero weight prod_k alpha(s_k, t_k)
/// and calls f(flat(s), weight).
void foreach_alpha_preimage(const Matrix& alpha, const int* t, int m,
                            const std::function<void(std::size_t, const Rational&)>& f) {
    const int n = alpha.rows();
    std::vector<std::vector<std::pair<int, Rational>>> options(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        for (int s = 0; s < n; ++s)
            if (!alpha(s, t[k]).is_zero()) options[k].emplace_back(s, alpha(s, t[k]));
        if (options[k].empty()) return;
    }
    std::vector<std::size_t> pos(static_cast<std::size_t>(m), 0);
    while (true) {
        std::size_t flat = 0;
        Rational w(1);
        for (int k = 0; k < m; ++k) {
            const auto& [s, a] = options[k][pos[k]];
            flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(s);
            w *= a;
        }
        f(flat, w);
        int k = m - 1;
        while (k >= 0 && ++pos[k] == options[k].size()) pos[k--] = 0;
        if (k < 0) break;
    }
}

} // namespace

CochainSpace cochain_space(const Representation& R, int arity, const SizeGuard& guard) {
    if (arity < 1) throw PreconditionError("InvalidArity", "cochain arity must be >= 1");
    if (!R.shape_ok()) throw std::invalid_argument("cochain_space: representation shape mismatch");
    const int n = R.algebra.dim, v = R.vdim, m = arity;
    check_guard(v, n, m, guard);

    const std::size_t tuples = ipow(n, m);
    const std::size_t raw_dim = tuples * static_cast<std::size_t>(v);

    std::vector<SparseRow> rows;
    int tup[16], other[16];

    // equivariance: f(alpha e_{t_1}, ..., alpha e_{t_m}) - beta f(e_t) = 0
    for (std::size_t idx = 0; idx < tuples; ++idx) {
        unpack(idx, n, m, tup);
        for (int c = 0; c < v; ++c) {
            SparseRow row;
            foreach_alpha_preimage(R.algebra.alpha, tup, m, [&](std::size_t s, const Rational& w) {
                row.add(s * static_cast<std::size_t>(v) + static_cast<std::size_t>(c), w);
            });
            for (int c2 = 0; c2 < v; ++c2)
                row.add(idx * static_cast<std::size_t>(v) + static_cast<std::size_t>(c2),
                        -R.beta(c, c2));
            if (row.nonzero()) rows.push_back(std::move(row));
        }
    }

    // pair antisymmetry in slots (2p, 2p+1): f(..a,b..) + f(..b,a..) = 0
    for (int p = 0; 2 * p + 1 < m; ++p) {
        for (std::size_t idx = 0; idx < tuples; ++idx) {
            unpack(idx, n, m, tup);
            if (tup[2 * p] > tup[2 * p + 1]) continue;
            std::copy(tup, tup + m, other);
            std::swap(other[2 * p], other[2 * p + 1]);
            std::size_t oidx = 0;
            for (int k = 0; k < m; ++k)
                oidx = oidx * static_cast<std::size_t>(n) + static_cast<std::size_t>(other[k]);
            for (int c = 0; c < v; ++c) {
                SparseRow row;
                row.add(idx * static_cast<std::size_t>(v) + static_cast<std::size_t>(c), Rational(1));
                row.add(oidx * static_cast<std::size_t>(v) + static_cast<std::size_t>(c), Rational(1));
                if (row.nonzero()) rows.push_back(std::move(row));
            }
        }
    }

    Matrix constraints(static_cast<int>(rows.size()), static_cast<int>(raw_dim));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, val] : rows[r].entries)
            constraints(static_cast<int>(r), static_cast<int>(col)) += val;

    CochainSpace space;
    space.arity = m;
    space.dim = n;
    space.vdim = v;
    const auto kernel = linalg::kernel_basis(constraints);
    space.raw = Matrix(static_cast<int>(raw_dim), static_cast<int>(kernel.size()));
    for (std::size_t b = 0; b < kernel.size(); ++b) {
        Cochain c = Cochain::zeros(m, n, v);
        c.coeffs = kernel[b];
        space.raw.set_col(static_cast<int>(b), kernel[b]);
        space.basis.push_back(std::move(c));
    }
    return space;
}

std::optional<Vec> CochainSpace::coordinates(const Cochain& c) const {
    if (c.arity != arity || c.dim != dim || c.vdim != vdim)
        throw std::invalid_argument("CochainSpace::coordinates: shape mismatch");
    return linalg::solve(raw, c.coeffs);
}

Cochain CochainSpace::combine(const Vec& coords) const {
    if (static_cast<int>(coords.size()) != dimension())
        throw std::invalid_argument("CochainSpace::combine: coordinate length mismatch");
    Cochain out = Cochain::zeros(arity, dim, vdim);
    for (int b = 0; b < dimension(); ++b) {
        if (coords[b].is_zero()) continue;
        for (std::size_t i = 0; i < out.coeffs.size(); ++i)
            out.coeffs[i] += coords[b] * basis[static_cast<std::size_t>(b)].coeffs[i];
    }
    return out;
}

CocyclePair CocyclePair::zeros(int dim, int vdim) {
    return CocyclePair{Cochain::zeros(2, dim, vdim), Cochain::zeros(3, dim, vdim)};
}

// --- coboundary operator ---------------------------------------------------

namespace {

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

void accumulate(Vec& acc, const Vec& term, int sign) {
    if (sign > 0)
        vec_add_inplace(acc, term);
    else
        vec_sub_inplace(acc, term);
}

} // namespace

std::pair<Cochain, Cochain> delta(const Representation& R, int level, const Cochain& f,
                                  const Cochain& g) {
    const int n = R.algebra.dim, v = R.vdim;
    if (level < 1) throw PreconditionError("InvalidLevel", "delta level must be >= 1");
    if (2 * level + 3 > 16)
        throw PreconditionError("SizeGuardExceeded", "delta level beyond desk scale");
    if (f.arity != 2 * level || g.arity != 2 * level + 1 || f.dim != n || g.dim != n ||
        f.vdim != v || g.vdim != v)
        throw PreconditionError("ArityMismatch",
                                "delta expects (f, g) in C^{2n} x C^{2n+1} over the representation");
    if (!is_cochain(R, f) || !is_cochain(R, g))
        throw PreconditionError("NotACochain", "delta inputs must satisfy the cochain conditions");

    const HomLYAlgebra& A = R.algebra;
    const Matrix p1 = A.alpha;
    const Matrix p2 = A.alpha * A.alpha;
    const Matrix p2n = A.alpha.pow(2 * level);
    const Matrix p2n1 = A.alpha.pow(2 * level - 1);

    const int arity_out1 = 2 * level + 2, arity_out2 = 2 * level + 3;
    Cochain out1 = Cochain::zeros(arity_out1, n, v);
    Cochain out2 = Cochain::zeros(arity_out2, n, v);

    // (delta_I f)(x_1..x_{2n+2}); consumes both f and g
    parallel_for(out1.tuple_count(), [&](std::size_t idx) {
        int t[16];
        unpack(idx, n, arity_out1, t);
        const int N = arity_out1;
        Vec acc(static_cast<std::size_t>(v), Rational(0));

        std::vector<int> head(t, t + (N - 2));
        { // rho(alpha^{2n} x_{2n+1}) g(x_1..x_{2n}, x_{2n+2})
            std::vector<int> args = head;
            args.push_back(t[N - 1]);
            accumulate(acc, rho_of(R, p2n.col(t[N - 2])) * g.value(args), +1);
        }
        { // - rho(alpha^{2n} x_{2n+2}) g(x_1..x_{2n+1})
            std::vector<int> args = head;
            args.push_back(t[N - 2]);
            accumulate(acc, rho_of(R, p2n.col(t[N - 1])) * g.value(args), -1);
        }
        { // - g(alpha x_1, ..., alpha x_{2n}, [x_{2n+1}, x_{2n+2}])
            std::vector<Vec> args;
            for (int q = 0; q < N - 2; ++q) args.push_back(p1.col(t[q]));
            args.push_back(A.bracket(t[N - 2], t[N - 1]));
            accumulate(acc, eval_cochain(g, args), -1);
        }
        for (int k = 1; k <= level; ++k) {
            { // (-1)^{n+k+1} D(alpha^{2n-1} x_{2k-1}, alpha^{2n-1} x_{2k}) f(.. hat ..)
                std::vector<int> args;
                for (int q = 0; q < N; ++q)
                    if (q != 2 * k - 2 && q != 2 * k - 1) args.push_back(t[q]);
                accumulate(acc,
                           d_of(R, p2n1.col(t[2 * k - 2]), p2n1.col(t[2 * k - 1])) * f.value(args),
                           sign_pow(level + k + 1));
            }
            for (int j = 2 * k + 1; j <= N; ++j) {
                // (-1)^{n+k} f(alpha^2 x_1, .., [x_{2k-1}, x_{2k}, x_j], .., alpha^2 x_{2n+2})
                std::vector<Vec> args;
                for (int q = 1; q <= N; ++q) {
                    if (q == 2 * k - 1 || q == 2 * k) continue;
                    if (q == j)
                        args.push_back(A.bracket(t[2 * k - 2], t[2 * k - 1], t[q - 1]));
                    else
                        args.push_back(p2.col(t[q - 1]));
                }
                accumulate(acc, eval_cochain(f, args), sign_pow(level + k));
            }
        }
        for (int c = 0; c < v; ++c)
            out1.coeffs[idx * static_cast<std::size_t>(v) + c] = acc[c];
    });

    // (delta_II g)(x_1..x_{2n+3}); consumes only g
    parallel_for(out2.tuple_count(), [&](std::size_t idx) {
        int t[16];
        unpack(idx, n, arity_out2, t);
        const int N = arity_out2;
        Vec acc(static_cast<std::size_t>(v), Rational(0));

        std::vector<int> head(t, t + (N - 3));
        { // theta(alpha^{2n} x_{2n+2}, alpha^{2n} x_{2n+3}) g(x_1..x_{2n+1})
            std::vector<int> args = head;
            args.push_back(t[N - 3]);
            accumulate(acc, theta_of(R, p2n.col(t[N - 2]), p2n.col(t[N - 1])) * g.value(args), +1);
        }
        { // - theta(alpha^{2n} x_{2n+1}, alpha^{2n} x_{2n+3}) g(x_1..x_{2n}, x_{2n+2})
            std::vector<int> args = head;
            args.push_back(t[N - 2]);
            accumulate(acc, theta_of(R, p2n.col(t[N - 3]), p2n.col(t[N - 1])) * g.value(args), -1);
        }
        for (int k = 1; k <= level + 1; ++k) {
            { // (-1)^{n+k+1} D(alpha^{2n} x_{2k-1}, alpha^{2n} x_{2k}) g(.. hat ..)
                std::vector<int> args;
                for (int q = 0; q < N; ++q)
                    if (q != 2 * k - 2 && q != 2 * k - 1) args.push_back(t[q]);
                accumulate(acc,
                           d_of(R, p2n.col(t[2 * k - 2]), p2n.col(t[2 * k - 1])) * g.value(args),
                           sign_pow(level + k + 1));
            }
            for (int j = 2 * k + 1; j <= N; ++j) {
                std::vector<Vec> args;
                for (int q = 1; q <= N; ++q) {
                    if (q == 2 * k - 1 || q == 2 * k) continue;
                    if (q == j)
                        args.push_back(A.bracket(t[2 * k - 2], t[2 * k - 1], t[q - 1]));
                    else
                        args.push_back(p2.col(t[q - 1]));
                }
                accumulate(acc, eval_cochain(g, args), sign_pow(level + k));
            }
        }
        for (int c = 0; c < v; ++c)
            out2.coeffs[idx * static_cast<std::size_t>(v) + c] = acc[c];
    });

    if (!is_cochain(R, out1) || !is_cochain(R, out2))
        throw std::logic_error("delta produced a non-cochain; inputs were not valid cochains");
    return {std::move(out1), std::move(out2)};
}

Matrix delta_matrix(const Representation& R, int level, const SizeGuard& guard) {
    const CochainSpace s0 = cochain_space(R, 2 * level, guard);
    const CochainSpace s1 = cochain_space(R, 2 * level + 1, guard);
    const CochainSpace s2 = cochain_space(R, 2 * level + 2, guard);
    const CochainSpace s3 = cochain_space(R, 2 * level + 3, guard);

    const int n = R.algebra.dim, v = R.vdim;
    Matrix m(s2.dimension() + s3.dimension(), s0.dimension() + s1.dimension());

    auto put_column = [&](int col, const Cochain& f, const Cochain& g) {
        auto [d1, d2] = delta(R, level, f, g);
        auto c2 = s2.coordinates(d1);
        auto c3 = s3.coordinates(d2);
        if (!c2 || !c3) throw std::logic_error("delta image escaped the target cochain space");
        for (int r = 0; r < s2.dimension(); ++r) m(r, col) = (*c2)[r];
        for (int r = 0; r < s3.dimension(); ++r) m(s2.dimension() + r, col) = (*c3)[r];
    };

    const Cochain zf = Cochain::zeros(2 * level, n, v);
    const Cochain zg = Cochain::zeros(2 * level + 1, n, v);
    for (int b = 0; b < s0.dimension(); ++b) put_column(b, s0.basis[b], zg);
    for (int b = 0; b < s1.dimension(); ++b) put_column(s0.dimension() + b, zf, s1.basis[b]);
    return m;
}

// --- (2,3)-cocycle conditions ----------------------------------------------

namespace {

Vec nu_on(const CocyclePair& p, const Vec& x, const Vec& y) {
    return eval_cochain(p.nu, {x, y});
}

Vec omega_on(const CocyclePair& p, const Vec& x, const Vec& y, const Vec& z) {
    return eval_cochain(p.omega, {x, y, z});
}

} // namespace

Vec cc01_defect(const Representation& R, const CocyclePair& p, int i, int j) {
    const Matrix& a = R.algebra.alpha;
    return vec_sub(nu_on(p, a.col(i), a.col(j)),
                   mat_apply<Rational>(R.beta, p.nu.value(std::array{i, j})));
}

Vec cc02_defect(const Representation& R, const CocyclePair& p, int i, int j, int k) {
    const Matrix& a = R.algebra.alpha;
    return vec_sub(omega_on(p, a.col(i), a.col(j), a.col(k)),
                   mat_apply<Rational>(R.beta, p.omega.value(std::array{i, j, k})));
}

Vec cc1_defect(const Representation& R, const CocyclePair& p, int i, int j, int k) {
    const HomLYAlgebra& A = R.algebra;
    const int cyc[3] = {i, j, k};
    Vec acc(static_cast<std::size_t>(R.vdim), Rational(0));
    for (int q = 0; q < 3; ++q) {
        const int a = cyc[q], b = cyc[(q + 1) % 3], c = cyc[(q + 2) % 3];
        vec_add_inplace(acc, p.omega.value(std::array{a, b, c}));
        vec_sub_inplace(acc, rho_of(R, A.alpha.col(a)) * p.nu.value(std::array{b, c}));
        vec_add_inplace(acc, nu_on(p, A.bracket(a, b), A.alpha.col(c)));
    }
    return acc;
}

Vec cc2_defect(const Representation& R, const CocyclePair& p, int i, int j, int k, int l) {
    const HomLYAlgebra& A = R.algebra;
    const int cyc[3] = {i, j, k};
    Vec acc(static_cast<std::size_t>(R.vdim), Rational(0));
    for (int q = 0; q < 3; ++q) {
        const int a = cyc[q], b = cyc[(q + 1) % 3], c = cyc[(q + 2) % 3];
        vec_add_inplace(acc, theta_of(R, A.alpha.col(a), A.alpha.col(l)) *
                                 p.nu.value(std::array{b, c}));
        vec_add_inplace(acc, omega_on(p, A.bracket(a, b), A.alpha.col(c), A.alpha.col(l)));
    }
    return acc;
}

Vec cc3_defect(const Representation& R, const CocyclePair& p, int i, int j, int k, int l) {
    const HomLYAlgebra& A = R.algebra;
    const Matrix a2 = A.alpha * A.alpha;
    Vec acc = omega_on(p, A.alpha.col(i), A.alpha.col(j), A.bracket(k, l));
    vec_add_inplace(acc, d_of(R, A.alpha.col(i), A.alpha.col(j)) * p.nu.value(std::array{k, l}));
    vec_sub_inplace(acc, nu_on(p, A.bracket(i, j, k), a2.col(l)));
    vec_sub_inplace(acc, nu_on(p, a2.col(k), A.bracket(i, j, l)));
    vec_sub_inplace(acc, rho_of(R, a2.col(k)) * p.omega.value(std::array{i, j, l}));
    vec_add_inplace(acc, rho_of(R, a2.col(l)) * p.omega.value(std::array{i, j, k}));
    return acc;
}

Vec cc4_defect(const Representation& R, const CocyclePair& p, int i, int j, int k, int l, int m) {
    const HomLYAlgebra& A = R.algebra;
    const Matrix a2 = A.alpha * A.alpha;
    Vec acc = omega_on(p, a2.col(i), a2.col(j), A.bracket(k, l, m));
    vec_add_inplace(acc, d_of(R, a2.col(i), a2.col(j)) * p.omega.value(std::array{k, l, m}));
    vec_sub_inplace(acc, omega_on(p, A.bracket(i, j, k), a2.col(l), a2.col(m)));
    vec_sub_inplace(acc, omega_on(p, a2.col(k), A.bracket(i, j, l), a2.col(m)));
    vec_sub_inplace(acc, omega_on(p, a2.col(k), a2.col(l), A.bracket(i, j, m)));
    vec_sub_inplace(acc, theta_of(R, a2.col(l), a2.col(m)) * p.omega.value(std::array{i, j, k}));
    vec_add_inplace(acc, theta_of(R, a2.col(k), a2.col(m)) * p.omega.value(std::array{i, j, l}));
    vec_sub_inplace(acc, d_of(R, a2.col(k), a2.col(l)) * p.omega.value(std::array{i, j, m}));
    return acc;
}

CocycleReport check_cocycle23(const Representation& R, const CocyclePair& p) {
    if (!R.shape_ok()) throw std::invalid_argument("check_cocycle23: representation shape mismatch");
    const int n = R.algebra.dim, v = R.vdim;
    if (p.nu.arity != 2 || p.omega.arity != 3 || p.nu.dim != n || p.omega.dim != n ||
        p.nu.vdim != v || p.omega.vdim != v || !p.nu.shape_ok() || !p.omega.shape_ok())
        throw std::invalid_argument("check_cocycle23: pair shape mismatch");

    const auto nn = static_cast<std::size_t>(n);
    CocycleReport report;

    // CC01 / CC02 are C^2 / C^3 membership: equivariance plus antisymmetry.
    {
        auto equi = scan_defects(nn * nn, [&](std::size_t idx) {
            return cc01_defect(R, p, static_cast<int>(idx / nn), static_cast<int>(idx % nn));
        });
        auto anti = scan_defects(nn * nn, [&](std::size_t idx) {
            const int i = static_cast<int>(idx / nn), j = static_cast<int>(idx % nn);
            return vec_add(p.nu.value(std::array{i, j}), p.nu.value(std::array{j, i}));
        });
        ConditionStatus st = detail::make_status("CC01", equi.first ? equi : anti, n, 2);
        st.fail_count = equi.fail_count + anti.fail_count;
        st.passed = st.fail_count == 0;
        report.conditions.push_back(std::move(st));
    }
    {
        auto equi = scan_defects(nn * nn * nn, [&](std::size_t idx) {
            int t[3];
            unpack(idx, n, 3, t);
            return cc02_defect(R, p, t[0], t[1], t[2]);
        });
        auto anti = scan_defects(nn * nn * nn, [&](std::size_t idx) {
            int t[3];
            unpack(idx, n, 3, t);
            return vec_add(p.omega.value(std::array{t[0], t[1], t[2]}),
                           p.omega.value(std::array{t[1], t[0], t[2]}));
        });
        ConditionStatus st = detail::make_status("CC02", equi.first ? equi : anti, n, 3);
        st.fail_count = equi.fail_count + anti.fail_count;
        st.passed = st.fail_count == 0;
        report.conditions.push_back(std::move(st));
    }
    {
        auto scan = scan_defects(nn * nn * nn, [&](std::size_t idx) {
            int t[3];
            unpack(idx, n, 3, t);
            return cc1_defect(R, p, t[0], t[1], t[2]);
        });
        report.conditions.push_back(detail::make_status("CC1", scan, n, 3));
    }
    {
        auto scan = scan_defects(nn * nn * nn * nn, [&](std::size_t idx) {
            int t[4];
            unpack(idx, n, 4, t);
            return cc2_defect(R, p, t[0], t[1], t[2], t[3]);
        });
        report.conditions.push_back(detail::make_status("CC2", scan, n, 4));
    }
    {
        auto scan = scan_defects(nn * nn * nn * nn, [&](std::size_t idx) {
            int t[4];
            unpack(idx, n, 4, t);
            return cc3_defect(R, p, t[0], t[1], t[2], t[3]);
        });
        report.conditions.push_back(detail::make_status("CC3", scan, n, 4));
    }
    {
        auto scan = scan_defects(nn * nn * nn * nn * nn, [&](std::size_t idx) {
            int t[5];
            unpack(idx, n, 5, t);
            return cc4_defect(R, p, t[0], t[1], t[2], t[3], t[4]);
        });
        report.conditions.push_back(detail::make_status("CC4", scan, n, 5));
    }
    return report;
}

// --- coboundaries ------------------------------------------------------------

std::vector<Matrix> bb01_space(const Representation& R) {
    const int n = R.algebra.dim, v = R.vdim;
    // unknowns f(a, i) flattened as a*n + i; rows encode f alpha - beta f = 0
    Matrix sys(v * n, v * n);
    for (int a = 0; a < v; ++a)
        for (int i = 0; i < n; ++i) {
            const int row = a * n + i;
            for (int c = 0; c < n; ++c) sys(row, a * n + c) += R.algebra.alpha(c, i);
            for (int c = 0; c < v; ++c) sys(row, c * n + i) -= R.beta(a, c);
        }
    std::vector<Matrix> basis;
    for (const Vec& k : linalg::kernel_basis(sys)) {
        Matrix f(v, n);
        for (int a = 0; a < v; ++a)
            for (int i = 0; i < n; ++i) f(a, i) = k[static_cast<std::size_t>(a) * n + i];
        basis.push_back(std::move(f));
    }
    return basis;
}

CocyclePair coboundary_of(const Representation& R, const Matrix& f) {
    const int n = R.algebra.dim, v = R.vdim;
    if (f.rows() != v || f.cols() != n)
        throw std::invalid_argument("coboundary_of: f must be vdim x dim");
    if (!(f * R.algebra.alpha == R.beta * f))
        throw PreconditionError("BB01Violation", "f does not intertwine the twists");

    const HomLYAlgebra& A = R.algebra;
    CocyclePair p = CocyclePair::zeros(n, v);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec nu = R.rho[i] * f.col(j);
            vec_sub_inplace(nu, R.rho[j] * f.col(i));
            vec_sub_inplace(nu, f * A.bracket(i, j));
            for (int c = 0; c < v; ++c) p.nu.at(std::array{i, j}, c) = nu[c];
            for (int k = 0; k < n; ++k) {
                Vec om = R.theta_at(j, k) * f.col(i);
                vec_sub_inplace(om, R.theta_at(i, k) * f.col(j));
                vec_add_inplace(om, R.d_at(i, j) * f.col(k));
                vec_sub_inplace(om, f * A.bracket(i, j, k));
                for (int c = 0; c < v; ++c) p.omega.at(std::array{i, j, k}, c) = om[c];
            }
        }
    return p;
}

namespace {

Vec pair_raw(const CocyclePair& p) {
    Vec raw = p.nu.coeffs;
    raw.insert(raw.end(), p.omega.coeffs.begin(), p.omega.coeffs.end());
    return raw;
}

} // namespace

std::optional<Matrix> decompose(const Representation& R, const CocyclePair& p) {
    if (!check_cocycle23(R, p).passed())
        throw PreconditionError("NotACocycle", "decompose expects a (2,3)-cocycle");

    const auto basis = bb01_space(R);
    const Vec target = pair_raw(p);
    Matrix sys(static_cast<int>(target.size()), static_cast<int>(basis.size()));
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const Vec col = pair_raw(coboundary_of(R, basis[b]));
        sys.set_col(static_cast<int>(b), col);
    }
    auto coeffs = linalg::solve(sys, target);
    if (!coeffs) return std::nullopt;

    Matrix f(R.vdim, R.algebra.dim);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if ((*coeffs)[b].is_zero()) continue;
        f += (*coeffs)[b] * basis[b];
    }
    return f;
}

bool is_derivation(const Representation& R, const Matrix& f) {
    if (f.rows() != R.vdim || f.cols() != R.algebra.dim)
        throw std::invalid_argument("is_derivation: f must be vdim x dim");
    if (!(f * R.algebra.alpha == R.beta * f)) return false;
    const CocyclePair p = coboundary_of(R, f);
    return p.nu.is_zero() && p.omega.is_zero();
}

std::vector<Matrix> derivation_space(const Representation& R) {
    const auto basis = bb01_space(R);
    if (basis.empty()) return {};
    const std::size_t raw_len = pair_raw(coboundary_of(R, basis[0])).size();
    Matrix sys(static_cast<int>(raw_len), static_cast<int>(basis.size()));
    for (std::size_t b = 0; b < basis.size(); ++b)
        sys.set_col(static_cast<int>(b), pair_raw(coboundary_of(R, basis[b])));

    std::vector<Matrix> out;
    for (const Vec& k : linalg::kernel_basis(sys)) {
        Matrix f(R.vdim, R.algebra.dim);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (k[b].is_zero()) continue;
            f += k[b] * basis[b];
        }
        out.push_back(std::move(f));
    }
    return out;
}

// --- the (2,3)-cohomology ----------------------------------------------------

namespace {

Matrix hstack(const Matrix& a, const Matrix& b) {
    Matrix m(std::max(a.rows(), b.rows()), a.cols() + b.cols());
    if (a.cols() > 0) m.set_block(0, 0, a);
    if (b.cols() > 0) m.set_block(0, a.cols(), b);
    return m;
}

/// Greedily selects columns of candidates that increase the rank of the
/// stack of already-kept columns (seeded with `seed`).
std::vector<int> greedy_independent(const Matrix& seed, const Matrix& candidates) {
    std::vector<int> kept;
    Matrix current = seed;
    int current_rank = linalg::rank(current);
    for (int c = 0; c < candidates.cols(); ++c) {
        Matrix trial(candidates.rows(), current.cols() + 1);
        if (current.cols() > 0) trial.set_block(0, 0, current);
        for (int r = 0; r < candidates.rows(); ++r) trial(r, current.cols()) = candidates(r, c);
        const int rank = linalg::rank(trial);
        if (rank > current_rank) {
            kept.push_back(c);
            current = std::move(trial);
            current_rank = rank;
        }
    }
    return kept;
}

Matrix take_columns(const Matrix& m, const std::vector<int>& cols) {
    Matrix out(m.rows(), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (int r = 0; r < m.rows(); ++r) out(r, static_cast<int>(i)) = m(r, cols[i]);
    return out;
}

} // namespace

Cohomology23 cohomology23(const Representation& R, const SizeGuard& guard) {
    {
        RepReport rr = check_representation(R);
        if (!rr.passed())
            throw PreconditionError("InvalidRepresentation",
                                    "cohomology23 requires a valid representation; first failing "
                                    "condition " + rr.failing_names().front());
    }
    const int n = R.algebra.dim, v = R.vdim;
    const auto nn = static_cast<std::size_t>(n);

    Cohomology23 H;
    H.c2 = cochain_space(R, 2, guard);
    H.c3 = cochain_space(R, 3, guard);
    const int d2 = H.c2.dimension(), d3 = H.c3.dimension();

    // one linear system CC1..CC4 over C^2 (+) C^3
    const std::size_t rows = nn * nn * nn + 2 * nn * nn * nn * nn + nn * nn * nn * nn * nn;
    Matrix sys(static_cast<int>(rows * static_cast<std::size_t>(v)), d2 + d3);

    auto fill_column = [&](int col, const CocyclePair& p) {
        std::size_t row = 0;
        int t[5];
        for (std::size_t idx = 0; idx < nn * nn * nn; ++idx) {
            unpack(idx, n, 3, t);
            const Vec d = cc1_defect(R, p, t[0], t[1], t[2]);
            for (int c = 0; c < v; ++c) sys(static_cast<int>(row++), col) = d[c];
        }
        for (std::size_t idx = 0; idx < nn * nn * nn * nn; ++idx) {
            unpack(idx, n, 4, t);
            const Vec d = cc2_defect(R, p, t[0], t[1], t[2], t[3]);
            for (int c = 0; c < v; ++c) sys(static_cast<int>(row++), col) = d[c];
        }
        for (std::size_t idx = 0; idx < nn * nn * nn * nn; ++idx) {
            unpack(idx, n, 4, t);
            const Vec d = cc3_defect(R, p, t[0], t[1], t[2], t[3]);
            for (int c = 0; c < v; ++c) sys(static_cast<int>(row++), col) = d[c];
        }
        for (std::size_t idx = 0; idx < nn * nn * nn * nn * nn; ++idx) {
            unpack(idx, n, 5, t);
            const Vec d = cc4_defect(R, p, t[0], t[1], t[2], t[3], t[4]);
            for (int c = 0; c < v; ++c) sys(static_cast<int>(row++), col) = d[c];
        }
    };

    for (int b = 0; b < d2; ++b) {
        CocyclePair p{H.c2.basis[b], Cochain::zeros(3, n, v)};
        fill_column(b, p);
    }
    for (int b = 0; b < d3; ++b) {
        CocyclePair p{Cochain::zeros(2, n, v), H.c3.basis[b]};
        fill_column(d2 + b, p);
    }

    const auto zkernel = linalg::kernel_basis(sys);
    H.zdim = static_cast<int>(zkernel.size());
    H.z_basis = Matrix(d2 + d3, H.zdim);
    for (int b = 0; b < H.zdim; ++b) H.z_basis.set_col(b, zkernel[static_cast<std::size_t>(b)]);

    // B: coboundaries expressed in the same coordinates
    const auto fbasis = bb01_space(R);
    Matrix bmat(d2 + d3, static_cast<int>(fbasis.size()));
    for (std::size_t b = 0; b < fbasis.size(); ++b) {
        const CocyclePair p = coboundary_of(R, fbasis[b]);
        auto cn = H.c2.coordinates(p.nu);
        auto co = H.c3.coordinates(p.omega);
        if (!cn || !co) throw std::logic_error("coboundary escaped the cochain spaces");
        for (int r = 0; r < d2; ++r) bmat(r, static_cast<int>(b)) = (*cn)[r];
        for (int r = 0; r < d3; ++r) bmat(d2 + r, static_cast<int>(b)) = (*co)[r];
    }
    const auto bkeep = greedy_independent(Matrix(d2 + d3, 0), bmat);
    H.b_basis = take_columns(bmat, bkeep);
    H.bdim = H.b_basis.cols();

    // deterministic complement of B inside Z
    const auto rkeep = greedy_independent(H.b_basis, H.z_basis);
    H.rep_coords = take_columns(H.z_basis, rkeep);
    H.hdim_joint = H.zdim - H.bdim;
    if (H.rep_coords.cols() != H.hdim_joint)
        throw std::logic_error("coboundary space escaped the cocycle space");

    // componentwise projections of the fixed complement
    {
        Matrix p2(d2, H.rep_coords.cols()), p3(d3, H.rep_coords.cols());
        for (int c = 0; c < H.rep_coords.cols(); ++c) {
            for (int r = 0; r < d2; ++r) p2(r, c) = H.rep_coords(r, c);
            for (int r = 0; r < d3; ++r) p3(r, c) = H.rep_coords(d2 + r, c);
        }
        H.hdim2 = linalg::rank(p2);
        H.hdim3 = linalg::rank(p3);
    }

    for (int c = 0; c < H.rep_coords.cols(); ++c)
        H.representatives.push_back(H.pair_from_coords(H.rep_coords.col(c)));
    return H;
}

CocyclePair Cohomology23::pair_from_coords(const Vec& joint) const {
    const int d2 = c2.dimension(), d3 = c3.dimension();
    if (static_cast<int>(joint.size()) != d2 + d3)
        throw std::invalid_argument("pair_from_coords: coordinate length mismatch");
    Vec a(joint.begin(), joint.begin() + d2);
    Vec b(joint.begin() + d2, joint.end());
    return CocyclePair{c2.combine(a), c3.combine(b)};
}

Vec Cohomology23::class_coordinates(const CocyclePair& p) const {
    auto cn = c2.coordinates(p.nu);
    auto co = c3.coordinates(p.omega);
    if (!cn || !co)
        throw PreconditionError("NotACochainPair", "pair is outside C^2 x C^3");
    Vec joint = *cn;
    joint.insert(joint.end(), co->begin(), co->end());

    const Matrix sys = hstack(b_basis, rep_coords);
    auto sol = linalg::solve(sys, joint);
    if (!sol) throw PreconditionError("NotACocycle", "pair is not in the cocycle space");
    return Vec(sol->begin() + b_basis.cols(), sol->end());
}

HigherCohomology cohomology_higher(const Representation& R, int level, const SizeGuard& guard) {
    if (level < 2)
        throw PreconditionError("InvalidLevel",
                                "cohomology_higher is defined for levels n >= 2; use "
                                "cohomology23 for the (2,3) case");
    {
        RepReport rr = check_representation(R);
        if (!rr.passed())
            throw PreconditionError("InvalidRepresentation",
                                    "cohomology_higher requires a valid representation");
    }
    const Matrix up = delta_matrix(R, level, guard);
    const Matrix down = delta_matrix(R, level - 1, guard);
    HigherCohomology h;
    h.zdim = up.cols() - linalg::rank(up);
    h.bdim = linalg::rank(down);
    h.hdim = h.zdim - h.bdim;
    return h;
}

} // namespace hlya
