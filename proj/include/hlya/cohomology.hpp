#pragma once

#include "hlya/representation.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hlya {

/// Refuses raw coefficient spaces larger than max_raw (vdim * dim^arity
/// coordinates). Override through the CLI flag --max-size.
struct SizeGuard {
    long long max_raw = 1'000'000;
};

/// An m-linear map T^m -> V stored as the coefficient tensor
/// f(e_{i1},...,e_{im}) in V-coordinates. Membership in the cochain space
/// C^m additionally requires (alpha, beta)-equivariance and antisymmetry in
/// each adjacent argument pair (2k-1, 2k); see cochain_space.
struct Cochain {
    int arity = 0;
    int dim = 0;  // algebra dimension n
    int vdim = 0; // module dimension
    std::vector<Rational> coeffs; // vdim * dim^arity entries; tuple-major, component last

    static Cochain zeros(int arity, int dim, int vdim);

    std::size_t tuple_count() const;
    std::size_t flat(std::span<const int> tuple) const; // tuple index (0-based entries)

    Rational& at(std::span<const int> tuple, int comp);
    const Rational& at(std::span<const int> tuple, int comp) const;
    Vec value(std::span<const int> tuple) const;

    bool is_zero() const { return vec_is_zero(coeffs); }
    bool shape_ok() const;

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { a += b; return a; }
    friend Cochain operator-(Cochain a, const Cochain& b) { a -= b; return a; }
    friend Cochain operator*(const Rational& s, Cochain c);
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.arity == b.arity && a.dim == b.dim && a.vdim == b.vdim && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }
};

/// Multilinear evaluation of a cochain on coordinate-vector arguments.
Vec eval_cochain(const Cochain& c, const std::vector<Vec>& args);

/// Exact membership test for C^arity over the representation's twists.
bool is_cochain(const Representation& R, const Cochain& c);

/// C^m as the solution space of the equivariance and pair-antisymmetry
/// constraints, with a deterministic echelon basis.
struct CochainSpace {
    int arity = 0, dim = 0, vdim = 0;
    std::vector<Cochain> basis;
    Matrix raw; // raw coefficient space; one column per basis cochain

    int dimension() const { return static_cast<int>(basis.size()); }

    /// Coordinates of c in this basis, or nullopt when c is outside the space.
    std::optional<Vec> coordinates(const Cochain& c) const;
    Cochain combine(const Vec& coords) const;
};

CochainSpace cochain_space(const Representation& R, int arity, const SizeGuard& guard = {});

/// A (nu, omega) candidate pair of arities (2, 3).
struct CocyclePair {
    Cochain nu;
    Cochain omega;

    static CocyclePair zeros(int dim, int vdim);

    CocyclePair& operator+=(const CocyclePair& o) { nu += o.nu; omega += o.omega; return *this; }
    CocyclePair& operator-=(const CocyclePair& o) { nu -= o.nu; omega -= o.omega; return *this; }
    friend CocyclePair operator+(CocyclePair a, const CocyclePair& b) { a += b; return a; }
    friend CocyclePair operator-(CocyclePair a, const CocyclePair& b) { a -= b; return a; }
    friend bool operator==(const CocyclePair& a, const CocyclePair& b) {
        return a.nu == b.nu && a.omega == b.omega;
    }
    friend bool operator!=(const CocyclePair& a, const CocyclePair& b) { return !(a == b); }
};

/// The coboundary pair delta = (delta_I, delta_II) of level n >= 1 applied to
/// (f, g) in C^{2n} x C^{2n+1}; returns elements of C^{2n+2} x C^{2n+3}.
/// Note delta_I consumes both f and g. Inputs must be members of their
/// cochain spaces; outputs are verified to be members (well-definedness).
std::pair<Cochain, Cochain> delta(const Representation& R, int level, const Cochain& f,
                                  const Cochain& g);

/// Matrix of delta from C^{2n} (+) C^{2n+1} to C^{2n+2} (+) C^{2n+3} in the
/// deterministic cochain_space bases.
Matrix delta_matrix(const Representation& R, int level, const SizeGuard& guard = {});

// Per-tuple defects of the (2,3)-cocycle conditions (0-based indices).
Vec cc01_defect(const Representation& R, const CocyclePair& p, int i, int j);
Vec cc02_defect(const Representation& R, const CocyclePair& p, int i, int j, int k);
Vec cc1_defect(const Representation& R, const CocyclePair& p, int i, int j, int k);
Vec cc2_defect(const Representation& R, const CocyclePair& p, int i, int j, int k, int l);
Vec cc3_defect(const Representation& R, const CocyclePair& p, int i, int j, int k, int l);
Vec cc4_defect(const Representation& R, const CocyclePair& p, int i, int j, int k, int l, int m);

using CocycleReport = CheckReport;

/// Report over CC01, CC02 (cochain-space membership of nu and omega) and the
/// coupled conditions CC1..CC4, each expanded on all basis tuples.
CocycleReport check_cocycle23(const Representation& R, const CocyclePair& p);

/// Basis of the space { f : V-valued, f o alpha = beta o f } of coboundary
/// generators (condition BB01), as vdim x dim matrices.
std::vector<Matrix> bb01_space(const Representation& R);

/// The (2,3)-coboundary of f per BB1/BB2. Rejects f violating BB01.
CocyclePair coboundary_of(const Representation& R, const Matrix& f);

/// Solves BB1/BB2 for f with coboundary_of(f) = p; deterministic
/// representative, or nullopt when p is not a coboundary. Rejects pairs that
/// fail check_cocycle23.
std::optional<Matrix> decompose(const Representation& R, const CocyclePair& p);

/// True iff f satisfies BB01 and coboundary_of(f) = (0, 0).
bool is_derivation(const Representation& R, const Matrix& f);
std::vector<Matrix> derivation_space(const Representation& R);

/// The (2,3)-cohomology data: Z is the joint kernel of CC1..CC4 inside
/// C^2 x C^3, B the image of coboundary_of over the BB01-compatible maps.
/// representatives span a deterministic complement of B in Z; hdim2/hdim3
/// are the dimensions of its componentwise projections, hdim_joint = Z - B
/// is the canonical output.
struct Cohomology23 {
    CochainSpace c2, c3;
    int zdim = 0, bdim = 0;
    int hdim2 = 0, hdim3 = 0, hdim_joint = 0;
    std::vector<CocyclePair> representatives;

    Matrix z_basis;    // (dim C^2 + dim C^3) x zdim
    Matrix b_basis;    // independent coboundary coordinates, bdim columns
    Matrix rep_coords; // complement coordinates, hdim_joint columns

    /// Coordinates of a cocycle's class in the representative basis.
    Vec class_coordinates(const CocyclePair& p) const;

    CocyclePair pair_from_coords(const Vec& joint) const; // joint = C^2 (+) C^3 coordinates
};

Cohomology23 cohomology23(const Representation& R, const SizeGuard& guard = {});

struct HigherCohomology {
    int zdim = 0, bdim = 0, hdim = 0;
};

/// H^{2n} x H^{2n+1} dimensions for n >= 2, from ker delta_matrix(n) and
/// im delta_matrix(n-1).
HigherCohomology cohomology_higher(const Representation& R, int level,
                                   const SizeGuard& guard = {});

} // namespace hlya
