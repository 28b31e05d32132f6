#pragma once

#include "hlya/rational.hpp"

#include <string>
#include <vector>

namespace hlya {

/// Dense polynomial in the formal deformation parameter, with exact rational
/// coefficients. Invariant: the highest stored coefficient is nonzero; the
/// zero polynomial has an empty coefficient list.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) c_ = {c}; } // NOLINT: constants embed implicitly
    Poly(long n) : Poly(Rational(n)) {}

    /// The deformation parameter itself (degree-1 monomial).
    static Poly lambda();
    static Poly from_coeffs(std::vector<Rational> coeffs);

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rational& b) { return b * a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Human-readable form, e.g. "0", "1 - 3/2*l + l^2" (l is the parameter).
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace hlya
