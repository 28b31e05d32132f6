#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace hlya {

/// Exact rational scalar backed by GMP. Values are kept canonical at all
/// times: positive denominator, fully reduced, zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d);

    explicit Rational(mpq_class q);

    /// Parses "p" or "p/q" (base 10, optional leading sign). Non-canonical
    /// input such as "2/4" or "1/-2" is reduced. Throws std::invalid_argument
    /// on malformed text or a zero denominator.
    static Rational parse(std::string_view s);

    std::string str() const;

    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

} // namespace hlya
