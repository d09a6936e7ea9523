#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace sgalg {

// Arbitrary-precision integer. GMP supplies the limb arithmetic; this alias
// is the only place the backend shows through.
using BigInt = mpz_class;

BigInt bigint_pow(const BigInt& base, unsigned long exp);

// Exact rational scalar. Always canonical: denominator > 0 and
// gcd(|num|, den) = 1; zero is 0/1. Every constructor and operator keeps the
// invariant, so equality is plain structural comparison.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rational(long n, long d);
    Rational(const BigInt& n, const BigInt& d);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "123", "-4/5". No decimal or exponent forms.
    static Rational parse(const std::string& text);
    // Accepts parse() forms plus "1.5", "1e-9", "2.5e3" for CLI convenience.
    static Rational parse_decimal(const std::string& text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inv() const;
    Rational pow(unsigned long e) const;

    // Largest integer <= value.
    BigInt floor() const;

    // Nearest multiple of 1/2^bits (ties toward +inf). Used to keep value
    // iteration denominators bounded.
    Rational round_to_grid(unsigned bits) const;

    // "num" or "num/den", canonical.
    std::string str() const;
    // Fixed-point decimal with `digits` fractional digits, rounded half away
    // from zero. Exact integer arithmetic, no floating point.
    std::string decimal(unsigned digits) const;

    double to_double() const { return q_.get_d(); }

  private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.abs(); }
Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

// 10^-k as an exact rational.
Rational pow10_inv(unsigned k);

}  // namespace sgalg
