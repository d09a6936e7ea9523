#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgalg/rational.hpp"

namespace sgalg {

class MultiPoly;

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Leading coefficient is nonzero unless the polynomial is zero (empty).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const;

    Rational eval(const Rational& x) const;
    // Image of [lo, hi] under this polynomial, by interval arithmetic
    // (Horner). Conservative enclosure.
    std::pair<Rational, Rational> eval_interval(const Rational& lo, const Rational& hi) const;

    UniPoly derivative() const;
    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly scaled(const Rational& k) const;
    UniPoly monic() const;
    // Integer coefficients, content 1, positive leading coefficient.
    UniPoly primitive() const;

    // Quotient and remainder; divisor nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

    std::string str(const std::string& var = "z") const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

// Monic gcd; both inputs not both zero.
UniPoly unipoly_gcd(UniPoly a, UniPoly b);

// p / gcd(p, p'), primitive. Same real roots, all simple. p nonzero.
UniPoly squarefree_part(const UniPoly& p);

// Standard Sturm chain of a nonzero square-free polynomial. Sign variation
// difference V(a) - V(b) counts distinct real roots in (a, b].
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x);
// Distinct real roots in (a, b].
int count_roots(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b);

// 1 + max |a_i| / |a_n|; every real root lies in (-B, B).
Rational cauchy_root_bound(const UniPoly& p);

// Dense view of a multivariate polynomial involving a single variable.
// Throws if any other variable appears.
UniPoly to_univariate(const MultiPoly& p, std::size_t var);

}  // namespace sgalg
