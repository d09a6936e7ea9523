#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgalg/rational.hpp"

namespace sgalg {

// Exponent vector over variables z0..z_{n-1}. z0 is the discount variable,
// z_s the unknown value of state s. Fixed length per problem.
struct Monomial {
    std::vector<unsigned> e;

    explicit Monomial(std::size_t nvars = 0) : e(nvars, 0) {}
    static Monomial var(std::size_t i, std::size_t nvars, unsigned power = 1);

    std::size_t nvars() const { return e.size(); }
    unsigned total_degree() const;
    bool is_constant() const { return total_degree() == 0; }
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& o) const;
    // Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    // Canonical map order: plain lexicographic on the exponent vector.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

// Lexicographic term order given by a significance permutation (most
// significant variable first). Total, multiplicative, with 1 minimal.
class TermOrder {
  public:
    explicit TermOrder(std::vector<unsigned> significance);

    // z_{n-1} > ... > z1 > z0.
    static TermOrder plain_lex(std::size_t nvars);
    // Order used to decouple state s (1-based among n-1 states):
    // z0 < z_s < z_{s+1} < ... < z_N < z_1 < ... < z_{s-1}.
    static TermOrder elimination_for_state(std::size_t nvars, std::size_t s);

    // True if a is strictly smaller than b.
    bool less(const Monomial& a, const Monomial& b) const;
    const std::vector<unsigned>& significance() const { return sig_; }
    std::size_t nvars() const { return sig_.size(); }

    friend bool operator==(const TermOrder& a, const TermOrder& b) { return a.sig_ == b.sig_; }

  private:
    std::vector<unsigned> sig_;
};

// Sparse multivariate polynomial over Q. No zero coefficients are stored, so
// structural equality is polynomial equality.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(const Rational& c, std::size_t nvars);
    static MultiPoly variable(std::size_t i, std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const Rational& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Largest term under the given order. Polynomial must be nonzero.
    std::pair<Monomial, Rational> leading_term(const TermOrder& order) const;

    MultiPoly substitute(std::size_t var, const Rational& value) const;
    Rational eval(const std::vector<Rational>& point) const;
    bool involves(std::size_t var) const;
    // True if every variable with nonzero exponent is in `vars`.
    bool involves_only(const std::vector<std::size_t>& vars) const;

    // Exact division; returns false if the divisor does not divide exactly.
    bool divide_exact(const MultiPoly& divisor, MultiPoly& quotient) const;

    // Monic w.r.t. the order (leading coefficient 1).
    MultiPoly monic(const TermOrder& order) const;
    // Integer coefficients with content 1 and positive leading coefficient
    // under plain lex. Used for printing golden certificates.
    MultiPoly integer_cleared() const;

    // Up-to-scalar proportionality test (both nonzero, same monomials, one
    // rational ratio).
    static bool proportional(const MultiPoly& a, const MultiPoly& b);

    std::string str(const std::vector<std::string>& var_names = {}) const;

  private:
    std::size_t nvars_;
    TermMap terms_;
};

// Largest l with factor^l dividing p exactly, together with p / factor^l.
// p must be nonzero.
std::pair<unsigned, MultiPoly> content_power(const MultiPoly& p, const MultiPoly& factor);

std::vector<std::string> default_var_names(std::size_t nvars);

}  // namespace sgalg
