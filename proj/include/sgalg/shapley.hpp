#pragma once

#include <optional>
#include <vector>

#include "sgalg/game.hpp"
#include "sgalg/matrix_game.hpp"

namespace sgalg {

// Auxiliary stage game at continuation vector u. Normalized entries are
// (1-beta) r + beta sum p u; unnormalized entries postpone the (1-beta)
// factor and read r + beta sum p u.
MatrixGame aux_game(const StochasticGame& g, std::size_t s, const std::vector<Rational>& u,
                    const Rational& beta, Mode mode);

// Component s is the exact value of the auxiliary game in state s.
std::vector<Rational> shapley_operator(const StochasticGame& g, const std::vector<Rational>& u,
                                       const Rational& beta, Mode mode);

struct ValueEstimate {
    std::vector<Rational> v;   // exact image of the final iterate
    Rational residual;         // ||T(v) - v||_inf, exact
    Rational error_bound;      // beta/(1-beta) * last contraction step; ||v - v*|| <= error_bound
    Mode mode = Mode::normalized;
    unsigned long iterations = 0;
};

struct IterationOptions {
    std::optional<std::vector<Rational>> start;  // default: zero vector
    unsigned long max_iterations = 2'000'000;
    unsigned grid_bits = 128;  // iterates are rounded to denominators 2^grid_bits
};

// Fixed-point iteration of the Shapley operator with a certified sup-norm
// bound. The returned vector is v = T(u) for the last accepted iterate u and
// the bound beta/(1-beta) * ||T(u) - u|| is exact. Rounding the trajectory to
// the denominator grid only affects the path, never the certificate.
ValueEstimate value_iteration(const StochasticGame& g, const Rational& beta, Mode mode,
                              const Rational& tol, const IterationOptions& opts = {});

}  // namespace sgalg
