#include "sgalg/shapley.hpp"

#include "sgalg/error.hpp"

namespace sgalg {

MatrixGame aux_game(const StochasticGame& g, std::size_t s, const std::vector<Rational>& u,
                    const Rational& beta, Mode mode) {
    if (s >= g.states) throw DomainError("aux_game: state index out of range");
    if (u.size() != g.states) throw DomainError("aux_game: continuation vector has wrong dimension");
    const MatrixGame& R = g.rewards[s];
    MatrixGame A(R.rows, R.cols);
    Rational one_minus_beta = Rational(1) - beta;
    for (std::size_t a = 0; a < R.rows; ++a) {
        for (std::size_t b = 0; b < R.cols; ++b) {
            Rational cont(0);
            const auto& row = g.transition(s, a, b);
            for (std::size_t t = 0; t < g.states; ++t)
                if (!row[t].is_zero()) cont += row[t] * u[t];
            Rational reward = mode == Mode::normalized ? one_minus_beta * R.at(a, b) : R.at(a, b);
            A.at(a, b) = reward + beta * cont;
        }
    }
    return A;
}

std::vector<Rational> shapley_operator(const StochasticGame& g, const std::vector<Rational>& u,
                                       const Rational& beta, Mode mode) {
    std::vector<Rational> out(g.states);
    for (std::size_t s = 0; s < g.states; ++s)
        out[s] = solve_matrix_game(aux_game(g, s, u, beta, mode)).value;
    return out;
}

namespace {

Rational sup_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational d(0);
    for (std::size_t i = 0; i < a.size(); ++i) d = max(d, (a[i] - b[i]).abs());
    return d;
}

}  // namespace

ValueEstimate value_iteration(const StochasticGame& g, const Rational& beta, Mode mode,
                              const Rational& tol, const IterationOptions& opts) {
    if (tol.sign() <= 0) throw UsageError("tolerance must be positive");
    if (beta.sign() <= 0 || beta >= Rational(1)) throw UsageError("beta must be in (0,1)");

    std::vector<Rational> u = opts.start.value_or(std::vector<Rational>(g.states, Rational(0)));
    if (u.size() != g.states) throw DomainError("start vector has wrong dimension");

    Rational contraction_to_bound = beta / (Rational(1) - beta);
    ValueEstimate est;
    est.mode = mode;
    for (unsigned long it = 1; it <= opts.max_iterations; ++it) {
        std::vector<Rational> w = shapley_operator(g, u, beta, mode);
        Rational step = sup_distance(w, u);
        Rational bound = contraction_to_bound * step;
        if (bound <= tol) {
            est.v = w;
            est.error_bound = bound;
            est.residual = sup_distance(shapley_operator(g, w, beta, mode), w);
            est.iterations = it;
            return est;
        }
        // rounding keeps denominators bounded across iterations
        u.resize(g.states);
        for (std::size_t s = 0; s < g.states; ++s) u[s] = w[s].round_to_grid(opts.grid_bits);
    }
    throw CapExceededError("value iteration: tolerance " + tol.str() + " not reached within " +
                           std::to_string(opts.max_iterations) + " iterations");
}

}  // namespace sgalg
