#pragma once

#include <string>
#include <vector>

#include "sgalg/matrix_game.hpp"
#include "sgalg/rational.hpp"

namespace sgalg {

enum class Mode { normalized, unnormalized };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& name);

// Finite zero-sum stochastic game. For each state s the stage game is
// rewards[s]; transitions[s][a*n+b][t] is the probability of moving to state
// t after actions (a, b). Rows of the transition tensor sum to one exactly.
struct StochasticGame {
    std::size_t states = 0;
    std::vector<MatrixGame> rewards;
    std::vector<std::vector<std::vector<Rational>>> transitions;

    std::size_t action_rows(std::size_t s) const { return rewards[s].rows; }
    std::size_t action_cols(std::size_t s) const { return rewards[s].cols; }
    const std::vector<Rational>& transition(std::size_t s, std::size_t a, std::size_t b) const {
        return transitions[s][a * rewards[s].cols + b];
    }
    Rational min_reward() const;
    void validate() const;
};

StochasticGame parse_game(const std::string& text);
std::string serialize_game(const StochasticGame& g);

// Uniform reward shift making every reward >= 1, so every normalized value
// is >= 1 and in particular nonzero.
struct ShiftRecord {
    Rational c;
};

std::pair<StochasticGame, ShiftRecord> shift_rewards(const StochasticGame& g);

// Undo the shift on a value: normalized values move by c, unnormalized ones
// by c/(1-beta).
Rational unshift_value(const Rational& v, const Rational& c, Mode mode, const Rational& beta);

// Probability vector check used by strategy post-conditions.
void validate_distribution(const std::vector<Rational>& p);

}  // namespace sgalg
