#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sgalg/error.hpp"
#include "sgalg/game.hpp"
#include "sgalg/shapley.hpp"

using namespace sgalg;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* kOneByOne =
    "states: 1\n"
    "state 1:\n"
    "rewards:\n"
    "0\n"
    "transitions:\n"
    "1\n";

}  // namespace

TEST_CASE("parse the bundled switching-controller game") {
    StochasticGame g = parse_game(read_file(std::string(SGALG_GAMES_DIR) + "/switching_controller.game"));
    CHECK(g.states == 2);
    CHECK(g.action_rows(0) == 3);
    CHECK(g.action_cols(0) == 3);
    CHECK(g.rewards[0].at(0, 0) == Rational(-2));
    CHECK(g.rewards[0].at(0, 1) == Rational(4));
    CHECK(g.rewards[0].at(0, 2) == Rational(6));
    CHECK(g.transition(0, 0, 0) == std::vector<Rational>{Rational(3, 10), Rational(7, 10)});
    CHECK(g.transition(0, 0, 2) == std::vector<Rational>{Rational(3, 10), Rational(7, 10)});
    CHECK(g.transition(1, 0, 1) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("trivial single-state game is valid") {
    StochasticGame g = parse_game(kOneByOne);
    CHECK(g.states == 1);
    CHECK(g.rewards[0].at(0, 0) == Rational(0));
}

TEST_CASE("stochasticity violations are reported with coordinates") {
    std::string bad =
        "states: 1\n"
        "state 1:\n"
        "rewards:\n"
        "0\n"
        "transitions:\n"
        "1/2 1/3\n";  // wrong arity AND wrong sum; arity reported first
    CHECK_THROWS_AS(parse_game(bad), ParseError);

    std::string bad_sum =
        "states: 2\n"
        "state 1:\n"
        "rewards:\n"
        "0\n"
        "transitions:\n"
        "1/2 1/3\n"
        "state 2:\n"
        "rewards:\n"
        "0\n"
        "transitions:\n"
        "0 1\n";
    CHECK_THROWS_WITH_AS(parse_game(bad_sum),
                         "transitions sum to 5/6 != 1 at state 1, actions (1,1)", ParseError);

    std::string negative =
        "states: 2\n"
        "state 1:\n"
        "rewards:\n"
        "0\n"
        "transitions:\n"
        "3/2 -1/2\n"
        "state 2:\n"
        "rewards:\n"
        "0\n"
        "transitions:\n"
        "0 1\n";
    CHECK_THROWS_WITH_AS(parse_game(negative),
                         "negative transition probability -1/2 at state 1, actions (1,1)",
                         ParseError);
}

TEST_CASE("empty and malformed files") {
    CHECK_THROWS_AS(parse_game(""), ParseError);
    CHECK_THROWS_AS(parse_game("states: 0\n"), ParseError);
    CHECK_THROWS_AS(parse_game("states: 1\nstate 1:\nrewards:\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_game("nonsense\n"), ParseError);
}

TEST_CASE("parse-serialize-parse is the identity on canonical files") {
    for (const char* name : {"/switching_controller.game", "/reward_diagonal.game"}) {
        std::string text = read_file(std::string(SGALG_GAMES_DIR) + name);
        StochasticGame g = parse_game(text);
        std::string round = serialize_game(g);
        CHECK(round == text);
        CHECK(serialize_game(parse_game(round)) == round);
    }
}

TEST_CASE("reward shift") {
    StochasticGame g = parse_game(read_file(std::string(SGALG_GAMES_DIR) + "/switching_controller.game"));
    auto [shifted, rec] = shift_rewards(g);
    CHECK(rec.c == Rational(3));  // minimum reward is -2
    CHECK(shifted.min_reward() >= Rational(1));
    CHECK(shifted.transitions == g.transitions);

    StochasticGame g2 = parse_game(read_file(std::string(SGALG_GAMES_DIR) + "/reward_diagonal.game"));
    auto [shifted2, rec2] = shift_rewards(g2);
    CHECK(rec2.c == Rational(1));  // minimum reward is 0

    auto [shifted3, rec3] = shift_rewards(shifted2);
    CHECK(rec3.c == Rational(0));  // already >= 1
}

TEST_CASE("unshift value") {
    CHECK(unshift_value(Rational(5), Rational(3), Mode::normalized, Rational(1, 2)) == Rational(2));
    CHECK(unshift_value(Rational(5), Rational(0), Mode::normalized, Rational(1, 2)) == Rational(5));
    CHECK(unshift_value(Rational(10), Rational(3), Mode::unnormalized, Rational(1, 2)) == Rational(4));
    CHECK_THROWS_AS(unshift_value(Rational(1), Rational(1), Mode::unnormalized, Rational(1)),
                    DomainError);
}

TEST_CASE("state relabeling permutes the value vector") {
    StochasticGame g = parse_game(read_file(std::string(SGALG_GAMES_DIR) + "/switching_controller.game"));
    // swap the two states, remapping transition targets
    StochasticGame swapped;
    swapped.states = 2;
    swapped.rewards = {g.rewards[1], g.rewards[0]};
    swapped.transitions.resize(2);
    for (std::size_t s = 0; s < 2; ++s) {
        for (const auto& row : g.transitions[1 - s]) {
            swapped.transitions[s].push_back({row[1], row[0]});
        }
    }
    swapped.validate();
    Rational beta(1, 2), tol(1, 1000000);
    ValueEstimate a = value_iteration(g, beta, Mode::normalized, tol);
    ValueEstimate b = value_iteration(swapped, beta, Mode::normalized, tol);
    CHECK((a.v[0] - b.v[1]).abs() <= a.error_bound + b.error_bound);
    CHECK((a.v[1] - b.v[0]).abs() <= a.error_bound + b.error_bound);
}

TEST_CASE("shift leaves optimal supports unchanged") {
    StochasticGame g = parse_game(read_file(std::string(SGALG_GAMES_DIR) + "/switching_controller.game"));
    auto [shifted, rec] = shift_rewards(g);
    Rational beta(1, 2), tol(1, 100000000);
    ValueEstimate plain = value_iteration(g, beta, Mode::normalized, tol);
    ValueEstimate moved = value_iteration(shifted, beta, Mode::normalized, tol);
    for (std::size_t s = 0; s < 2; ++s) {
        // shifted normalized values move by exactly c (within bounds)
        CHECK((moved.v[s] - plain.v[s] - rec.c).abs() <= plain.error_bound + moved.error_bound);
    }
}
