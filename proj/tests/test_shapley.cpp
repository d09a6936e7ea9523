#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sgalg/error.hpp"
#include "sgalg/shapley.hpp"

using namespace sgalg;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

StochasticGame load(const char* name) {
    return parse_game(slurp(std::string(SGALG_GAMES_DIR) + name));
}

StochasticGame one_state_constant(long c) {
    StochasticGame g;
    g.states = 1;
    MatrixGame R(1, 1);
    R.at(0, 0) = Rational(c);
    g.rewards = {R};
    g.transitions = {{{Rational(1)}}};
    return g;
}

}  // namespace

TEST_CASE("auxiliary game entries") {
    StochasticGame g = load("/switching_controller.game");
    Rational beta(1, 2);
    SUBCASE("unnormalized entry at zero continuation is the reward") {
        MatrixGame A = aux_game(g, 0, {Rational(0), Rational(0)}, beta, Mode::unnormalized);
        CHECK(A.at(0, 0) == Rational(-2));
    }
    SUBCASE("constant continuation folds in the discounted expectation") {
        MatrixGame A = aux_game(g, 0, {Rational(10), Rational(10)}, beta, Mode::unnormalized);
        CHECK(A.at(0, 0) == Rational(3));  // -2 + (1/2)(3/10*10 + 7/10*10)
    }
    SUBCASE("normalized mode at zero continuation scales rewards by 1-beta") {
        MatrixGame A = aux_game(g, 0, {Rational(0), Rational(0)}, Rational(1, 4), Mode::normalized);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(A.at(i, j) == Rational(3, 4) * g.rewards[0].at(i, j));
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(aux_game(g, 0, {Rational(0)}, beta, Mode::normalized), DomainError);
    }
}

TEST_CASE("one-state operator has the closed-form fixed point") {
    StochasticGame g = one_state_constant(5);
    Rational beta(2, 3);
    // T(u) = (1-b)c + b u; the fixed point is c
    std::vector<Rational> at_c = shapley_operator(g, {Rational(5)}, beta, Mode::normalized);
    CHECK(at_c[0] == Rational(5));
    std::vector<Rational> at_0 = shapley_operator(g, {Rational(0)}, beta, Mode::normalized);
    CHECK(at_0[0] == Rational(5, 3));  // (1/3) * 5
}

TEST_CASE("operator is a beta-contraction, exactly") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        StochasticGame g = testing::random_stochastic_game(rng, 2, 2);
        Rational beta(1 + static_cast<long>(rng() % 8), 10);
        std::vector<Rational> u, w;
        for (int s = 0; s < 2; ++s) {
            u.push_back(Rational(static_cast<long>(rng() % 17) - 8, 1 + rng() % 3));
            w.push_back(Rational(static_cast<long>(rng() % 17) - 8, 1 + rng() % 3));
        }
        std::vector<Rational> tu = shapley_operator(g, u, beta, Mode::normalized);
        std::vector<Rational> tw = shapley_operator(g, w, beta, Mode::normalized);
        Rational lhs(0), rhs(0);
        for (int s = 0; s < 2; ++s) {
            lhs = max(lhs, (tu[s] - tw[s]).abs());
            rhs = max(rhs, (u[s] - w[s]).abs());
        }
        CHECK(lhs <= beta * rhs);
    }
}

TEST_CASE("value iteration on the switching-controller game") {
    StochasticGame g = load("/switching_controller.game");
    Rational tol(1, 1000000000);
    ValueEstimate est = value_iteration(g, Rational(1, 2), Mode::normalized, tol);
    CHECK(est.error_bound <= tol);
    // the exact fixed point is (145/71, 45/71); the certificate must cover it
    CHECK((est.v[0] - Rational(145, 71)).abs() <= est.error_bound);
    CHECK((est.v[1] - Rational(45, 71)).abs() <= est.error_bound);
}

TEST_CASE("value iteration on the reward-diagonal game") {
    StochasticGame g = load("/reward_diagonal.game");
    Rational tol(1, 1000000000);
    ValueEstimate est = value_iteration(g, Rational(1, 2), Mode::normalized, tol);
    // 2.484721573 and 0.871384250 to the printed precision
    CHECK((est.v[0] - Rational::parse_decimal("2.484721573")).abs() <= Rational(1, 1000000));
    CHECK((est.v[1] - Rational::parse_decimal("0.871384250")).abs() <= Rational(1, 1000000));
}

TEST_CASE("trivial game converges to the reward") {
    StochasticGame g = one_state_constant(4);
    for (long num : {1L, 5L, 9L}) {
        ValueEstimate est =
            value_iteration(g, Rational(num, 10), Mode::normalized, Rational(1, 1000000000));
        CHECK((est.v[0] - Rational(4)).abs() <= est.error_bound);
    }
}

TEST_CASE("certificate invariants") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 10; ++trial) {
        StochasticGame g = testing::random_stochastic_game(rng, 2, 2);
        Rational beta(3, 5), tol(1, 100000);
        ValueEstimate est = value_iteration(g, beta, Mode::normalized, tol);
        CHECK(est.error_bound <= tol);
        // residual is measured at the returned point and is exact
        std::vector<Rational> image = shapley_operator(g, est.v, beta, Mode::normalized);
        Rational res(0);
        for (std::size_t s = 0; s < 2; ++s) res = max(res, (image[s] - est.v[s]).abs());
        CHECK(res == est.residual);
        // ||T(v) - v|| <= (1-beta)/beta * error_bound
        CHECK(est.residual <= (Rational(1) - beta) / beta * est.error_bound);
    }
}

TEST_CASE("modes are consistent") {
    StochasticGame g = load("/switching_controller.game");
    Rational beta(1, 2), tol(1, 10000000);
    ValueEstimate norm = value_iteration(g, beta, Mode::normalized, tol);
    ValueEstimate unnorm = value_iteration(g, beta, Mode::unnormalized, tol);
    for (std::size_t s = 0; s < 2; ++s) {
        Rational lhs = unnorm.v[s] * (Rational(1) - beta);
        Rational combined = unnorm.error_bound * (Rational(1) - beta) + norm.error_bound;
        CHECK((lhs - norm.v[s]).abs() <= combined);
    }
}

TEST_CASE("usage errors") {
    StochasticGame g = one_state_constant(1);
    CHECK_THROWS_AS(value_iteration(g, Rational(1, 2), Mode::normalized, Rational(0)), UsageError);
    CHECK_THROWS_AS(value_iteration(g, Rational(3, 2), Mode::normalized, Rational(1)), UsageError);
    IterationOptions opts;
    opts.max_iterations = 2;
    CHECK_THROWS_AS(
        value_iteration(g, Rational(9, 10), Mode::normalized, Rational(1, 1000000000000), opts),
        CapExceededError);
}

TEST_CASE("warm starts reach the same certificate") {
    StochasticGame g = load("/switching_controller.game");
    Rational beta(4, 5), tol(1, 100000000);
    ValueEstimate cold = value_iteration(g, beta, Mode::normalized, tol);
    IterationOptions opts;
    opts.start = std::vector<Rational>{Rational(3, 2), Rational(5, 4)};
    ValueEstimate warm = value_iteration(g, beta, Mode::normalized, tol, opts);
    CHECK(warm.iterations <= cold.iterations);
    CHECK((warm.v[0] - cold.v[0]).abs() <= warm.error_bound + cold.error_bound);
}
