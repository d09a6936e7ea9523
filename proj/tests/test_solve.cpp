#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sgalg/error.hpp"
#include "sgalg/solve.hpp"

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

StochasticGame one_state_constant(const Rational& c) {
    StochasticGame g;
    g.states = 1;
    MatrixGame R(1, 1);
    R.at(0, 0) = c;
    g.rewards = {R};
    g.transitions = {{{Rational(1)}}};
    return g;
}

Rational prec9() { return Rational(BigInt(1), bigint_pow(BigInt(10), 9)); }

}  // namespace

TEST_CASE("switching-controller game at beta = 1/10 stays on the full-kernel branch") {
    StochasticGame g = load("/switching_controller.game");
    SolveReport rpt = solve_discounted(g, Rational(1, 10), Mode::normalized, prec9());
    CHECK(rpt.shift == Rational(0));
    REQUIRE(rpt.states.size() == 2);
    REQUIRE(rpt.states[0].value.exact.has_value());
    REQUIRE(rpt.states[1].value.exact.has_value());
    CHECK(*rpt.states[0].value.exact == Rational(1512, 605));
    CHECK(*rpt.states[1].value.exact == Rational(72, 605));
    CHECK(rpt.residual.is_zero());
    // exactly optimal stationary strategies
    CHECK(rpt.opt_eps.is_zero());
    CHECK(rpt.states[0].x == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    CHECK(rpt.states[0].y ==
          std::vector<Rational>{Rational(167, 605), Rational(67, 121), Rational(103, 605)});
}

TEST_CASE("switching-controller game at beta = 1/2 switches kernels") {
    StochasticGame g = load("/switching_controller.game");
    SolveReport rpt = solve_discounted(g, Rational(1, 2), Mode::normalized, prec9());
    REQUIRE(rpt.states.size() == 2);
    CHECK(rpt.kappa.per_state[0].rows == std::vector<std::size_t>{0, 2});
    CHECK(rpt.kappa.per_state[0].cols == std::vector<std::size_t>{0, 1});
    REQUIRE(rpt.states[0].value.exact.has_value());
    CHECK(*rpt.states[0].value.exact == Rational(145, 71));
    CHECK(*rpt.states[1].value.exact == Rational(45, 71));
    CHECK(rpt.residual.is_zero());
    CHECK(rpt.opt_eps.is_zero());
    CHECK(rpt.states[0].x ==
          std::vector<Rational>{Rational(1, 4), Rational(0), Rational(3, 4)});
    CHECK(rpt.states[0].y ==
          std::vector<Rational>{Rational(23, 142), Rational(119, 142), Rational(0)});
}

TEST_CASE("switching-controller game at beta = 9/10") {
    StochasticGame g = load("/switching_controller.game");
    SolveReport rpt = solve_discounted(g, Rational(9, 10), Mode::normalized, prec9());
    REQUIRE(rpt.states[0].value.exact.has_value());
    CHECK(*rpt.states[0].value.exact == Rational(505, 319));
    CHECK(*rpt.states[1].value.exact == Rational(405, 319));
    CHECK(rpt.residual.is_zero());
}

TEST_CASE("mode coherence: unnormalized = normalized / (1-beta) for rational values") {
    StochasticGame g = load("/switching_controller.game");
    SolveReport norm = solve_discounted(g, Rational(1, 2), Mode::normalized, prec9());
    SolveReport unnorm = solve_discounted(g, Rational(1, 2), Mode::unnormalized, prec9());
    for (std::size_t s = 0; s < 2; ++s) {
        REQUIRE(norm.states[s].value.exact.has_value());
        REQUIRE(unnorm.states[s].value.exact.has_value());
        CHECK(*unnorm.states[s].value.exact * Rational(1, 2) == *norm.states[s].value.exact);
    }
}

TEST_CASE("reward-diagonal game at beta = 1/2: quintic certificates") {
    StochasticGame g = load("/reward_diagonal.game");
    SolveReport rpt = solve_discounted(g, Rational(1, 2), Mode::unnormalized, prec9());
    CHECK(rpt.shift == Rational(0));
    REQUIRE(rpt.states.size() == 2);

    // three real roots per certificate, at the known locations
    Rational tol(1, 100000);
    std::vector<std::vector<Rational>> expect = {
        {Rational::parse_decimal("-1900.653702"), Rational::parse_decimal("4.969443147"),
         Rational::parse_decimal("71.41363761")},
        {Rational::parse_decimal("-643.7311436"), Rational::parse_decimal("1.742768501"),
         Rational::parse_decimal("28.64701004")}};
    for (std::size_t s = 0; s < 2; ++s) {
        REQUIRE(rpt.states[s].all_roots.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            IsolatingInterval r = refine(rpt.states[s].specialized, rpt.states[s].all_roots[i],
                                         Rational(1, 10000000));
            CHECK((r.mid() - expect[s][i]).abs() <= tol);
        }
    }
    // the middle root is the value in both states
    Rational v1 = rpt.states[0].value.interval.point();
    Rational v2 = rpt.states[1].value.interval.point();
    CHECK((v1 - Rational::parse_decimal("4.969443147")).abs() <= Rational(1, 1000000));
    CHECK((v2 - Rational::parse_decimal("1.742768501")).abs() <= Rational(1, 1000000));
    CHECK(rpt.residual <= Rational(10) * prec9());

    // certificate intervals enclose a zero of the defining polynomial
    for (std::size_t s = 0; s < 2; ++s) {
        const auto& iv = rpt.states[s].value.interval;
        auto [lo, hi] = rpt.states[s].value.defining.eval_interval(iv.lo, iv.hi);
        CHECK(lo.sign() <= 0);
        CHECK(hi.sign() >= 0);
    }
}

TEST_CASE("trivial game solves exactly for every beta, including a zero reward") {
    for (long c : {4L, 0L, -3L}) {
        StochasticGame g = one_state_constant(Rational(c));
        for (auto beta : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
            SolveReport rpt = solve_discounted(g, beta, Mode::normalized, prec9());
            REQUIRE(rpt.states[0].value.exact.has_value());
            CHECK(*rpt.states[0].value.exact == Rational(c));
            if (c <= 0) CHECK(rpt.shift > Rational(0));  // the shift path engages
        }
    }
}

TEST_CASE("unnormalized trivial game") {
    StochasticGame g = one_state_constant(Rational(2));
    SolveReport rpt = solve_discounted(g, Rational(3, 4), Mode::unnormalized, prec9());
    REQUIRE(rpt.states[0].value.exact.has_value());
    CHECK(*rpt.states[0].value.exact == Rational(8));  // 2 / (1 - 3/4)
}

TEST_CASE("usage errors") {
    StochasticGame g = one_state_constant(Rational(1));
    CHECK_THROWS_AS(solve_discounted(g, Rational(3, 2), Mode::normalized, prec9()), UsageError);
    CHECK_THROWS_AS(solve_discounted(g, Rational(1, 2), Mode::normalized, Rational(0)), UsageError);
}

TEST_CASE("pipeline soundness on random two-state games") {
    std::mt19937_64 rng(4242);
    int solved = 0;
    for (int trial = 0; trial < 8; ++trial) {
        StochasticGame g = testing::random_stochastic_game(rng, 2, 2);
        SolveReport rpt = solve_discounted(g, Rational(1, 2), Mode::normalized, prec9());
        CHECK(rpt.residual <= Rational(10) * prec9());
        for (const auto& sc : rpt.states) {
            const auto& iv = sc.value.interval;
            auto [lo, hi] = sc.value.defining.eval_interval(iv.lo, iv.hi);
            CHECK(lo.sign() <= 0);
            CHECK(hi.sign() >= 0);
        }
        ++solved;
    }
    CHECK(solved == 8);
}
