// Command-line front end: validate, solve, iterate, limit, matrix-value.
// Exit codes: 0 success, 1 usage, 2 parse/validate, 3 solver ambiguity,
// 4 internal cap exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgalg/error.hpp"
#include "sgalg/report.hpp"

namespace {

using namespace sgalg;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Rational parse_beta(const std::string& text) {
    Rational b;
    try {
        b = Rational::parse_decimal(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("bad --beta: ") + e.what());
    }
    if (b.sign() <= 0 || b >= Rational(1)) throw UsageError("beta must be in (0,1)");
    return b;
}

Rational parse_positive(const std::string& text, const std::string& flag) {
    Rational p;
    try {
        p = Rational::parse_decimal(text);
    } catch (const ParseError& e) {
        throw UsageError("bad " + flag + ": " + e.what());
    }
    if (p.sign() <= 0) throw UsageError(flag + " must be positive");
    return p;
}

unsigned digits_for(const Rational& precision) {
    unsigned d = 0;
    Rational p(1);
    while (p > precision && d < 64) {
        p /= Rational(10);
        ++d;
    }
    return d == 0 ? 1 : d;
}

// SG_ALG_THREADS caps internal parallelism (0 = auto). The solver pipeline
// is sequential on this build; the variable is validated and accepted.
unsigned thread_cap() {
    const char* env = std::getenv("SG_ALG_THREADS");
    if (!env) return 0;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) throw UsageError("SG_ALG_THREADS must be a non-negative integer");
    return static_cast<unsigned>(v);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for zero-sum stochastic games with algebraic certificates"};
    app.require_subcommand(1);

    std::string path, beta_text, mode_text = "normalized";
    std::string precision_text = "1e-9", tol_text = "1e-9";
    unsigned kmax = 6;
    bool emit_system = false, emit_groebner = false, json = false, timings = false;

    auto* validate = app.add_subcommand("validate", "parse a game file and check invariants");
    validate->add_option("path", path)->required();

    auto* solve = app.add_subcommand("solve", "discounted value with algebraic certificates");
    solve->add_option("path", path)->required();
    solve->add_option("--beta", beta_text, "discount factor in (0,1), e.g. 1/2")->required();
    solve->add_option("--mode", mode_text, "normalized|unnormalized");
    solve->add_option("--precision", precision_text, "output precision (default 1e-9)");
    solve->add_flag("--emit-system", emit_system, "print the coupled polynomial system");
    solve->add_flag("--emit-groebner", emit_groebner, "print the Groebner bases");
    solve->add_flag("--json", json);
    solve->add_flag("--timings", timings);

    auto* iterate = app.add_subcommand("iterate", "value iteration with certified bounds");
    iterate->add_option("path", path)->required();
    iterate->add_option("--beta", beta_text)->required();
    iterate->add_option("--tol", tol_text, "certified sup-norm tolerance (default 1e-9)");
    iterate->add_option("--mode", mode_text, "normalized|unnormalized");
    iterate->add_flag("--json", json);
    iterate->add_flag("--timings", timings);

    auto* limit = app.add_subcommand("limit", "limiting-average values");
    limit->add_option("path", path)->required();
    limit->add_option("--precision", precision_text);
    limit->add_option("--kmax", kmax, "largest schedule exponent (beta_k = 1 - 10^-k)");
    limit->add_flag("--json", json);
    limit->add_flag("--timings", timings);

    auto* matrix = app.add_subcommand("matrix-value", "exact matrix game value");
    matrix->add_option("path", path)->required();
    matrix->add_flag("--json", json);
    matrix->add_flag("--timings", timings);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    Timer timer;
    try {
        (void)thread_cap();
        ReportOptions ropts;
        ropts.emit_system = emit_system;
        ropts.emit_groebner = emit_groebner;
        ropts.timings = timings;

        if (validate->parsed()) {
            StochasticGame g = parse_game(read_file(path));
            std::cout << "ok: " << g.states << " states\n";
            return 0;
        }
        if (solve->parsed()) {
            StochasticGame g = parse_game(read_file(path));
            Rational beta = parse_beta(beta_text);
            Rational precision = parse_positive(precision_text, "--precision");
            Mode mode = parse_mode(mode_text);
            SolveOptions sopts;
            sopts.keep_bases = emit_groebner;
            SolveReport rpt = solve_discounted(g, beta, mode, precision, sopts);
            ropts.value_digits = digits_for(precision);
            ropts.elapsed_ms = timer.ms();
            std::cout << (json ? solve_report_json(rpt, ropts) : solve_report_text(rpt, ropts));
            return 0;
        }
        if (iterate->parsed()) {
            StochasticGame g = parse_game(read_file(path));
            Rational beta = parse_beta(beta_text);
            Rational tol = parse_positive(tol_text, "--tol");
            Mode mode = parse_mode(mode_text);
            ValueEstimate est = value_iteration(g, beta, mode, tol);
            ropts.value_digits = digits_for(tol) + 3;
            ropts.elapsed_ms = timer.ms();
            std::cout << (json ? iterate_report_json(est, beta, ropts)
                               : iterate_report_text(est, beta, ropts));
            return 0;
        }
        if (limit->parsed()) {
            StochasticGame g = parse_game(read_file(path));
            Rational precision = parse_positive(precision_text, "--precision");
            BetaSchedule schedule;
            if (kmax < 2) throw UsageError("--kmax must be at least 2");
            schedule.kmax = kmax;
            LimitReport rpt = solve_limit(g, precision, schedule);
            ropts.value_digits = digits_for(precision);
            ropts.elapsed_ms = timer.ms();
            std::cout << (json ? limit_report_json(rpt, ropts) : limit_report_text(rpt, ropts));
            return 0;
        }
        if (matrix->parsed()) {
            MatrixGame A = MatrixGame::parse(read_file(path));
            MatrixGameSolution sol = solve_matrix_game(A);
            ropts.elapsed_ms = timer.ms();
            std::cout << (json ? matrix_report_json(sol, ropts) : matrix_report_text(sol, ropts));
            return 0;
        }
        return static_cast<int>(ExitCode::usage);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::cap_exceeded);
    }
}
