#pragma once

#include <string>

#include "sgalg/limit.hpp"
#include "sgalg/matrix_game.hpp"
#include "sgalg/shapley.hpp"
#include "sgalg/solve.hpp"

namespace sgalg {

// Rendering options shared by the text and JSON writers. Reports are
// byte-deterministic for fixed inputs and flags; timings are opt-in because
// they would break that.
struct ReportOptions {
    bool emit_system = false;
    bool emit_groebner = false;
    bool timings = false;
    double elapsed_ms = 0.0;
    unsigned value_digits = 9;
};

std::string solve_report_text(const SolveReport& rpt, const ReportOptions& opts);
std::string solve_report_json(const SolveReport& rpt, const ReportOptions& opts);

std::string iterate_report_text(const ValueEstimate& est, const Rational& beta,
                                const ReportOptions& opts);
std::string iterate_report_json(const ValueEstimate& est, const Rational& beta,
                                const ReportOptions& opts);

std::string limit_report_text(const LimitReport& rpt, const ReportOptions& opts);
std::string limit_report_json(const LimitReport& rpt, const ReportOptions& opts);

std::string matrix_report_text(const MatrixGameSolution& sol, const ReportOptions& opts);
std::string matrix_report_json(const MatrixGameSolution& sol, const ReportOptions& opts);

}  // namespace sgalg
