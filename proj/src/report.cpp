#include "sgalg/report.hpp"

#include <json.hpp>
#include <sstream>

namespace sgalg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> poly_names(std::size_t nvars) { return default_var_names(nvars); }

std::string join_rationals(const std::vector<Rational>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].str();
    return os.str();
}

ordered_json rationals_json(const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

std::string interval_str(const IsolatingInterval& iv) {
    return "(" + iv.lo.str() + ", " + iv.hi.str() + ")";
}

void append_timing(std::ostringstream& os, const ReportOptions& opts) {
    if (opts.timings) os << "elapsed_ms: " << opts.elapsed_ms << "\n";
}

}  // namespace

std::string solve_report_text(const SolveReport& rpt, const ReportOptions& opts) {
    std::ostringstream os;
    auto names = poly_names(rpt.states.size() + 1);
    os << "solver: discounted\n";
    os << "beta: " << rpt.beta.str() << "\n";
    os << "mode: " << mode_name(rpt.mode) << "\n";
    os << "shift: " << rpt.shift.str() << "\n";
    os << "kernel: " << rpt.kappa.str() << "\n";
    if (opts.emit_system) {
        os << "system:\n";
        for (std::size_t s = 0; s < rpt.system.size(); ++s)
            os << "  f" << s + 1 << " = " << rpt.system[s].str(names) << "\n";
    }
    for (const auto& sc : rpt.states) {
        std::size_t s = sc.value.state;
        os << "state " << s << ":\n";
        os << "  g" << s << " = " << sc.g.integer_cleared().str(names) << "\n";
        if (opts.emit_groebner && sc.basis) {
            os << "  groebner:\n";
            for (const auto& b : sc.basis->gens) os << "    " << b.str(names) << "\n";
        }
        os << "  defining: " << sc.value.defining.str("z" + std::to_string(s)) << "\n";
        os << "  roots:";
        for (const auto& r : sc.all_roots) os << " " << r.point().decimal(opts.value_digits);
        os << "\n";
        os << "  interval: " << interval_str(sc.value.interval) << "\n";
        if (sc.value.exact)
            os << "  value: " << sc.value.exact->str() << " (exact)\n";
        else
            os << "  value: " << sc.value.decimal << "\n";
        os << "  strategy_I: " << join_rationals(sc.x) << "\n";
        os << "  strategy_II: " << join_rationals(sc.y) << "\n";
    }
    os << "residual: " << rpt.residual.decimal(opts.value_digits + 3) << "\n";
    os << "strategy_eps: " << rpt.opt_eps.decimal(opts.value_digits + 3) << "\n";
    os << "iteration_bound: " << rpt.vi_error_bound.decimal(opts.value_digits + 3) << "\n";
    os << "iterations: " << rpt.vi_iterations << "\n";
    for (const auto& n : rpt.notes) os << "note: " << n << "\n";
    append_timing(os, opts);
    return os.str();
}

std::string solve_report_json(const SolveReport& rpt, const ReportOptions& opts) {
    auto names = poly_names(rpt.states.size() + 1);
    ordered_json j;
    j["solver"] = "discounted";
    j["beta"] = rpt.beta.str();
    j["mode"] = mode_name(rpt.mode);
    j["shift"] = rpt.shift.str();
    j["kernel"] = rpt.kappa.str();
    if (opts.emit_system) {
        ordered_json sys = ordered_json::array();
        for (const auto& f : rpt.system) sys.push_back(f.str(names));
        j["system"] = sys;
    }
    ordered_json states = ordered_json::array();
    for (const auto& sc : rpt.states) {
        ordered_json js;
        js["state"] = sc.value.state;
        js["g"] = sc.g.integer_cleared().str(names);
        if (opts.emit_groebner && sc.basis) {
            ordered_json basis = ordered_json::array();
            for (const auto& b : sc.basis->gens) basis.push_back(b.str(names));
            js["groebner"] = basis;
        }
        js["defining"] = sc.value.defining.str("z" + std::to_string(sc.value.state));
        ordered_json roots = ordered_json::array();
        for (const auto& r : sc.all_roots) roots.push_back(r.point().decimal(opts.value_digits));
        js["roots"] = roots;
        js["interval"] = {sc.value.interval.lo.str(), sc.value.interval.hi.str()};
        if (sc.value.exact) js["value_exact"] = sc.value.exact->str();
        js["value"] = sc.value.decimal;
        js["strategy_I"] = rationals_json(sc.x);
        js["strategy_II"] = rationals_json(sc.y);
        states.push_back(js);
    }
    j["states"] = states;
    j["residual"] = rpt.residual.decimal(opts.value_digits + 3);
    j["strategy_eps"] = rpt.opt_eps.decimal(opts.value_digits + 3);
    j["iteration_bound"] = rpt.vi_error_bound.decimal(opts.value_digits + 3);
    j["iterations"] = rpt.vi_iterations;
    j["notes"] = rpt.notes;
    if (opts.timings) j["elapsed_ms"] = opts.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string iterate_report_text(const ValueEstimate& est, const Rational& beta,
                                const ReportOptions& opts) {
    std::ostringstream os;
    os << "solver: iterate\n";
    os << "beta: " << beta.str() << "\n";
    os << "mode: " << mode_name(est.mode) << "\n";
    for (std::size_t s = 0; s < est.v.size(); ++s)
        os << "v" << s + 1 << ": " << est.v[s].decimal(opts.value_digits) << "\n";
    os << "residual: " << est.residual.decimal(opts.value_digits + 3) << "\n";
    os << "error_bound: " << est.error_bound.decimal(opts.value_digits + 3) << "\n";
    os << "iterations: " << est.iterations << "\n";
    append_timing(os, opts);
    return os.str();
}

std::string iterate_report_json(const ValueEstimate& est, const Rational& beta,
                                const ReportOptions& opts) {
    ordered_json j;
    j["solver"] = "iterate";
    j["beta"] = beta.str();
    j["mode"] = mode_name(est.mode);
    ordered_json vals = ordered_json::array();
    for (const auto& v : est.v) vals.push_back(v.decimal(opts.value_digits));
    j["values"] = vals;
    j["residual"] = est.residual.decimal(opts.value_digits + 3);
    j["error_bound"] = est.error_bound.decimal(opts.value_digits + 3);
    j["iterations"] = est.iterations;
    if (opts.timings) j["elapsed_ms"] = opts.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string limit_report_text(const LimitReport& rpt, const ReportOptions& opts) {
    std::ostringstream os;
    auto names = poly_names(rpt.states.size() + 1);
    os << "solver: limit\n";
    os << "shift: " << rpt.shift.str() << "\n";
    os << "kernel: " << rpt.kappa.str() << "\n";
    os << "agreement_run: " << rpt.agreement_run << "\n";
    os << "kmax: " << rpt.kmax_used << "\n";
    os << "drift_envelope: " << rpt.drift_C.str() << " * (1-beta)^(1/" << rpt.drift_M << ")\n";
    for (const auto& lv : rpt.states) {
        os << "state " << lv.state << ":\n";
        os << "  g" << lv.state << " = " << lv.g.integer_cleared().str(names) << "\n";
        os << "  content_power: " << lv.content_l << "\n";
        os << "  limit_poly: " << lv.limit_poly.str("z" + std::to_string(lv.state)) << "\n";
        os << "  roots:";
        for (const auto& r : lv.all_roots) os << " " << r.point().decimal(opts.value_digits);
        os << "\n";
        os << "  interval: " << interval_str(lv.interval) << "\n";
        if (lv.exact)
            os << "  value: " << lv.exact->str() << " (exact)\n";
        else
            os << "  value: " << lv.decimal << "\n";
    }
    for (const auto& n : rpt.notes) os << "note: " << n << "\n";
    append_timing(os, opts);
    return os.str();
}

std::string limit_report_json(const LimitReport& rpt, const ReportOptions& opts) {
    auto names = poly_names(rpt.states.size() + 1);
    ordered_json j;
    j["solver"] = "limit";
    j["shift"] = rpt.shift.str();
    j["kernel"] = rpt.kappa.str();
    j["agreement_run"] = rpt.agreement_run;
    j["kmax"] = rpt.kmax_used;
    j["drift_C"] = rpt.drift_C.str();
    j["drift_M"] = rpt.drift_M;
    ordered_json states = ordered_json::array();
    for (const auto& lv : rpt.states) {
        ordered_json js;
        js["state"] = lv.state;
        js["g"] = lv.g.integer_cleared().str(names);
        js["content_power"] = lv.content_l;
        js["limit_poly"] = lv.limit_poly.str("z" + std::to_string(lv.state));
        ordered_json roots = ordered_json::array();
        for (const auto& r : lv.all_roots) roots.push_back(r.point().decimal(opts.value_digits));
        js["roots"] = roots;
        js["interval"] = {lv.interval.lo.str(), lv.interval.hi.str()};
        if (lv.exact) js["value_exact"] = lv.exact->str();
        js["value"] = lv.decimal;
        states.push_back(js);
    }
    j["states"] = states;
    j["notes"] = rpt.notes;
    if (opts.timings) j["elapsed_ms"] = opts.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string matrix_report_text(const MatrixGameSolution& sol, const ReportOptions& opts) {
    std::ostringstream os;
    os << "solver: matrix-value\n";
    os << "value: " << sol.value.str() << "\n";
    os << "strategy_I: " << join_rationals(sol.x) << "\n";
    os << "strategy_II: " << join_rationals(sol.y) << "\n";
    append_timing(os, opts);
    return os.str();
}

std::string matrix_report_json(const MatrixGameSolution& sol, const ReportOptions& opts) {
    ordered_json j;
    j["solver"] = "matrix-value";
    j["value"] = sol.value.str();
    j["strategy_I"] = rationals_json(sol.x);
    j["strategy_II"] = rationals_json(sol.y);
    if (opts.timings) j["elapsed_ms"] = opts.elapsed_ms;
    return j.dump(2) + "\n";
}

}  // namespace sgalg
