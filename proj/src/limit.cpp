#include "sgalg/limit.hpp"

#include <algorithm>

#include "sgalg/error.hpp"

namespace sgalg {

Rational BetaSchedule::beta(unsigned k) const {
    return Rational(1) - pow10_inv(k);
}

Rational DriftEnvelope::allowance(unsigned k) const {
    // upper bound on C * 10^(-k/M): split k = qM + r and lower-bound 10^(r/M)
    // by an integer M-th root at fixed scale
    unsigned q = k / M, r = k % M;
    Rational out = C * pow10_inv(q);
    if (r == 0) return out;
    const BigInt scale(1000);
    BigInt radicand = bigint_pow(BigInt(10), r) * bigint_pow(scale, M);
    BigInt root;
    mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), M);
    // root/scale <= 10^(r/M), so dividing by it is an upper bound
    return out * Rational(scale, root);
}

namespace {

Rational schedule_tol(const DriftEnvelope& drift, unsigned k) {
    return min(Rational(1, 10000), drift.allowance(k) / Rational(10));
}

// Estimates for k = kmin..kmax, warm-starting each point from the previous
// one. Extends an existing chain in place when the schedule grows.
void extend_estimates(const StochasticGame& g, const BetaSchedule& schedule,
                      const DriftEnvelope& drift, const IterationOptions& base_opts,
                      std::vector<ValueEstimate>& ests) {
    IterationOptions opts = base_opts;
    for (unsigned k = schedule.kmin + ests.size(); k <= schedule.kmax; ++k) {
        if (!ests.empty()) opts.start = ests.back().v;
        ests.push_back(value_iteration(g, schedule.beta(k), Mode::normalized,
                                       schedule_tol(drift, k), opts));
    }
}

KernelSelection stable_kernel_from(const StochasticGame& g, const BetaSchedule& schedule,
                                   const std::vector<ValueEstimate>& ests, unsigned& run_out) {
    std::vector<KernelSelection> kappas;
    for (unsigned k = schedule.kmin; k <= schedule.kmax; ++k)
        kappas.push_back(infer_kernel(g, schedule.beta(k), ests[k - schedule.kmin]));
    const KernelSelection& top = kappas.back();
    unsigned run = 1;
    for (std::size_t i = kappas.size() - 1; i-- > 0 && kappas[i] == top;) ++run;
    if (run < 2)
        throw CapExceededError("kernel did not stabilize on schedule (k_max = " +
                               std::to_string(schedule.kmax) + "); extend the schedule");
    run_out = run;
    return top;
}

}  // namespace

StableKernelResult stable_kernel(const StochasticGame& g, const BetaSchedule& schedule,
                                 const IterationOptions& iter_opts) {
    if (schedule.kmin < 1 || schedule.kmax < schedule.kmin + 1)
        throw UsageError("schedule must contain at least two points");
    DriftEnvelope drift;
    StableKernelResult out;
    extend_estimates(g, schedule, drift, iter_opts, out.estimates);
    out.kappa = stable_kernel_from(g, schedule, out.estimates, out.agreement_run);
    return out;
}

std::pair<unsigned, UniPoly> limit_polynomial(const MultiPoly& g_s, std::size_t state_var) {
    if (g_s.is_zero()) throw DomainError("limit polynomial of zero certificate");
    std::size_t nvars = g_s.nvars();
    MultiPoly one_minus_z0 =
        MultiPoly::constant(Rational(1), nvars) - MultiPoly::variable(0, nvars);
    auto [l, reduced] = content_power(g_s, one_minus_z0);
    MultiPoly at_one = reduced.substitute(0, Rational(1));
    if (at_one.is_zero())
        throw DomainError("reduced certificate still vanishes at beta = 1");
    return {l, to_univariate(at_one, state_var)};
}

namespace {

struct LimitAttempt {
    LimitReport report;
    bool ok = false;
    std::string failure;
};

LimitAttempt try_solve(const StochasticGame& game, const Rational& shift_c,
                       const Rational& precision, const BetaSchedule& schedule,
                       const LimitOptions& opts, const std::vector<ValueEstimate>& ests) {
    LimitAttempt out;
    unsigned run = 0;
    KernelSelection kappa = stable_kernel_from(game, schedule, ests, run);

    LimitReport& rpt = out.report;
    rpt.shift = shift_c;
    rpt.kappa = kappa;
    rpt.agreement_run = run;
    rpt.kmax_used = schedule.kmax;
    rpt.drift_C = opts.drift.C;
    rpt.drift_M = opts.drift.M;

    const ValueEstimate& top = ests.back();
    Rational window = top.error_bound + opts.drift.allowance(schedule.kmax);
    unsigned digits = 0;
    {
        Rational p(1);
        while (p > precision && digits < 64) {
            p /= Rational(10);
            ++digits;
        }
    }

    try {
        CoupledSystem sys = build_system(game, kappa, Mode::normalized);
        for (std::size_t s = 1; s <= game.states; ++s) {
            TermOrder order = TermOrder::elimination_for_state(game.states + 1, s);
            GroebnerBasis basis = buchberger(sys.f, order);
            if (basis.trivial) throw DomainError("inconsistent system for kernel " + kappa.str());
            BivariateCertificate cert = extract_bivariate(basis, s);
            auto [l, lim] = limit_polynomial(cert.g, s);
            if (lim.degree() < 1)
                throw DomainError("limit certificate for state " + std::to_string(s) +
                                  " degenerates to a constant");

            RootIsolation iso = isolate_real_roots(lim);
            if (iso.roots.empty())
                throw DomainError("limit certificate for state " + std::to_string(s) +
                                  " has no real roots");
            std::size_t pick = select_value_root(iso.squarefree, iso.roots, top.v[s - 1], window);
            IsolatingInterval sel = refine(iso.squarefree, iso.roots[pick], precision / Rational(4));

            // consistency with the whole discounted schedule, within the
            // certified bound plus the drift allowance at each point
            Rational point = sel.point();
            for (unsigned k = schedule.kmin; k <= schedule.kmax; ++k) {
                const ValueEstimate& est = ests[k - schedule.kmin];
                Rational allow = est.error_bound + opts.drift.allowance(k);
                Rational gap = (point - est.v[s - 1]).abs();
                if (gap > allow)
                    throw DomainError("limit value for state " + std::to_string(s) +
                                      " drifts from the discounted estimate at k = " +
                                      std::to_string(k) + " (gap " + gap.str() + " > " +
                                      allow.str() + ")");
            }

            LimitValue lv;
            lv.state = s;
            lv.g = cert.g;
            lv.content_l = l;
            lv.limit_poly = iso.squarefree;
            lv.all_roots = iso.roots;
            lv.all_roots[pick] = sel;
            lv.interval = sel;
            lv.interval.lo = lv.interval.lo - shift_c;
            lv.interval.hi = lv.interval.hi - shift_c;
            if (lv.interval.exact) lv.interval.exact = *lv.interval.exact - shift_c;
            lv.exact = lv.interval.exact;
            lv.decimal = lv.interval.point().decimal(digits);
            rpt.states.push_back(std::move(lv));
        }
        out.ok = true;
    } catch (const AmbiguityError& e) {
        out.failure = e.what();
    } catch (const DomainError& e) {
        out.failure = e.what();
    }
    return out;
}

}  // namespace

LimitReport solve_limit(const StochasticGame& g, const Rational& precision,
                        const BetaSchedule& schedule, const LimitOptions& opts) {
    if (precision.sign() <= 0) throw UsageError("precision must be positive");
    if (schedule.kmin < 1 || schedule.kmax < schedule.kmin + 1)
        throw UsageError("schedule must contain at least two points");
    g.validate();

    IterationOptions iter_opts;
    iter_opts.max_iterations = opts.max_iterations;

    // the machinery needs nonzero discounted values along the schedule;
    // certify the unshifted game first, otherwise shift
    std::vector<ValueEstimate> ests;
    extend_estimates(g, schedule, opts.drift, iter_opts, ests);
    bool need_shift = false;
    for (const auto& est : ests)
        for (const auto& v : est.v)
            if (v.abs() <= Rational(2) * est.error_bound) need_shift = true;

    StochasticGame shifted;
    const StochasticGame* game = &g;
    Rational c(0);
    if (need_shift) {
        auto [sg, rec] = shift_rewards(g);
        shifted = std::move(sg);
        game = &shifted;
        c = rec.c;
        ests.clear();
        extend_estimates(*game, schedule, opts.drift, iter_opts, ests);
    }

    BetaSchedule sched = schedule;
    std::string last_failure;
    for (unsigned ext = 0; ext <= opts.max_schedule_extensions; ++ext) {
        LimitAttempt attempt = try_solve(*game, c, precision, sched, opts, ests);
        if (attempt.ok) return attempt.report;
        last_failure = attempt.failure;
        ++sched.kmax;  // extend the schedule and retry
        extend_estimates(*game, sched, opts.drift, iter_opts, ests);
    }
    throw AmbiguityError("limit root selection failed after extending the schedule to k_max = " +
                         std::to_string(sched.kmax - 1) + ": " + last_failure);
}

}  // namespace sgalg
