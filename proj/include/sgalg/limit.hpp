#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgalg/game.hpp"
#include "sgalg/groebner.hpp"
#include "sgalg/polysys.hpp"
#include "sgalg/roots.hpp"
#include "sgalg/shapley.hpp"
#include "sgalg/unipoly.hpp"

namespace sgalg {

// Discount factors beta_k = 1 - 10^-k approaching 1.
struct BetaSchedule {
    unsigned kmin = 1;
    unsigned kmax = 6;
    Rational beta(unsigned k) const;
};

// Drift envelope C * (1 - beta)^(1/M) used as the root-selection allowance
// near beta = 1. The evaluation is a rational upper bound of the real power.
struct DriftEnvelope {
    Rational C = Rational(10);
    unsigned M = 4;
    Rational allowance(unsigned k) const;
};

// Kernel selection that repeats along the tail of the schedule. Requires
// agreement on at least two consecutive largest beta_k.
struct StableKernelResult {
    KernelSelection kappa;
    unsigned agreement_run = 0;               // consecutive top-of-schedule agreements
    std::vector<ValueEstimate> estimates;     // one per schedule point
};

StableKernelResult stable_kernel(const StochasticGame& g, const BetaSchedule& schedule,
                                 const IterationOptions& iter_opts = {});

// Factor out (1 - z0)^l and evaluate at z0 = 1. g_s must be bivariate in
// {z0, z_s} and built in normalized mode.
std::pair<unsigned, UniPoly> limit_polynomial(const MultiPoly& g_s, std::size_t state_var);

struct LimitValue {
    std::size_t state = 0;  // 1-based
    MultiPoly g;            // bivariate certificate (shifted coordinates when shift != 0)
    unsigned content_l = 0;
    UniPoly limit_poly;     // square-free, integer-cleared
    std::vector<IsolatingInterval> all_roots;
    IsolatingInterval interval;  // unshifted
    std::optional<Rational> exact;
    std::string decimal;
};

struct LimitReport {
    Rational shift;
    KernelSelection kappa;
    unsigned agreement_run = 0;
    unsigned kmax_used = 0;
    Rational drift_C;
    unsigned drift_M = 0;
    std::vector<LimitValue> states;
    std::vector<std::string> notes;
};

struct LimitOptions {
    DriftEnvelope drift;
    unsigned max_schedule_extensions = 2;
    unsigned long max_iterations = 2'000'000;
};

// Limiting-average values: stabilize the kernel along the schedule, build
// the normalized system, factor (1-z0)^l, evaluate at z0 = 1, select the
// root consistent with the discounted estimates.
LimitReport solve_limit(const StochasticGame& g, const Rational& precision,
                        const BetaSchedule& schedule = {}, const LimitOptions& opts = {});

}  // namespace sgalg
