#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgalg/game.hpp"
#include "sgalg/groebner.hpp"
#include "sgalg/polysys.hpp"
#include "sgalg/roots.hpp"
#include "sgalg/shapley.hpp"

namespace sgalg {

// Certified value of one state: defining polynomial (square-free, integer
// coefficients), isolating interval, decimal approximation. The exact field
// is set when the value is rational (degree-one certificates).
struct AlgebraicValue {
    std::size_t state = 0;  // 1-based
    UniPoly defining;       // certifies the *shifted* value when shift != 0
    IsolatingInterval interval;  // unshifted coordinates
    std::optional<Rational> exact;
    std::string decimal;
    Mode mode = Mode::normalized;
};

struct StateCertificate {
    MultiPoly g;                     // bivariate in z0, z_s (shifted coordinates)
    UniPoly specialized;             // g(beta, .), square-free, integer-cleared
    std::vector<IsolatingInterval> all_roots;  // of `specialized`, shifted coordinates
    AlgebraicValue value;
    std::vector<Rational> x, y;      // optimal stationary strategies in this state
    std::optional<GroebnerBasis> basis;  // populated when requested
};

struct SolveReport {
    Rational beta;
    Mode mode = Mode::normalized;
    Rational shift;                     // reward shift applied internally (0 when not needed)
    KernelSelection kappa;
    std::vector<MultiPoly> system;      // coupled polynomials f_1..f_N
    std::vector<StateCertificate> states;
    Rational residual;                  // ||T(v) - v||_inf at the reported values
    Rational opt_eps;                   // worst optimality violation of the strategies
    Rational vi_error_bound;
    unsigned long vi_iterations = 0;
    std::vector<std::string> notes;
};

struct SolveOptions {
    bool keep_bases = false;            // retain Groebner bases in the report
    std::size_t max_kernel_candidates = 20000;
    unsigned long max_iterations = 2'000'000;
};

// Full discounted pipeline: value iteration, kernel inference, coupled
// system, per-state elimination, root isolation and selection, verification.
// Falls back to exhaustive kernel enumeration when the inferred selection
// fails, and escalates the iteration tolerance on ambiguous root selection.
SolveReport solve_discounted(const StochasticGame& g, const Rational& beta, Mode mode,
                             const Rational& precision, const SolveOptions& opts = {});

}  // namespace sgalg
