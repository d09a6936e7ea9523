#include "sgalg/solve.hpp"

#include <set>

#include "sgalg/error.hpp"
#include "sgalg/matrix_game.hpp"

namespace sgalg {

namespace {

// p(x + t) by repeated synthetic division (Taylor shift).
UniPoly shift_argument(const UniPoly& p, const Rational& t) {
    if (t.is_zero() || p.is_zero()) return p;
    std::vector<Rational> c = p.coeffs();
    std::size_t n = c.size();
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        // remainder of repeated division by (x - (-t))… computed as Horner at -(-t)
        Rational rem = c[n - 1];
        for (std::size_t i = n - 1; i-- > k;) {
            rem = rem * t + c[i];
            c[i] = rem;
        }
        out[k] = c[k];
        if (k + 1 < n) c[k] = Rational(0);
    }
    return UniPoly(std::move(out));
}

unsigned decimal_digits(const Rational& precision) {
    unsigned d = 0;
    Rational p(1);
    while (p > precision && d < 64) {
        p /= Rational(10);
        ++d;
    }
    return d;
}

struct PipelineContext {
    const StochasticGame* game = nullptr;  // shifted
    Rational beta;
    Mode mode = Mode::normalized;
    Rational precision;
    Rational shift_c;
    ValueEstimate est;
    const SolveOptions* opts = nullptr;
};

// One attempt with a fixed kernel selection. Throws DomainError when the
// selection cannot certify the estimate, AmbiguityError when root selection
// is ambiguous at this estimate quality.
SolveReport run_pipeline(const PipelineContext& ctx, const KernelSelection& kappa) {
    const StochasticGame& g = *ctx.game;
    SolveReport rpt;
    rpt.beta = ctx.beta;
    rpt.mode = ctx.mode;
    rpt.shift = ctx.shift_c;
    rpt.kappa = kappa;
    rpt.vi_error_bound = ctx.est.error_bound;
    rpt.vi_iterations = ctx.est.iterations;

    CoupledSystem sys = build_system(g, kappa, ctx.mode);
    rpt.system = sys.f;

    Rational window = ctx.est.error_bound;
    unsigned digits = decimal_digits(ctx.precision);

    std::vector<Rational> refined(g.states);
    for (std::size_t s = 1; s <= g.states; ++s) {
        TermOrder order = TermOrder::elimination_for_state(g.states + 1, s);
        GroebnerBasis basis = buchberger(sys.f, order);
        if (basis.trivial) throw DomainError("inconsistent system for kernel " + kappa.str());
        BivariateCertificate cert = extract_bivariate(basis, s);

        MultiPoly at_beta = cert.g.substitute(0, ctx.beta);
        if (at_beta.is_zero())
            throw DomainError("certificate for state " + std::to_string(s) + " vanishes at beta");
        UniPoly uni = to_univariate(at_beta, s);
        if (uni.degree() < 1)
            throw DomainError("certificate for state " + std::to_string(s) +
                              " degenerates to a constant at beta");
        unsigned gdeg = cert.g.degree_in(s);
        if (static_cast<unsigned>(uni.degree()) < gdeg)
            rpt.notes.push_back("state " + std::to_string(s) + ": certificate degree drops from " +
                                std::to_string(gdeg) + " to " + std::to_string(uni.degree()) +
                                " at beta = " + ctx.beta.str());

        RootIsolation iso = isolate_real_roots(uni);
        if (iso.roots.empty())
            throw DomainError("certificate for state " + std::to_string(s) + " has no real roots");
        std::size_t pick = select_value_root(iso.squarefree, iso.roots, ctx.est.v[s - 1], window);
        IsolatingInterval sel = refine(iso.squarefree, iso.roots[pick], ctx.precision / Rational(4));
        refined[s - 1] = sel.point();

        StateCertificate sc;
        sc.g = cert.g;
        sc.specialized = iso.squarefree;
        sc.all_roots = iso.roots;
        sc.all_roots[pick] = sel;
        sc.value.state = s;
        sc.value.mode = ctx.mode;
        sc.value.interval = sel;
        sc.value.exact = sel.exact;
        if (ctx.opts->keep_bases) sc.basis = basis;
        rpt.states.push_back(std::move(sc));
    }

    // fixed-point verification at the refined values
    std::vector<Rational> image = shapley_operator(g, refined, ctx.beta, ctx.mode);
    Rational residual(0);
    for (std::size_t s = 0; s < g.states; ++s) residual = max(residual, (image[s] - refined[s]).abs());
    if (residual > Rational(10) * ctx.precision)
        throw DomainError("fixed-point residual " + residual.str() + " exceeds gate for kernel " +
                          kappa.str());
    rpt.residual = residual;

    // optimal stationary strategies from the kernels at the refined values
    rpt.opt_eps = Rational(0);
    for (std::size_t s = 0; s < g.states; ++s) {
        MatrixGame A = aux_game(g, s, refined, ctx.beta, ctx.mode);
        const auto& sel = kappa.per_state[s];
        MatrixGame sub = A.submatrix(sel.rows, sel.cols);
        auto [xk, yk] = kernel_strategies(sub);
        auto& sc = rpt.states[s];
        sc.x.assign(A.rows, Rational(0));
        sc.y.assign(A.cols, Rational(0));
        for (std::size_t i = 0; i < sel.rows.size(); ++i) sc.x[sel.rows[i]] = xk[i];
        for (std::size_t j = 0; j < sel.cols.size(); ++j) sc.y[sel.cols[j]] = yk[j];
        validate_distribution(sc.x);
        validate_distribution(sc.y);
        // epsilon-optimality of the extended strategies in the stage game
        for (std::size_t j = 0; j < A.cols; ++j) {
            Rational payoff(0);
            for (std::size_t i = 0; i < A.rows; ++i) payoff += sc.x[i] * A.at(i, j);
            rpt.opt_eps = max(rpt.opt_eps, refined[s] - payoff);
        }
        for (std::size_t i = 0; i < A.rows; ++i) {
            Rational payoff(0);
            for (std::size_t j = 0; j < A.cols; ++j) payoff += A.at(i, j) * sc.y[j];
            rpt.opt_eps = max(rpt.opt_eps, payoff - refined[s]);
        }
    }

    // undo the reward shift on the reported values; the bivariate
    // certificates stay in shifted coordinates (the shift is in the report)
    Rational c_eff = ctx.shift_c;
    if (ctx.mode == Mode::unnormalized) c_eff = ctx.shift_c / (Rational(1) - ctx.beta);
    for (std::size_t s = 0; s < g.states; ++s) {
        auto& av = rpt.states[s].value;
        if (!c_eff.is_zero()) {
            av.defining = shift_argument(rpt.states[s].specialized, c_eff);
            av.interval.lo = av.interval.lo - c_eff;
            av.interval.hi = av.interval.hi - c_eff;
            if (av.interval.exact) av.interval.exact = *av.interval.exact - c_eff;
            av.exact = av.interval.exact;
        } else {
            av.defining = rpt.states[s].specialized;
        }
        av.decimal = av.interval.point().decimal(digits);
    }
    return rpt;
}

}  // namespace

SolveReport solve_discounted(const StochasticGame& g, const Rational& beta, Mode mode,
                             const Rational& precision, const SolveOptions& opts) {
    if (beta.sign() <= 0 || beta >= Rational(1)) throw UsageError("beta must be in (0,1)");
    if (precision.sign() <= 0) throw UsageError("precision must be positive");
    g.validate();

    Rational tol = min(precision, Rational(BigInt(1), bigint_pow(BigInt(10), 9)));
    const int max_tol_escalations = 3;

    for (int escalation = 0;; ++escalation) {
        PipelineContext ctx;
        ctx.beta = beta;
        ctx.mode = mode;
        ctx.precision = precision;
        ctx.opts = &opts;

        IterationOptions iter_opts;
        iter_opts.max_iterations = opts.max_iterations;

        // values certifiably nonzero without shifting: keep the original
        // game so the certificates match its own polynomial system
        ValueEstimate plain = value_iteration(g, beta, mode, tol, iter_opts);
        bool nonzero = true;
        for (const auto& v : plain.v)
            if (v.abs() <= Rational(2) * plain.error_bound) nonzero = false;

        StochasticGame shifted;
        if (nonzero) {
            ctx.game = &g;
            ctx.shift_c = Rational(0);
            ctx.est = std::move(plain);
        } else {
            auto [sg, rec] = shift_rewards(g);
            shifted = std::move(sg);
            ctx.game = &shifted;
            ctx.shift_c = rec.c;
            ctx.est = value_iteration(shifted, beta, mode, tol, iter_opts);
        }

        try {
            std::set<std::string> tried;
            std::optional<SolveReport> result;
            std::string first_failure;
            auto attempt = [&](const KernelSelection& kappa) -> bool {
                if (!tried.insert(kappa.str()).second) return false;
                try {
                    result = run_pipeline(ctx, kappa);
                    return true;
                } catch (const AmbiguityError&) {
                    throw;
                } catch (const DomainError& e) {
                    if (first_failure.empty()) first_failure = e.what();
                    return false;
                }
            };

            KernelSelection inferred = infer_kernel(*ctx.game, beta, ctx.est);
            if (!attempt(inferred)) {
                if (!enumerate_kernels(*ctx.game, attempt, opts.max_kernel_candidates))
                    throw DomainError("no kernel selection yields a verified certificate; first failure: " +
                                      first_failure);
            }
            return std::move(*result);
        } catch (const AmbiguityError&) {
            if (escalation + 1 >= max_tol_escalations) throw;
            tol = tol * Rational(BigInt(1), bigint_pow(BigInt(10), 6));
        }
    }
}

}  // namespace sgalg
