#include "sgalg/polysys.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sgalg/error.hpp"
#include "sgalg/linalg.hpp"
#include "sgalg/matrix_game.hpp"

namespace sgalg {

std::size_t KernelSelection::total_size() const {
    std::size_t t = 0;
    for (const auto& s : per_state) t += s.rows.size();
    return t;
}

void KernelSelection::validate(const StochasticGame& g) const {
    if (per_state.size() != g.states) throw DomainError("kernel selection has wrong state count");
    for (std::size_t s = 0; s < g.states; ++s) {
        const auto& sel = per_state[s];
        if (sel.rows.empty() || sel.rows.size() != sel.cols.size())
            throw DomainError("kernel selection for state " + std::to_string(s + 1) +
                              " must have equal nonempty row and column sets");
        for (auto r : sel.rows)
            if (r >= g.action_rows(s)) throw DomainError("kernel row index out of range");
        for (auto c : sel.cols)
            if (c >= g.action_cols(s)) throw DomainError("kernel column index out of range");
    }
}

std::string KernelSelection::str() const {
    std::ostringstream os;
    for (std::size_t s = 0; s < per_state.size(); ++s) {
        if (s) os << "; ";
        os << "state " << s + 1 << ": rows {";
        for (std::size_t i = 0; i < per_state[s].rows.size(); ++i)
            os << (i ? "," : "") << per_state[s].rows[i] + 1;
        os << "} cols {";
        for (std::size_t j = 0; j < per_state[s].cols.size(); ++j)
            os << (j ? "," : "") << per_state[s].cols[j] + 1;
        os << "}";
    }
    return os.str();
}

bool operator==(const KernelSelection& a, const KernelSelection& b) {
    if (a.per_state.size() != b.per_state.size()) return false;
    for (std::size_t s = 0; s < a.per_state.size(); ++s)
        if (a.per_state[s].rows != b.per_state[s].rows || a.per_state[s].cols != b.per_state[s].cols)
            return false;
    return true;
}

bool operator<(const KernelSelection& a, const KernelSelection& b) {
    for (std::size_t s = 0; s < std::min(a.per_state.size(), b.per_state.size()); ++s) {
        if (a.per_state[s].rows != b.per_state[s].rows) return a.per_state[s].rows < b.per_state[s].rows;
        if (a.per_state[s].cols != b.per_state[s].cols) return a.per_state[s].cols < b.per_state[s].cols;
    }
    return a.per_state.size() < b.per_state.size();
}

std::vector<std::vector<MultiPoly>> symbolic_kernel_matrix(const StochasticGame& g, std::size_t s,
                                                           const KernelSelection& kappa, Mode mode) {
    kappa.validate(g);
    const auto& sel = kappa.per_state.at(s);
    std::size_t nvars = g.states + 1;
    std::size_t k = sel.rows.size();
    MultiPoly z0 = MultiPoly::variable(0, nvars);
    MultiPoly one = MultiPoly::constant(Rational(1), nvars);

    std::vector<std::vector<MultiPoly>> M(k, std::vector<MultiPoly>(k, MultiPoly(nvars)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t a = sel.rows[i], b = sel.cols[j];
            MultiPoly cont(nvars);
            const auto& row = g.transition(s, a, b);
            for (std::size_t t = 0; t < g.states; ++t)
                if (!row[t].is_zero())
                    cont += MultiPoly::variable(t + 1, nvars).scaled(row[t]);
            MultiPoly reward = MultiPoly::constant(g.rewards[s].at(a, b), nvars);
            if (mode == Mode::normalized) reward = (one - z0) * reward;
            M[i][j] = reward + z0 * cont;
        }
    }
    return M;
}

CoupledSystem build_system(const StochasticGame& g, const KernelSelection& kappa, Mode mode) {
    kappa.validate(g);
    std::size_t nvars = g.states + 1;
    CoupledSystem sys{std::vector<MultiPoly>(), kappa, mode};
    for (std::size_t s = 0; s < g.states; ++s) {
        auto M = symbolic_kernel_matrix(g, s, kappa, mode);
        auto dc = det_cofactors(M);
        MultiPoly zs = MultiPoly::variable(s + 1, nvars);
        sys.f.push_back(zs * dc.cof_sum - dc.det);
    }
    return sys;
}

KernelSelection infer_kernel(const StochasticGame& g, const Rational& beta,
                             const ValueEstimate& estimate) {
    if (estimate.v.size() != g.states) throw DomainError("estimate dimension mismatch");
    KernelSelection kappa;
    for (std::size_t s = 0; s < g.states; ++s) {
        MatrixGame A = aux_game(g, s, estimate.v, beta, estimate.mode);
        Kernel k = find_cmv_kernel(A);
        kappa.per_state.push_back({k.row_set, k.col_set});
    }
    return kappa;
}

namespace {

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// All (rows, cols) pairs of one state with the given kernel size, in
// lexicographic order.
std::vector<KernelSelection::StateSelection> state_selections(const StochasticGame& g, std::size_t s,
                                                              std::size_t size) {
    std::vector<KernelSelection::StateSelection> out;
    if (size > g.action_rows(s) || size > g.action_cols(s)) return out;
    std::vector<std::size_t> rs(size);
    for (std::size_t i = 0; i < size; ++i) rs[i] = i;
    do {
        std::vector<std::size_t> cs(size);
        for (std::size_t j = 0; j < size; ++j) cs[j] = j;
        do {
            out.push_back({rs, cs});
        } while (next_combination(cs, g.action_cols(s)));
    } while (next_combination(rs, g.action_rows(s)));
    return out;
}

}  // namespace

bool enumerate_kernels(const StochasticGame& g,
                       const std::function<bool(const KernelSelection&)>& fn,
                       std::size_t max_candidates) {
    // selections per state, grouped by kernel size
    std::vector<std::vector<std::vector<KernelSelection::StateSelection>>> by_size(g.states);
    std::size_t max_total = 0;
    for (std::size_t s = 0; s < g.states; ++s) {
        std::size_t cap = std::min(g.action_rows(s), g.action_cols(s));
        by_size[s].resize(cap + 1);
        for (std::size_t k = 1; k <= cap; ++k) by_size[s][k] = state_selections(g, s, k);
        max_total += cap;
    }

    std::size_t tried = 0;
    for (std::size_t total = g.states; total <= max_total; ++total) {
        // enumerate all splits of `total` over states (each >= 1) and the
        // per-state selections under each split, lexicographically
        std::vector<std::size_t> split(g.states, 1);
        std::function<bool(std::size_t, std::size_t)> walk_sizes = [&](std::size_t s, std::size_t rest) -> bool {
            if (s == g.states) {
                if (rest != 0) return false;
                // cartesian product of per-state selections under this split
                std::vector<std::size_t> idx(g.states, 0);
                for (;;) {
                    KernelSelection kappa;
                    for (std::size_t t = 0; t < g.states; ++t)
                        kappa.per_state.push_back(by_size[t][split[t]][idx[t]]);
                    if (++tried > max_candidates)
                        throw CapExceededError("kernel enumeration exceeded " +
                                               std::to_string(max_candidates) + " candidates");
                    if (fn(kappa)) return true;
                    std::size_t t = g.states;
                    while (t-- > 0) {
                        if (++idx[t] < by_size[t][split[t]].size()) break;
                        idx[t] = 0;
                        if (t == 0) return false;
                    }
                }
            }
            std::size_t cap = by_size[s].size() - 1;
            std::size_t remaining = g.states - s - 1;
            for (std::size_t k = 1; k <= cap && k + remaining <= rest; ++k) {
                if (by_size[s][k].empty()) continue;
                split[s] = k;
                if (walk_sizes(s + 1, rest - k)) return true;
            }
            return false;
        };
        if (walk_sizes(0, total)) return true;
    }
    return false;
}

}  // namespace sgalg
