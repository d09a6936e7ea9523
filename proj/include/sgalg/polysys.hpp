#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sgalg/game.hpp"
#include "sgalg/poly.hpp"
#include "sgalg/shapley.hpp"

namespace sgalg {

// Per-state equal-cardinality action subsets defining the kernels of all N
// auxiliary games.
struct KernelSelection {
    struct StateSelection {
        std::vector<std::size_t> rows, cols;  // ascending
    };
    std::vector<StateSelection> per_state;

    std::size_t total_size() const;
    void validate(const StochasticGame& g) const;
    std::string str() const;

    friend bool operator==(const KernelSelection& a, const KernelSelection& b);
    friend bool operator<(const KernelSelection& a, const KernelSelection& b);
};

// Symbolic auxiliary game restricted to the selected kernel. Entry (i,j) is
// (1-z0) r + z0 sum_t p z_t in normalized mode, r + z0 sum_t p z_t otherwise,
// over variables z0..z_N.
std::vector<std::vector<MultiPoly>> symbolic_kernel_matrix(const StochasticGame& g, std::size_t s,
                                                           const KernelSelection& kappa, Mode mode);

// Coupled system f_s = z_s * cofactor_sum(M_s) - det(M_s), one per state.
struct CoupledSystem {
    std::vector<MultiPoly> f;
    KernelSelection kappa;
    Mode mode;
};

CoupledSystem build_system(const StochasticGame& g, const KernelSelection& kappa, Mode mode);

// Kernel selection at a value estimate: the completely mixed kernel of each
// auxiliary game at v-hat. Validated downstream by root selection.
KernelSelection infer_kernel(const StochasticGame& g, const Rational& beta,
                             const ValueEstimate& estimate);

// Deterministic enumeration of all kernel selections by increasing total
// size then lexicographic order, used as the retry fallback. Calls fn for
// each candidate until it returns true; returns whether any call succeeded.
bool enumerate_kernels(const StochasticGame& g,
                       const std::function<bool(const KernelSelection&)>& fn,
                       std::size_t max_candidates);

}  // namespace sgalg
