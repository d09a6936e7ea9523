#pragma once

#include <optional>
#include <vector>

#include "sgalg/rational.hpp"
#include "sgalg/unipoly.hpp"

namespace sgalg {

// Open interval (lo, hi) containing exactly one real root of the square-free
// polynomial it was produced from; p(lo) and p(hi) are nonzero with opposite
// signs. `exact` is set when the root itself is rational and known.
struct IsolatingInterval {
    Rational lo, hi;
    std::optional<Rational> exact;

    Rational mid() const { return (lo + hi) / Rational(2); }
    Rational width() const { return hi - lo; }
    Rational point() const { return exact ? *exact : mid(); }
};

// Square-free reduction + Cauchy bound + Sturm bisection. Intervals are
// pairwise disjoint, sorted ascending, one per distinct real root of p.
// Also returns the square-free polynomial the intervals refer to.
struct RootIsolation {
    UniPoly squarefree;
    std::vector<IsolatingInterval> roots;
};

RootIsolation isolate_real_roots(const UniPoly& p);

// Shrinks the interval below `width` by sign-preserving bisection. Detects
// rational roots hit exactly by a midpoint.
IsolatingInterval refine(const UniPoly& squarefree, IsolatingInterval iv, const Rational& width);

// Index of the unique root whose interval intersects
// [target - window, target + window] after refinement. Throws DomainError
// when no root is near the estimate and AmbiguityError when several remain
// at maximum refinement.
std::size_t select_value_root(const UniPoly& squarefree, std::vector<IsolatingInterval>& roots,
                              const Rational& target, const Rational& window);

}  // namespace sgalg
