#pragma once

#include <span>
#include <vector>

#include "sgalg/poly.hpp"

namespace sgalg {

// Reduced monic Groebner basis: S-polynomials and input generators reduce to
// zero, no leading monomial divides another, generators sorted by leading
// monomial (ascending in the order).
struct GroebnerBasis {
    std::vector<MultiPoly> gens;
    TermOrder order;
    bool trivial = false;  // ideal is <1>
};

// Full normal form of p modulo the basis: no monomial of the result is
// divisible by any basis leading monomial.
MultiPoly reduce(const MultiPoly& p, std::span<const MultiPoly> basis, const TermOrder& order);

// Buchberger's algorithm with the normal pair-selection strategy plus the
// coprime-lcm and chain criteria. Throws DomainError("inconsistent system")
// via the trivial flag consumer if the ideal is <1>; callers inspect
// `trivial` instead when that is expected.
GroebnerBasis buchberger(std::vector<MultiPoly> gens, const TermOrder& order);

struct BivariateCertificate {
    std::size_t state;  // 1-based
    MultiPoly g;        // involves only z0 and z_state
    TermOrder order;
};

// The minimal basis element involving only {z0, z_s}. The basis must have
// been computed with elimination_for_state(s). Throws DomainError if no
// bivariate element exists (wrong kernel selection or degenerate game).
BivariateCertificate extract_bivariate(const GroebnerBasis& basis, std::size_t s);

}  // namespace sgalg
