#include "sgalg/roots.hpp"

#include <algorithm>

#include "sgalg/error.hpp"

namespace sgalg {

namespace {

// Isolating interval around a known rational root r of p inside (a, b):
// shrink a symmetric window until it contains no other root.
IsolatingInterval enclose_exact_root(const UniPoly& p, const std::vector<UniPoly>& chain,
                                     const Rational& r, Rational radius) {
    for (;;) {
        radius /= Rational(2);
        Rational lo = r - radius, hi = r + radius;
        if (p.eval(lo).is_zero() || p.eval(hi).is_zero()) continue;
        if (count_roots(chain, lo, hi) == 1) {
            IsolatingInterval iv{lo, hi, r};
            return iv;
        }
    }
}

void isolate_rec(const UniPoly& p, const std::vector<UniPoly>& chain, const Rational& a,
                 const Rational& b, std::vector<IsolatingInterval>& out) {
    int count = count_roots(chain, a, b);
    if (count == 0) return;
    if (count == 1 && !p.eval(b).is_zero()) {
        // single root strictly inside (a, b): endpoints are non-roots here
        out.push_back(IsolatingInterval{a, b, std::nullopt});
        return;
    }
    Rational m = (a + b) / Rational(2);
    if (p.eval(m).is_zero()) {
        IsolatingInterval iv = enclose_exact_root(p, chain, m, (b - a) / Rational(4));
        isolate_rec(p, chain, a, iv.lo, out);
        out.push_back(iv);
        isolate_rec(p, chain, iv.hi, b, out);
        return;
    }
    isolate_rec(p, chain, a, m, out);
    isolate_rec(p, chain, m, b, out);
}

}  // namespace

RootIsolation isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("root isolation of zero polynomial");
    RootIsolation out;
    out.squarefree = squarefree_part(p);
    if (out.squarefree.degree() <= 0) return out;

    // degree-1 short-circuit: the root is rational
    if (out.squarefree.degree() == 1) {
        Rational r = -out.squarefree.coeff(0) / out.squarefree.coeff(1);
        out.roots.push_back(IsolatingInterval{r - Rational(1), r + Rational(1), r});
        return out;
    }

    std::vector<UniPoly> chain = sturm_sequence(out.squarefree);
    Rational bound = cauchy_root_bound(out.squarefree);
    // nudge outward until the endpoints are non-roots (they already are:
    // every root is strictly inside (-B, B)); keep the guard for safety
    Rational lo = -bound, hi = bound;
    while (out.squarefree.eval(lo).is_zero()) lo -= Rational(1);
    while (out.squarefree.eval(hi).is_zero()) hi += Rational(1);
    isolate_rec(out.squarefree, chain, lo, hi, out.roots);
    std::sort(out.roots.begin(), out.roots.end(),
              [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
    return out;
}

IsolatingInterval refine(const UniPoly& squarefree, IsolatingInterval iv, const Rational& width) {
    if (iv.exact) {
        // exact root: just narrow the window symmetrically
        while (iv.width() > width) {
            Rational r = iv.width() / Rational(4);
            Rational lo = *iv.exact - r, hi = *iv.exact + r;
            if (squarefree.eval(lo).is_zero() || squarefree.eval(hi).is_zero()) {
                r /= Rational(2);
                lo = *iv.exact - r;
                hi = *iv.exact + r;
            }
            iv.lo = lo;
            iv.hi = hi;
        }
        return iv;
    }
    int sign_lo = squarefree.eval(iv.lo).sign();
    while (iv.width() > width) {
        Rational m = iv.mid();
        Rational fm = squarefree.eval(m);
        if (fm.is_zero()) {
            iv.exact = m;
            return refine(squarefree, iv, width);
        }
        if (fm.sign() == sign_lo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

std::size_t select_value_root(const UniPoly& squarefree, std::vector<IsolatingInterval>& roots,
                              const Rational& target, const Rational& window) {
    if (roots.empty()) throw DomainError("no real roots to select from");
    Rational lo = target - window, hi = target + window;

    // refine all intervals until each is decisively inside or outside the
    // selection window (or as narrow as the window allows)
    Rational min_width = window / Rational(16);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        roots[i] = refine(squarefree, roots[i], min_width);
        if (roots[i].hi < lo || roots[i].lo > hi) continue;
        hits.push_back(i);
    }
    if (hits.empty())
        throw DomainError("no root near estimate " + target.str() + " within window " + window.str());
    if (hits.size() > 1)
        throw AmbiguityError("several candidate roots near estimate " + target.str() +
                             " at window " + window.str());
    return hits.front();
}

}  // namespace sgalg
