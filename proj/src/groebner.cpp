#include "sgalg/groebner.hpp"

#include <algorithm>
#include <set>

#include "sgalg/error.hpp"

namespace sgalg {

MultiPoly reduce(const MultiPoly& p, std::span<const MultiPoly> basis, const TermOrder& order) {
    MultiPoly rem = p;
    MultiPoly out(p.nvars());
    std::vector<std::pair<Monomial, Rational>> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) leads.push_back(g.leading_term(order));

    while (!rem.is_zero()) {
        auto [m, c] = rem.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!leads[i].first.divides(m)) continue;
            MultiPoly factor(p.nvars());
            factor.add_term(m / leads[i].first, c / leads[i].second);
            rem -= factor * basis[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            MultiPoly t(p.nvars());
            t.add_term(m, c);
            out += t;
            rem -= t;
        }
    }
    return out;
}

namespace {

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const TermOrder& order) {
    auto [mf, cf] = f.leading_term(order);
    auto [mg, cg] = g.leading_term(order);
    Monomial l = Monomial::lcm(mf, mg);
    MultiPoly a(f.nvars()), b(f.nvars());
    a.add_term(l / mf, cf.inv());
    b.add_term(l / mg, cg.inv());
    return a * f - b * g;
}

struct Pair {
    unsigned deg;
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    const TermOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (!(a.lcm == b.lcm)) return order->less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

GroebnerBasis buchberger(std::vector<MultiPoly> gens, const TermOrder& order) {
    std::size_t nvars = order.nvars();
    std::vector<MultiPoly> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars() != nvars) throw DomainError("generator variable count mismatch");
        G.push_back(g.monic(order));
    }
    if (G.empty()) throw DomainError("no nonzero generators");

    std::vector<Monomial> lead;
    for (const auto& g : G) lead.push_back(g.leading_term(order).first);

    PairLess less{&order};
    std::set<Pair, PairLess> pending(less);
    std::set<std::pair<std::size_t, std::size_t>> processed;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = Monomial::lcm(lead[i], lead[j]);
        pending.insert(Pair{l.total_degree(), l, i, j});
    };
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) push_pair(i, j);

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        processed.insert({pr.i, pr.j});

        // coprime criterion: lcm equals the product of the leading monomials
        if (pr.lcm == lead[pr.i] * lead[pr.j]) continue;
        // chain criterion: some k divides the lcm with both pairs done
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lead[k].divides(pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (processed.count({key1.first, key1.second}) && processed.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        MultiPoly s = s_polynomial(G[pr.i], G[pr.j], order);
        MultiPoly h = reduce(s, G, order);
        if (h.is_zero()) continue;
        h = h.monic(order);
        G.push_back(h);
        lead.push_back(h.leading_term(order).first);
        for (std::size_t i = 0; i + 1 < G.size(); ++i) push_pair(i, G.size() - 1);
    }

    // minimal basis: drop generators whose lead is divisible by another lead
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lead[j].divides(lead[i]) && !(lead[i] == lead[j] && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // inter-reduce: normal form of each element modulo the others
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly h = others.empty() ? minimal[i] : reduce(minimal[i], others, order);
        if (!h.is_zero()) reduced.push_back(h.monic(order));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });

    GroebnerBasis out{std::move(reduced), order, false};
    for (const auto& g : out.gens) {
        if (!g.is_zero() && g.is_constant()) {
            out.gens.clear();
            out.gens.push_back(MultiPoly::constant(Rational(1), nvars));
            out.trivial = true;
            break;
        }
    }
    return out;
}

BivariateCertificate extract_bivariate(const GroebnerBasis& basis, std::size_t s) {
    if (basis.trivial) throw DomainError("inconsistent system: ideal is <1>");
    std::vector<std::size_t> allowed{0, s};
    for (const auto& g : basis.gens) {
        if (g.involves_only(allowed)) return BivariateCertificate{s, g, basis.order};
    }
    throw DomainError("no bivariate element for state " + std::to_string(s) +
                      " (wrong kernel selection or degenerate game)");
}

}  // namespace sgalg
