#include "sgalg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sgalg/error.hpp"

namespace sgalg {

Monomial Monomial::var(std::size_t i, std::size_t nvars, unsigned power) {
    Monomial m(nvars);
    m.e.at(i) = power;
    return m;
}

unsigned Monomial::total_degree() const {
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

TermOrder::TermOrder(std::vector<unsigned> significance) : sig_(std::move(significance)) {
    std::vector<bool> seen(sig_.size(), false);
    for (unsigned v : sig_) {
        if (v >= sig_.size() || seen[v]) throw DomainError("term order is not a permutation");
        seen[v] = true;
    }
}

TermOrder TermOrder::plain_lex(std::size_t nvars) {
    std::vector<unsigned> sig(nvars);
    for (std::size_t i = 0; i < nvars; ++i) sig[i] = static_cast<unsigned>(nvars - 1 - i);
    return TermOrder(std::move(sig));
}

TermOrder TermOrder::elimination_for_state(std::size_t nvars, std::size_t s) {
    if (s == 0 || s >= nvars) throw DomainError("state index out of range for term order");
    // Ascending: z0, z_s, z_{s+1}, ..., z_{N}, z_1, ..., z_{s-1}; reverse for
    // most-significant-first storage.
    std::vector<unsigned> asc;
    asc.push_back(0);
    for (std::size_t v = s; v < nvars; ++v) asc.push_back(static_cast<unsigned>(v));
    for (std::size_t v = 1; v < s; ++v) asc.push_back(static_cast<unsigned>(v));
    std::vector<unsigned> sig(asc.rbegin(), asc.rend());
    return TermOrder(std::move(sig));
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
    for (unsigned v : sig_) {
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
    }
    return false;
}

MultiPoly MultiPoly::constant(const Rational& c, std::size_t nvars) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t i, std::size_t nvars) {
    MultiPoly p(nvars);
    p.add_term(Monomial::var(i, nvars), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.nvars() != nvars_) throw DomainError("monomial variable count mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw DomainError("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw DomainError("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("polynomial variable count mismatch");
    MultiPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

std::pair<Monomial, Rational> MultiPoly::leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
    if (var >= nvars_) throw DomainError("substitute: variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        unsigned e = mm.e[var];
        mm.e[var] = 0;
        r.add_term(mm, c * value.pow(e));
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw DomainError("eval: point dimension mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m.e[i]) t *= point[i].pow(m.e[i]);
        acc += t;
    }
    return acc;
}

bool MultiPoly::involves(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m.e[var] > 0) return true;
    return false;
}

bool MultiPoly::involves_only(const std::vector<std::size_t>& vars) const {
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m.e[i] > 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    return true;
}

bool MultiPoly::divide_exact(const MultiPoly& divisor, MultiPoly& quotient) const {
    if (divisor.is_zero()) throw DomainError("division by zero polynomial");
    TermOrder order = TermOrder::plain_lex(nvars_);
    auto [dm, dc] = divisor.leading_term(order);
    MultiPoly rem = *this;
    MultiPoly q(nvars_);
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term(order);
        if (!dm.divides(rm)) return false;
        Monomial qm = rm / dm;
        Rational qc = rc / dc;
        MultiPoly t(nvars_);
        t.add_term(qm, qc);
        q += t;
        rem -= t * divisor;
    }
    quotient = std::move(q);
    return true;
}

MultiPoly MultiPoly::monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    auto [m, c] = leading_term(order);
    return scaled(c.inv());
}

MultiPoly MultiPoly::integer_cleared() const {
    if (is_zero()) return *this;
    BigInt den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : terms_) {
        BigInt d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    MultiPoly scaled_p = scaled(Rational(den_lcm, BigInt(1)));
    for (const auto& [m, c] : scaled_p.terms_)
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), BigInt(c.num()).get_mpz_t());
    if (num_gcd == 0) num_gcd = 1;
    MultiPoly out = scaled_p.scaled(Rational(BigInt(1), num_gcd));
    auto [m, c] = out.leading_term(TermOrder::plain_lex(nvars_));
    if (c.sign() < 0) out = out.scaled(Rational(-1));
    return out;
}

bool MultiPoly::proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms_.size() != b.terms_.size()) return false;
    Rational ratio(0);
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return false;
        Rational r = ia->second / ib->second;
        if (ratio.is_zero())
            ratio = r;
        else if (r != ratio)
            return false;
    }
    return true;
}

std::vector<std::string> default_var_names(std::size_t nvars) {
    std::vector<std::string> names(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names[i] = "z" + std::to_string(i);
    return names;
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    const std::vector<std::string> names = var_names.empty() ? default_var_names(nvars_) : var_names;
    // Descending by total degree, then descending canonical lex: stable and
    // readable for certificates.
    std::vector<const TermMap::value_type*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](const auto* x, const auto* y) {
        unsigned dx = x->first.total_degree(), dy = y->first.total_degree();
        if (dx != dy) return dx > dy;
        return y->first < x->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ts) {
        const Rational& c = t->second;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = !t->first.is_constant();
        if (!has_vars || mag != Rational(1)) {
            os << mag.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
            unsigned e = t->first.e[i];
            if (!e) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names[i];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::pair<unsigned, MultiPoly> content_power(const MultiPoly& p, const MultiPoly& factor) {
    if (p.is_zero()) throw DomainError("content_power of zero polynomial");
    if (factor.is_zero() || factor.is_constant()) throw DomainError("content_power: bad factor");
    unsigned l = 0;
    MultiPoly reduced = p;
    MultiPoly q(p.nvars());
    while (reduced.divide_exact(factor, q)) {
        reduced = q;
        ++l;
    }
    return {l, reduced};
}

}  // namespace sgalg
