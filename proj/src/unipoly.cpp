#include "sgalg/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "sgalg/error.hpp"
#include "sgalg/poly.hpp"

namespace sgalg {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Rational, Rational> UniPoly::eval_interval(const Rational& lo, const Rational& hi) const {
    Rational L(0), H(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // [L,H] * [lo,hi] + coeff
        Rational p1 = L * lo, p2 = L * hi, p3 = H * lo, p4 = H * hi;
        Rational nl = min(min(p1, p2), min(p3, p4));
        Rational nh = max(max(p1, p2), max(p3, p4));
        L = nl + *it;
        H = nh + *it;
    }
    return {L, H};
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(d));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(d));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::scaled(const Rational& k) const {
    if (k.is_zero()) return UniPoly();
    std::vector<Rational> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * k;
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    BigInt den_lcm(1);
    for (const auto& c : c_) {
        BigInt d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    UniPoly cleared = scaled(Rational(den_lcm, BigInt(1)));
    BigInt g(0);
    for (const auto& c : cleared.c_) {
        BigInt n = c.num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) g = 1;
    UniPoly out = cleared.scaled(Rational(BigInt(1), g));
    if (out.leading().sign() < 0) out = out.scaled(Rational(-1));
    return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    UniPoly rem = num;
    std::vector<Rational> q;
    int dd = den.degree();
    Rational lead_inv = den.leading().inv();
    if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational factor = rem.leading() * lead_inv;
        q[shift] = factor;
        std::vector<Rational> sub(shift + den.c_.size(), Rational(0));
        for (std::size_t i = 0; i < den.c_.size(); ++i) sub[shift + i] = den.c_[i] * factor;
        rem = rem - UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(q)), rem};
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != Rational(1)) {
            os << mag.str();
            if (k > 0) os << "*";
        }
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = UniPoly::divmod(a, b).second;
        a = std::move(b);
        // primitive normalisation keeps coefficient growth in check
        b = r.is_zero() ? r : r.primitive();
    }
    if (a.is_zero()) throw DomainError("gcd of zero polynomials");
    return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree_part of zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = unipoly_gcd(p, p.derivative());
    UniPoly q = UniPoly::divmod(p, g).first;
    return q.primitive();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("sturm_sequence of zero polynomial");
    std::vector<UniPoly> chain;
    chain.push_back(p);
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        // scale by a positive constant only: signs must be preserved
        UniPoly t = -r;
        UniPoly tp = t.primitive();
        if (t.leading().sign() < 0) tp = tp.scaled(Rational(-1));
        chain.push_back(std::move(tp));
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int vars = 0;
    int prev = 0;
    for (const auto& q : chain) {
        int s = q.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

int count_roots(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("root bound of zero polynomial");
    Rational lead = p.leading().abs();
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = max(m, p.coeff(i).abs());
    return Rational(1) + m / lead;
}

UniPoly to_univariate(const MultiPoly& p, std::size_t var) {
    if (var >= p.nvars()) throw DomainError("to_univariate: variable index out of range");
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (i != var && m.e[i] > 0)
                throw DomainError("to_univariate: polynomial is not univariate in requested variable");
        std::size_t d = m.e[var];
        if (coeffs.size() <= d) coeffs.resize(d + 1, Rational(0));
        coeffs[d] += c;
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace sgalg
