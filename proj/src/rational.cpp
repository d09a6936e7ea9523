#include "sgalg/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "sgalg/error.hpp"

namespace sgalg {

BigInt bigint_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(n) / mpq_class(d);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw DomainError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(r);
}

Rational Rational::pow(unsigned long e) const {
    Rational out(1);
    Rational base = *this;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

BigInt Rational::floor() const {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return f;
}

Rational Rational::round_to_grid(unsigned bits) const {
    BigInt scale = bigint_pow(BigInt(2), bits);
    Rational scaled = *this * Rational(scale, BigInt(1));
    // floor(x + 1/2)
    Rational shifted = scaled + Rational(1, 2);
    return Rational(shifted.floor(), scale);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << q_;
    return os.str();
}

std::string Rational::decimal(unsigned digits) const {
    BigInt scale = bigint_pow(BigInt(10), digits);
    BigInt num = q_.get_num();
    BigInt den = q_.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    // round(|q| * 10^digits) half away from zero
    BigInt scaled_num = num * scale * 2 + den;
    BigInt units;
    mpz_fdiv_q(units.get_mpz_t(), scaled_num.get_mpz_t(), BigInt(den * 2).get_mpz_t());
    BigInt ipart = units / scale;
    BigInt fpart = units % scale;
    std::ostringstream os;
    if (neg && (ipart != 0 || fpart != 0)) os << '-';
    os << ipart;
    if (digits > 0) {
        std::string frac = fpart.get_str();
        os << '.' << std::string(digits - frac.size(), '0') << frac;
    }
    return os.str();
}

namespace {

BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("bad integer literal '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad integer literal '" + s + "'");
    return BigInt(s, 10);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_bigint(text), BigInt(1));
    }
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

Rational Rational::parse_decimal(const std::string& text) {
    if (text.find('/') != std::string::npos) return parse(text);
    auto epos = text.find_first_of("eE");
    std::string mant = epos == std::string::npos ? text : text.substr(0, epos);
    long expo = 0;
    if (epos != std::string::npos) {
        try {
            expo = std::stol(text.substr(epos + 1));
        } catch (const std::exception&) {
            throw ParseError("bad exponent in '" + text + "'");
        }
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        expo -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad number '" + text + "'");
    BigInt num = parse_bigint(digits);
    Rational out(num, BigInt(1));
    if (expo > 0)
        out *= Rational(bigint_pow(BigInt(10), static_cast<unsigned long>(expo)), BigInt(1));
    else if (expo < 0)
        out /= Rational(bigint_pow(BigInt(10), static_cast<unsigned long>(-expo)), BigInt(1));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

Rational pow10_inv(unsigned k) {
    return Rational(BigInt(1), bigint_pow(BigInt(10), k));
}

}  // namespace sgalg
