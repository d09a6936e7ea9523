#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sgalg/error.hpp"
#include "sgalg/poly.hpp"
#include "sgalg/rational.hpp"

namespace sgalg {

// Ring glue shared by exact scalars and polynomials.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.nvars()); }
inline bool ring_is_zero(const Rational& r) { return r.is_zero(); }
inline bool ring_is_zero(const MultiPoly& p) { return p.is_zero(); }
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline MultiPoly ring_exact_div(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q(a.nvars());
    if (!a.divide_exact(b, q)) throw DomainError("inexact polynomial division in elimination");
    return q;
}

template <class T>
using SquareMatrix = std::vector<std::vector<T>>;

template <class T>
struct DetCofactors {
    T det;
    SquareMatrix<T> cof;  // cof[i][j] = (-1)^{i+j} det(minor_ij)
    T cof_sum;
};

namespace detail {

// Laplace expansion over live row/column masks, minors memoised per mask
// pair. Exponential in k but k is a kernel size (tiny).
template <class T>
class MinorTable {
  public:
    explicit MinorTable(const SquareMatrix<T>& m) : m_(m), zero_(zero_like(m[0][0])) {}

    T det(std::uint32_t rows, std::uint32_t cols) {
        if (rows == 0) {
            T one = zero_;
            one += unit();
            return one;
        }
        std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        int r = first_bit(rows);
        T acc = zero_;
        int sign = 1;
        for (std::uint32_t rest = cols; rest;) {
            int c = first_bit(rest);
            rest &= rest - 1;
            const T& entry = m_[r][c];
            if (!ring_is_zero(entry)) {
                T sub = det(rows & ~(1u << r), cols & ~(1u << c));
                T term = entry * sub;
                if (sign > 0)
                    acc += term;
                else
                    acc -= term;
            }
            sign = -sign;
        }
        memo_.emplace(key, acc);
        return acc;
    }

  private:
    static int first_bit(std::uint32_t mask) { return __builtin_ctz(mask); }
    T unit() const {
        // multiplicative identity built from the ring glue
        if constexpr (std::is_same_v<T, Rational>) {
            return Rational(1);
        } else {
            return MultiPoly::constant(Rational(1), zero_.nvars());
        }
    }
    const SquareMatrix<T>& m_;
    T zero_;
    std::unordered_map<std::uint64_t, T> memo_;
};

// Fraction-free elimination; divisions are exact in the ring.
template <class T>
T det_bareiss(SquareMatrix<T> m) {
    const std::size_t n = m.size();
    T prev = zero_like(m[0][0]);
    bool have_prev = false;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(m[k][k])) {
            std::size_t piv = k + 1;
            while (piv < n && ring_is_zero(m[piv][k])) ++piv;
            if (piv == n) return zero_like(m[0][0]);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = have_prev ? ring_exact_div(num, prev) : num;
            }
        }
        prev = m[k][k];
        have_prev = true;
    }
    T d = m[n - 1][n - 1];
    if (sign < 0) {
        T z = zero_like(d);
        z -= d;
        return z;
    }
    return d;
}

}  // namespace detail

template <class T>
T determinant(const SquareMatrix<T>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw DomainError("determinant of empty matrix");
    if (n <= 4) {
        detail::MinorTable<T> table(m);
        return table.det((1u << n) - 1, (1u << n) - 1);
    }
    return detail::det_bareiss(m);
}

template <class T>
DetCofactors<T> det_cofactors(const SquareMatrix<T>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw DomainError("cofactors of empty matrix");
    DetCofactors<T> out;
    out.cof.assign(n, std::vector<T>(n, zero_like(m[0][0])));
    out.cof_sum = zero_like(m[0][0]);
    detail::MinorTable<T> table(m);
    std::uint32_t full = (1u << n) - 1;
    out.det = n <= 4 ? table.det(full, full) : detail::det_bareiss(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            T minor = table.det(full & ~(1u << i), full & ~(1u << j));
            if ((i + j) % 2 == 1) {
                T z = zero_like(minor);
                z -= minor;
                minor = z;
            }
            out.cof[i][j] = minor;
            out.cof_sum += out.cof[i][j];
        }
    }
    return out;
}

// Solves M x = b by exact Gaussian elimination. Returns false if singular.
bool solve_linear(const SquareMatrix<Rational>& m, const std::vector<Rational>& b,
                  std::vector<Rational>& x);

}  // namespace sgalg
