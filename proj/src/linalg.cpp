#include "sgalg/linalg.hpp"

namespace sgalg {

bool solve_linear(const SquareMatrix<Rational>& m, const std::vector<Rational>& b,
                  std::vector<Rational>& x) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n] = b[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(a[col], a[piv]);
        Rational inv = a[col][col].inv();
        for (std::size_t j = col; j <= n; ++j) a[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return true;
}

}  // namespace sgalg
