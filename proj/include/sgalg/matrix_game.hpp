#pragma once

#include <string>
#include <vector>

#include "sgalg/linalg.hpp"
#include "sgalg/rational.hpp"

namespace sgalg {

// Two-person zero-sum matrix game; the row player maximises.
struct MatrixGame {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> a;  // row-major

    MatrixGame() = default;
    MatrixGame(std::size_t m, std::size_t n) : rows(m), cols(n), a(m * n) {}

    Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    MatrixGame submatrix(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) const;
    SquareMatrix<Rational> as_square() const;

    static MatrixGame parse(const std::string& text);
};

struct MatrixGameSolution {
    Rational value;
    std::vector<Rational> x;  // maximiser
    std::vector<Rational> y;  // minimiser
};

// Exact value and one optimal pair via rational simplex with Bland's rule.
// The minimax inequalities hold exactly on the result.
MatrixGameSolution solve_matrix_game(const MatrixGame& A);

// det(A) / sum of cofactors. Throws DomainError on zero cofactor sum.
Rational kernel_value(const MatrixGame& A);

// Kernel strategies val * 1^T A^-1 and val * A^-1 1 of a square invertible
// matrix with nonzero value. Each sums to one.
std::pair<std::vector<Rational>, std::vector<Rational>> kernel_strategies(const MatrixGame& A);

// Square invertible submatrix carrying the game value and optimal strategies.
struct Kernel {
    std::vector<std::size_t> row_set, col_set;  // ascending indices into A
    MatrixGame sub;
    Rational value;
    std::vector<Rational> x_full, y_full;  // extended with zeros, optimal in A
    std::vector<Rational> x_kernel, y_kernel;  // strictly positive on the kernel
};

// Finds a completely-mixed-value kernel: candidate supports from the LP
// solution first, then exhaustive enumeration by increasing size with
// lexicographic tie-break. Requires val(A) != 0.
Kernel find_cmv_kernel(const MatrixGame& A);

// Validation used by both the kernel search and its enumeration oracle.
// Fills `out` and returns true when (row_set, col_set) passes (K1), (K2),
// strict positivity and extended optimality for the given game value.
bool validate_cmv_kernel(const MatrixGame& A, const Rational& game_value,
                         const std::vector<std::size_t>& row_set,
                         const std::vector<std::size_t>& col_set, Kernel& out);

}  // namespace sgalg
