#include "sgalg/matrix_game.hpp"

#include <algorithm>
#include <sstream>

#include "sgalg/error.hpp"

namespace sgalg {

MatrixGame MatrixGame::submatrix(const std::vector<std::size_t>& r,
                                 const std::vector<std::size_t>& c) const {
    MatrixGame s(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) s.at(i, j) = at(r[i], c[j]);
    return s;
}

SquareMatrix<Rational> MatrixGame::as_square() const {
    if (rows != cols) throw DomainError("matrix is not square");
    SquareMatrix<Rational> m(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = at(i, j);
    return m;
}

MatrixGame MatrixGame::parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::vector<Rational>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            row.push_back(Rational::parse(tok));
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(rows.front().size()) + " entries, got " +
                             std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    MatrixGame g(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) g.at(i, j) = rows[i][j];
    return g;
}

namespace {

// Primal: max 1'q st (A + shift) q <= 1, q >= 0, all entries positive after
// the shift so the optimum is finite. Dense tableau, Bland's rule.
class SimplexTableau {
  public:
    SimplexTableau(const MatrixGame& B) : m_(B.rows), n_(B.cols) {
        t_.assign(m_ + 1, std::vector<Rational>(n_ + m_ + 1));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = B.at(i, j);
            t_[i][n_ + i] = Rational(1);
            t_[i][n_ + m_] = Rational(1);
            basis_[i] = n_ + i;
        }
        for (std::size_t j = 0; j < n_; ++j) t_[m_][j] = Rational(-1);
    }

    void run() {
        for (;;) {
            // Bland: entering = lowest-index column with negative cost
            std::size_t enter = n_ + m_;
            for (std::size_t j = 0; j < n_ + m_; ++j) {
                if (t_[m_][j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_ + m_) return;  // optimal
            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter].sign() <= 0) continue;
                Rational ratio = t_[i][n_ + m_] / t_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) throw DomainError("unbounded game LP");  // cannot happen, entries positive
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = t_[r][c].inv();
        for (auto& v : t_[r]) v *= inv;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || t_[i][c].is_zero()) continue;
            Rational f = t_[i][c];
            for (std::size_t j = 0; j <= n_ + m_; ++j) t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    std::vector<Rational> primal() const {
        std::vector<Rational> q(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) q[basis_[i]] = t_[i][n_ + m_];
        return q;
    }

    std::vector<Rational> dual() const {
        std::vector<Rational> p(m_);
        for (std::size_t i = 0; i < m_; ++i) p[i] = t_[m_][n_ + i];
        return p;
    }

  private:
    std::size_t m_, n_;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

MatrixGameSolution solve_matrix_game(const MatrixGame& A) {
    if (A.rows == 0 || A.cols == 0) throw DomainError("empty matrix game");
    // shift so every entry is >= 1, making the LP value positive and finite
    Rational mn = A.a.front();
    for (const auto& v : A.a) mn = min(mn, v);
    Rational shift = max(Rational(0), Rational(1) - mn);
    MatrixGame B = A;
    for (auto& v : B.a) v += shift;

    SimplexTableau tab(B);
    tab.run();
    std::vector<Rational> q = tab.primal();
    std::vector<Rational> p = tab.dual();
    Rational sum_q(0), sum_p(0);
    for (const auto& v : q) sum_q += v;
    for (const auto& v : p) sum_p += v;
    if (sum_q.is_zero() || sum_p.is_zero()) throw DomainError("degenerate LP optimum");

    MatrixGameSolution sol;
    Rational shifted_value = sum_q.inv();
    sol.value = shifted_value - shift;
    sol.x.resize(A.rows);
    sol.y.resize(A.cols);
    for (std::size_t i = 0; i < A.rows; ++i) sol.x[i] = p[i] / sum_p;
    for (std::size_t j = 0; j < A.cols; ++j) sol.y[j] = q[j] / sum_q;
    return sol;
}

Rational kernel_value(const MatrixGame& A) {
    auto dc = det_cofactors(A.as_square());
    if (dc.cof_sum.is_zero()) throw DomainError("degenerate kernel: cofactor sum is zero");
    return dc.det / dc.cof_sum;
}

std::pair<std::vector<Rational>, std::vector<Rational>> kernel_strategies(const MatrixGame& A) {
    auto dc = det_cofactors(A.as_square());
    if (dc.det.is_zero()) throw DomainError("singular kernel matrix");
    if (dc.cof_sum.is_zero()) throw DomainError("degenerate kernel: cofactor sum is zero");
    Rational v = dc.det / dc.cof_sum;
    std::size_t k = A.rows;
    std::vector<Rational> x(k), y(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rational row_sum(0), col_sum(0);
        for (std::size_t j = 0; j < k; ++j) {
            row_sum += dc.cof[i][j];
            col_sum += dc.cof[j][i];
        }
        x[i] = v * row_sum / dc.det;
        y[i] = v * col_sum / dc.det;
    }
    return {x, y};
}

bool validate_cmv_kernel(const MatrixGame& A, const Rational& game_value,
                         const std::vector<std::size_t>& row_set,
                         const std::vector<std::size_t>& col_set, Kernel& out) {
    if (row_set.empty() || row_set.size() != col_set.size()) return false;
    MatrixGame sub = A.submatrix(row_set, col_set);
    auto dc = det_cofactors(sub.as_square());
    if (dc.det.is_zero() || dc.cof_sum.is_zero()) return false;
    if (dc.det / dc.cof_sum != game_value) return false;  // (K1)

    std::size_t k = row_set.size();
    std::vector<Rational> xk(k), yk(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rational row_sum(0), col_sum(0);
        for (std::size_t j = 0; j < k; ++j) {
            row_sum += dc.cof[i][j];
            col_sum += dc.cof[j][i];
        }
        xk[i] = game_value * row_sum / dc.det;  // (K2)
        yk[i] = game_value * col_sum / dc.det;
        if (xk[i].sign() <= 0 || yk[i].sign() <= 0) return false;  // completely mixed
    }

    std::vector<Rational> x(A.rows, Rational(0)), y(A.cols, Rational(0));
    for (std::size_t i = 0; i < k; ++i) x[row_set[i]] = xk[i];
    for (std::size_t j = 0; j < k; ++j) y[col_set[j]] = yk[j];
    // extended strategies must be optimal in the full game
    for (std::size_t j = 0; j < A.cols; ++j) {
        Rational payoff(0);
        for (std::size_t i = 0; i < A.rows; ++i) payoff += x[i] * A.at(i, j);
        if (payoff < game_value) return false;
    }
    for (std::size_t i = 0; i < A.rows; ++i) {
        Rational payoff(0);
        for (std::size_t j = 0; j < A.cols; ++j) payoff += A.at(i, j) * y[j];
        if (payoff > game_value) return false;
    }
    out.row_set = row_set;
    out.col_set = col_set;
    out.sub = std::move(sub);
    out.value = game_value;
    out.x_full = std::move(x);
    out.y_full = std::move(y);
    out.x_kernel = std::move(xk);
    out.y_kernel = std::move(yk);
    return true;
}

namespace {

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Kernel find_cmv_kernel(const MatrixGame& A) {
    MatrixGameSolution sol = solve_matrix_game(A);
    if (sol.value.is_zero()) throw DomainError("value is zero -- shift first");

    Kernel k;
    // candidate supports from the LP optimum
    std::vector<std::size_t> sx, sy;
    for (std::size_t i = 0; i < A.rows; ++i)
        if (sol.x[i].sign() > 0) sx.push_back(i);
    for (std::size_t j = 0; j < A.cols; ++j)
        if (sol.y[j].sign() > 0) sy.push_back(j);
    if (sx.size() == sy.size() && validate_cmv_kernel(A, sol.value, sx, sy, k)) return k;

    // exhaustive fallback: increasing size, lexicographic (row set, col set)
    std::size_t kmax = std::min(A.rows, A.cols);
    for (std::size_t size = 1; size <= kmax; ++size) {
        std::vector<std::size_t> rs(size);
        for (std::size_t i = 0; i < size; ++i) rs[i] = i;
        do {
            std::vector<std::size_t> cs(size);
            for (std::size_t j = 0; j < size; ++j) cs[j] = j;
            do {
                if (validate_cmv_kernel(A, sol.value, rs, cs, k)) return k;
            } while (next_combination(cs, A.cols));
        } while (next_combination(rs, A.rows));
    }
    throw DomainError("no completely mixed kernel found");
}

}  // namespace sgalg
