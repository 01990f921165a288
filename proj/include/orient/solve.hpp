#pragma once

#include <map>

#include "linalg.hpp"

namespace orient {

inline constexpr int kDefaultCap = 64;

struct SolveResult {
  std::vector<Vec> solutions;
  bool complete = true;
  int cap = kDefaultCap;
};

// Non-negative integer solutions of A x = b for a fixed A.
//
// When {x >= 0 : A x = 0} is trivial there is an integral weight c >= 1 with
// c = A^T y, so c.x = y.b is fixed on the solution set and bounds the search.
// Otherwise solutions are listed up to coordinate sum <= cap and the result is
// flagged incomplete.
class NonnegSolver {
 public:
  NonnegSolver(IntMatrix a, int cap = kDefaultCap) : a_(std::move(a)), cap_(cap) {
    const std::size_t m = a_.rows(), n = a_.cols();
    last_col_.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a_(i, j) != 0) last_col_[i] = static_cast<long>(j);
    rows_ending_.assign(n, {});
    for (std::size_t i = 0; i < m; ++i)
      if (last_col_[i] >= 0) rows_ending_[last_col_[i]].push_back(i);
    find_weights();
  }

  bool cone_trivial() const { return !weights_.empty() || a_.cols() == 0; }
  const IntMatrix& matrix() const { return a_; }
  int cap() const { return cap_; }

  const SolveResult& solve(const Vec& b) const {
    auto it = memo_.find(b);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(b, compute(b)).first->second;
  }

 private:
  void find_weights() {
    const std::size_t m = a_.rows(), n = a_.cols();
    if (n == 0) return;
    // Primal: x >= 0, A x = 0, sum x = 1.
    std::vector<std::vector<Rational>> M(m + 1, std::vector<Rational>(n));
    std::vector<Rational> d(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) M[i][j] = a_(i, j);
    for (std::size_t j = 0; j < n; ++j) M[m][j] = 1;
    d[m] = 1;
    if (nonnegative_solution(M, d)) return;
    // Dual: A^T (y+ - y-) - s = 1 with y+, y-, s >= 0.
    std::vector<std::vector<Rational>> D(n, std::vector<Rational>(2 * m + n));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        D[j][i] = a_(i, j);
        D[j][m + i] = -a_(i, j);
      }
      D[j][2 * m + j] = -1;
    }
    auto sol = nonnegative_solution(D, std::vector<Rational>(n, 1));
    if (!sol) throw std::logic_error("cone is pointed but no separating weight was found");
    std::vector<Rational> y(m);
    BigInt lcm = 1;
    for (std::size_t i = 0; i < m; ++i) {
      y[i] = (*sol)[i] - (*sol)[m + i];
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(y[i]));
    }
    y_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) y_[i] = static_cast<Int>(boost::multiprecision::numerator(Rational(y[i] * lcm)));
    weights_.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) weights_[j] += a_(i, j) * y_[i];
    for (Int w : weights_)
      if (w < 1) throw std::logic_error("separating weight is not positive");
  }

  bool rows_ok(std::size_t j, const Vec& residual) const {
    for (std::size_t i : rows_ending_[j])
      if (residual[i] != 0) return false;
    return true;
  }

  SolveResult compute(const Vec& b) const {
    if (b.size() != a_.rows()) throw StructuralError("right-hand side has the wrong length");
    SolveResult res;
    res.cap = cap_;
    const std::size_t n = a_.cols();
    if (n == 0) {
      if (is_zero(b)) res.solutions.push_back({});
      return res;
    }
    for (std::size_t i = 0; i < b.size(); ++i)
      if (last_col_[i] < 0 && b[i] != 0) return res;
    Vec x(n, 0);
    Vec residual = b;
    if (cone_trivial()) {
      Int target = 0;
      for (std::size_t i = 0; i < b.size(); ++i) target += y_[i] * b[i];
      if (target < 0) return res;
      dfs_weighted(0, target, x, residual, res);
    } else {
      std::vector<std::vector<Rational>> M(a_.rows(), std::vector<Rational>(n));
      std::vector<Rational> d(b.begin(), b.end());
      for (std::size_t i = 0; i < a_.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) M[i][j] = a_(i, j);
      if (!nonnegative_solution(M, d)) return res;
      res.complete = false;
      dfs_capped(0, cap_, x, residual, res);
    }
    return res;
  }

  void assign(std::size_t j, Int delta, Vec& residual) const {
    for (std::size_t i = 0; i < a_.rows(); ++i) residual[i] -= a_(i, j) * delta;
  }

  void dfs_weighted(std::size_t j, Int budget, Vec& x, Vec& residual, SolveResult& res) const {
    const std::size_t n = a_.cols();
    if (j == n) {
      if (budget == 0 && is_zero(residual)) res.solutions.push_back(x);
      return;
    }
    const Int w = weights_[j];
    for (Int v = 0; v * w <= budget; ++v) {
      x[j] = v;
      if (v) assign(j, 1, residual);
      if (rows_ok(j, residual)) dfs_weighted(j + 1, budget - v * w, x, residual, res);
    }
    assign(j, -x[j], residual);
    x[j] = 0;
  }

  void dfs_capped(std::size_t j, Int budget, Vec& x, Vec& residual, SolveResult& res) const {
    const std::size_t n = a_.cols();
    if (j == n) {
      if (is_zero(residual)) res.solutions.push_back(x);
      return;
    }
    for (Int v = 0; v <= budget; ++v) {
      x[j] = v;
      if (v) assign(j, 1, residual);
      if (rows_ok(j, residual)) dfs_capped(j + 1, budget - v, x, residual, res);
    }
    assign(j, -x[j], residual);
    x[j] = 0;
  }

  IntMatrix a_;
  int cap_;
  std::vector<long> last_col_;
  std::vector<std::vector<std::size_t>> rows_ending_;
  Vec weights_, y_;
  mutable std::map<Vec, SolveResult> memo_;
};

inline SolveResult solve_nonneg(const IntMatrix& a, const Vec& b, int cap = kDefaultCap) {
  NonnegSolver s(a, cap);
  return s.solve(b);
}

}  // namespace orient
