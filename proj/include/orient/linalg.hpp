#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orient {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw StructuralError("ragged matrix row");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw StructuralError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Vec row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Int v) { return v == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(data_.begin(), data_.end(), [](Int v) { return v >= 0; });
  }
  bool column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, c) != 0) return false;
    return true;
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw StructuralError("matrix-vector dimension mismatch");
    Vec out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      Int s = 0;
      for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
      out[r] = s;
    }
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  IntMatrix negated() const {
    IntMatrix m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
  }

  const std::vector<Int>& data() const { return data_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Int v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += v * b(k, j);
    }
  return out;
}

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix sum dimension mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// Exact rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t exact_rank(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw StructuralError("ragged matrix row");
    if (is_zero(r)) continue;
    m.emplace_back(r.begin(), r.end());
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const BigInt p = m[rank][c];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const BigInt f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] = (p * m[r][j] - f * m[rank][j]) / prev;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

inline std::size_t exact_rank(const IntMatrix& a) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return exact_rank(rows, a.cols());
}

// Phase-one simplex over Q with Bland's rule: find z >= 0 with M z = d.
inline std::optional<std::vector<Rational>> nonnegative_solution(std::vector<std::vector<Rational>> M,
                                                                 std::vector<Rational> d) {
  const std::size_t m = M.size();
  const std::size_t n = m ? M[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i)
    if (d[i] < 0) {
      d[i] = -d[i];
      for (auto& v : M[i]) v = -v;
    }
  // Tableau columns: n originals, m artificials, then rhs.
  const std::size_t W = n + m + 1;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(W));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = M[i][j];
    T[i][n + i] = 1;
    T[i][W - 1] = d[i];
    basis[i] = n + i;
  }
  // Objective: minimise the sum of artificials; reduced costs row.
  std::vector<Rational> cost(W);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < W; ++j)
      if (j < n || j == W - 1) cost[j] -= T[i][j];
  for (;;) {
    std::size_t enter = W;
    for (std::size_t j = 0; j + 1 < W; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == W) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][W - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded cannot happen for phase one
    const Rational p = T[leave][enter];
    for (auto& v : T[leave]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j < W; ++j) T[i][j] -= f * T[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < W; ++j) cost[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[W - 1] != 0) return std::nullopt;
  std::vector<Rational> z(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) z[basis[i]] = T[i][W - 1];
  return z;
}

inline Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace orient
