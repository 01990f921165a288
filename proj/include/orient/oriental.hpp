#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "complex.hpp"

namespace orient {

using Vertices = std::vector<int>;
using Mask = std::uint32_t;

inline std::string simplex_label(const Vertices& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(v[i]);
  }
  return s;
}

inline Vertices parse_simplex_label(std::string_view s) {
  Vertices v;
  std::string cur;
  for (char ch : s) {
    if (ch == '.') {
      v.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) v.push_back(std::stoi(cur));
  return v;
}

inline Mask mask_of(const Vertices& v) {
  Mask m = 0;
  for (int x : v) m |= Mask{1} << x;
  return m;
}

inline Vertices vertices_of(Mask m) {
  Vertices v;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) v.push_back(i);
  return v;
}

inline bool strictly_increasing(const Vertices& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return true;
}

// The m-th oriental together with lookup tables from vertex sets to basis positions.
struct OrientalData {
  int m = -1;
  ComplexPtr complex;
  std::vector<std::vector<Mask>> masks;  // masks[q][i]
  std::unordered_map<Mask, std::size_t> index;

  std::size_t index_of(Mask mk) const { return index.at(mk); }
  std::optional<std::size_t> find(const Vertices& v) const {
    if (v.empty() || !strictly_increasing(v) || v.front() < 0 || v.back() > m) return std::nullopt;
    return index.at(mask_of(v));
  }
  Vertices vertices(int q, std::size_t i) const { return vertices_of(masks[q][i]); }
};

namespace detail {

inline std::unique_ptr<OrientalData> build_oriental(int m) {
  if (m > 24) throw StructuralError("oriental dimension too large");
  auto data = std::make_unique<OrientalData>();
  data->m = m;
  const int n = std::max(m, 0);
  std::vector<std::vector<std::string>> basis(n + 1);
  data->masks.assign(n + 1, {});
  if (m >= 0) {
    // Lexicographic enumeration of strictly increasing tuples by size.
    for (int q = 0; q <= m; ++q) {
      Vertices cur(q + 1);
      for (int i = 0; i <= q; ++i) cur[i] = i;
      for (;;) {
        data->masks[q].push_back(mask_of(cur));
        basis[q].push_back(simplex_label(cur));
        int i = q;
        while (i >= 0 && cur[i] == m - q + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j <= q; ++j) cur[j] = cur[j - 1] + 1;
      }
    }
  }
  for (int q = 0; q <= n; ++q)
    for (std::size_t i = 0; i < data->masks[q].size(); ++i) data->index[data->masks[q][i]] = i;
  std::vector<IntMatrix> diff;
  for (int q = 0; q < n; ++q) {
    IntMatrix d(basis[q].size(), basis[q + 1].size());
    for (std::size_t j = 0; j < basis[q + 1].size(); ++j) {
      const Vertices v = vertices_of(data->masks[q + 1][j]);
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Mask face = data->masks[q + 1][j] & ~(Mask{1} << v[i]);
        d(data->index.at(face), j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    diff.push_back(std::move(d));
  }
  Vec aug(basis[0].size(), 1);
  data->complex = share(BasedComplex(n, std::move(basis), std::move(diff), std::move(aug)));
  return data;
}

}  // namespace detail

inline const OrientalData& oriental_data(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<OrientalData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = detail::build_oriental(m);
  return *slot;
}

// O[m]; m = -1 gives the empty complex.
inline ComplexPtr oriental(int m) {
  if (m < -1) throw StructuralError("oriental dimension must be >= -1");
  return oriental_data(m).complex;
}

inline bool is_monotone(const std::vector<int>& alpha, int target_m) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0 || alpha[i] > target_m) return false;
    if (i && alpha[i] < alpha[i - 1]) return false;
  }
  return true;
}

// For a monotone alpha: [m] -> [m'], the induced map O[m] -> O[m'] sends a
// simplex to its image simplex when alpha is injective on it and to zero otherwise.
// column_map[q][i] is the target index in degree q, or -1.
inline std::vector<std::vector<long>> operator_columns(const std::vector<int>& alpha, int target_m) {
  if (alpha.empty()) throw StructuralError("monotone map needs a non-empty domain");
  if (!is_monotone(alpha, target_m)) throw StructuralError("map is not monotone into [" + std::to_string(target_m) + "]");
  const int m = static_cast<int>(alpha.size()) - 1;
  const auto& src = oriental_data(m);
  const auto& tgt = oriental_data(target_m);
  std::vector<std::vector<long>> cols(m + 1);
  for (int q = 0; q <= m; ++q) {
    cols[q].assign(src.masks[q].size(), -1);
    for (std::size_t i = 0; i < src.masks[q].size(); ++i) {
      Mask img = 0;
      for (int v : vertices_of(src.masks[q][i])) img |= Mask{1} << alpha[v];
      if (std::popcount(img) == q + 1) cols[q][i] = static_cast<long>(tgt.index_of(img));
    }
  }
  return cols;
}

inline AdcMorphism simplicial_operator(const std::vector<int>& alpha, int target_m) {
  const auto cols = operator_columns(alpha, target_m);
  const int m = static_cast<int>(alpha.size()) - 1;
  auto src = oriental(m), tgt = oriental(target_m);
  std::vector<IntMatrix> mats;
  for (int q = 0; q <= m; ++q) {
    IntMatrix mat(tgt->rank(q), src->rank(q));
    for (std::size_t i = 0; i < cols[q].size(); ++i)
      if (cols[q][i] >= 0) mat(cols[q][i], i) = 1;
    mats.push_back(std::move(mat));
  }
  return AdcMorphism(src, tgt, std::move(mats));
}

inline AdcMorphism simplicial_operator(const std::vector<int>& alpha) {
  return simplicial_operator(alpha, alpha.empty() ? 0 : *std::max_element(alpha.begin(), alpha.end()));
}

// delta^i : [m-1] -> [m], skipping i.
inline std::vector<int> coface_map(int m, int i) {
  std::vector<int> a;
  for (int j = 0; j < m; ++j) a.push_back(j < i ? j : j + 1);
  return a;
}

// sigma^i : [m+1] -> [m], hitting i twice.
inline std::vector<int> codegeneracy_map(int m, int i) {
  std::vector<int> a;
  for (int j = 0; j <= m + 1; ++j) a.push_back(j <= i ? j : j - 1);
  return a;
}

inline std::vector<int> compose_maps(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> r;
  for (int x : inner) r.push_back(outer[x]);
  return r;
}

// x o alpha for x with source O[target_m], using precomputed operator columns.
inline AdcMorphism precompose(const AdcMorphism& x, const std::vector<std::vector<long>>& cols, int m) {
  auto src = oriental(m);
  std::vector<IntMatrix> mats;
  const auto& tgt = *x.target();
  for (int q = 0; q <= m; ++q) {
    IntMatrix mat(tgt.rank(q), src->rank(q));
    for (std::size_t i = 0; i < cols[q].size(); ++i) {
      if (cols[q][i] < 0 || q > x.source()->max_degree()) continue;
      for (std::size_t r = 0; r < tgt.rank(q); ++r) mat(r, i) = x.matrix(q)(r, cols[q][i]);
    }
    mats.push_back(std::move(mat));
  }
  return AdcMorphism(src, x.target(), std::move(mats));
}

inline AdcMorphism precompose(const AdcMorphism& x, const std::vector<int>& alpha) {
  const int target_m = x.source()->max_degree();
  return precompose(x, operator_columns(alpha, target_m), static_cast<int>(alpha.size()) - 1);
}

}  // namespace orient
