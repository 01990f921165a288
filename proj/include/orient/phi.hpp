#pragma once

#include "oriental.hpp"

namespace orient {

// O[k] (x) O[l]° with lookup from a pair of vertex masks to a basis position.
struct TensorOrientals {
  int k = 0, l = 0;
  ComplexPtr complex;    // O[k] (x) O[l]°
  ComplexPtr suspended;  // its suspension
  std::unordered_map<std::uint64_t, std::size_t> index;

  static std::uint64_t key(Mask a, Mask b) { return (std::uint64_t{b} << 32) | a; }

  // Basis position of [a] (x) [b] in degree |a|+|b|.
  std::size_t index_of(Mask a, Mask b) const { return index.at(key(a, b)); }
  std::optional<std::size_t> find(const Vertices& a, const Vertices& b) const {
    if (a.empty() || b.empty() || !strictly_increasing(a) || !strictly_increasing(b)) return std::nullopt;
    if (a.front() < 0 || a.back() > k || b.front() < 0 || b.back() > l) return std::nullopt;
    return index.at(key(mask_of(a), mask_of(b)));
  }
};

inline TensorOrientals tensor_orientals(int k, int l) {
  TensorOrientals t;
  t.k = k;
  t.l = l;
  t.complex = share(tensor(*oriental(k), total_dual(*oriental(l))));
  t.suspended = share(suspend(*t.complex));
  const auto& ok = oriental_data(k);
  const auto& ol = oriental_data(l);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= l; ++j)
      for (std::size_t a = 0; a < ok.masks[i].size(); ++a)
        for (std::size_t b = 0; b < ol.masks[j].size(); ++b) {
          const std::string lab = pair_label(ok.complex->basis(i)[a], ol.complex->basis(j)[b]);
          t.index[TensorOrientals::key(ok.masks[i][a], ol.masks[j][b])] = t.complex->index_of(i + j, lab);
        }
  return t;
}

// phi : O[k+1+l] -> Sigma(O[k] (x) O[l]°).
inline AdcMorphism phi_map(const TensorOrientals& t) {
  const int k = t.k, l = t.l, m = k + 1 + l;
  const auto& om = oriental_data(m);
  std::vector<IntMatrix> mats;
  for (int q = 0; q <= m; ++q) {
    IntMatrix mat(t.suspended->rank(q), om.complex->rank(q));
    for (std::size_t i = 0; i < om.masks[q].size(); ++i) {
      const Mask s = om.masks[q][i];
      const Mask low = s & ((Mask{1} << (k + 1)) - 1);
      const Mask high = s >> (k + 1);
      if (q == 0) {
        mat(low ? 0 : 1, i) = 1;
      } else if (low && high) {
        mat(t.index_of(low, high), i) = 1;
      }
    }
    mats.push_back(std::move(mat));
  }
  return AdcMorphism(om.complex, t.suspended, std::move(mats));
}

inline AdcMorphism phi_map(int k, int l) { return phi_map(tensor_orientals(k, l)); }

struct CheckResult {
  bool ok = true;
  std::vector<std::string> details;
  void fail(std::string d) {
    ok = false;
    details.push_back(std::move(d));
  }
  void note(std::string d) { details.push_back(std::move(d)); }
};

// A morphism of based complexes is an epimorphism when every target basis
// element is the image of some source basis element.
inline CheckResult verify_phi_epi(const AdcMorphism& f) {
  CheckResult r;
  const auto& t = *f.target();
  for (int q = 0; q <= t.max_degree(); ++q) {
    std::vector<bool> hit(t.rank(q), false);
    if (q <= f.source()->max_degree()) {
      const auto& mat = f.matrix(q);
      for (std::size_t c = 0; c < mat.cols(); ++c) {
        Vec col = mat.column(c);
        std::size_t nz = 0, pos = 0;
        for (std::size_t i = 0; i < col.size(); ++i)
          if (col[i] != 0) {
            ++nz;
            pos = i;
          }
        if (nz == 1 && col[pos] == 1) hit[pos] = true;
      }
    }
    for (std::size_t i = 0; i < hit.size(); ++i)
      if (!hit[i]) r.fail("basis element " + t.basis(q)[i] + " in degree " + std::to_string(q) + " is not hit");
  }
  return r;
}

inline CheckResult verify_phi_epi(int k, int l) { return verify_phi_epi(phi_map(k, l)); }

// Inclusion O[k] (+) O[l] -> O[k+1+l] on the vertex blocks [0,k] and [k+1,k+1+l].
inline AdcMorphism block_inclusion(int k, int l) {
  const int m = k + 1 + l;
  auto sum = share(direct_sum(*oriental(k), *oriental(l)));
  const auto& om = oriental_data(m);
  const auto& ok = oriental_data(k);
  const auto& ol = oriental_data(l);
  std::vector<IntMatrix> mats;
  for (int q = 0; q <= sum->max_degree(); ++q) {
    IntMatrix mat(om.complex->rank(q), sum->rank(q));
    std::size_t col = 0;
    for (int part = 0; part < 2; ++part) {
      const auto& od = part == 0 ? ok : ol;
      const int shift = part == 0 ? 0 : k + 1;
      if (q > od.complex->max_degree()) continue;
      for (Mask mk : od.masks[q]) mat(om.index_of(mk << shift), col++) = 1;
    }
    mats.push_back(std::move(mat));
  }
  return AdcMorphism(sum, om.complex, std::move(mats));
}

inline CheckResult verify_suspension_pushout(int k, int l) {
  CheckResult r;
  if (k < 0 || l < 0) {
    r.fail("k and l must be non-negative");
    return r;
  }
  const int m = k + 1 + l;
  const auto t = tensor_orientals(k, l);
  const AdcMorphism phi = phi_map(t);

  // (a) cardinalities.
  for (int q = 0; q <= m; ++q) {
    Int cross = 0;
    for (int i = 0; i <= q - 1; ++i) cross += binomial(k + 1, i + 1) * binomial(l + 1, q - i);
    const Int lhs = binomial(m + 1, q + 1);
    const Int rhs = binomial(k + 1, q + 1) + binomial(l + 1, q + 1) + cross;
    if (lhs != rhs) r.fail("cardinality identity fails at q=" + std::to_string(q));
    if (static_cast<Int>(oriental(m)->rank(q)) != lhs) r.fail("rank of O[m] differs from binomial at q=" + std::to_string(q));
    if (q >= 1 && static_cast<Int>(t.suspended->rank(q)) != cross)
      r.fail("rank of suspended tensor differs from cross term at q=" + std::to_string(q));
  }
  if (t.suspended->rank(0) != 2) r.fail("suspension must have two poles");

  // (b) phi is a morphism, basis-surjective, folds degree 0 and is injective off the two blocks.
  auto vm = validate_morphism(phi);
  for (const auto& v : vm.violations) r.fail("phi: " + v);
  auto epi = verify_phi_epi(phi);
  for (const auto& d : epi.details) r.fail("phi: " + d);
  const auto& om = oriental_data(m);
  for (int q = 0; q <= m; ++q) {
    std::vector<int> preimages(t.suspended->rank(q), 0);
    for (std::size_t i = 0; i < om.masks[q].size(); ++i) {
      const Mask s = om.masks[q][i];
      const bool in_low = (s >> (k + 1)) == 0;
      const bool in_high = (s & ((Mask{1} << (k + 1)) - 1)) == 0;
      const Vec col = phi.image(q, i);
      if (q == 0) {
        const std::size_t want = in_low ? 0 : 1;
        if (col[want] != 1) r.fail("fold pattern broken at vertex " + om.complex->basis(0)[i]);
        ++preimages[want];
        continue;
      }
      if (in_low || in_high) {
        if (!is_zero(col)) r.fail("block simplex " + om.complex->basis(q)[i] + " not sent to zero");
      } else {
        for (std::size_t j = 0; j < col.size(); ++j)
          if (col[j]) ++preimages[j];
      }
    }
    if (q >= 1)
      for (std::size_t j = 0; j < preimages.size(); ++j)
        if (preimages[j] != 1) r.fail("cross simplex map not bijective onto " + t.suspended->basis(q)[j]);
    if (q == 0 && (preimages[0] != k + 1 || preimages[1] != l + 1)) r.fail("degree 0 fibres have wrong size");
  }

  // (c) the square commutes through chain maps.
  const AdcMorphism top = block_inclusion(k, l);
  auto poles = share(direct_sum(*oriental(0), *oriental(0)));
  std::vector<IntMatrix> collapse_m;
  for (int q = 0; q <= top.source()->max_degree(); ++q) {
    IntMatrix mat(poles->rank(q), top.source()->rank(q));
    if (q == 0)
      for (std::size_t j = 0; j < top.source()->rank(0); ++j) mat(j < static_cast<std::size_t>(k + 1) ? 0 : 1, j) = 1;
    collapse_m.push_back(std::move(mat));
  }
  const AdcMorphism collapse(top.source(), poles, std::move(collapse_m));
  std::vector<IntMatrix> bottom_m{IntMatrix::identity(2)};
  const AdcMorphism bottom(poles, t.suspended, std::move(bottom_m));
  for (const auto* f : {&top, &collapse, &bottom}) {
    auto v = validate_morphism(*f);
    for (const auto& s : v.violations) r.fail("square arrow: " + s);
  }
  if (!(compose(phi, top) == compose(bottom, collapse))) r.fail("pushout square does not commute");
  return r;
}

}  // namespace orient
