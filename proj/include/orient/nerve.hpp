#pragma once

#include "hom_search.hpp"
#include "msset.hpp"

namespace orient {

class IncompleteEnumeration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Roberts-Street nerve of nu C up to max_dim. An m-simplex is a morphism
// O[m] -> C; it is marked when its top basis element goes to zero.
class Nerve {
 public:
  Nerve(ComplexPtr c, int max_dim, int cap = kDefaultCap) : c_(std::move(c)), max_dim_(max_dim) {
    HomSearcher searcher(c_, cap);
    MarkedSimplicialSet set;
    levels_.resize(max_dim + 1);
    for (int m = 0; m <= max_dim; ++m) {
      auto homs = searcher.enumerate(oriental(m));
      if (!homs.complete)
        throw IncompleteEnumeration("simplices of dimension " + std::to_string(m) + " could not be enumerated completely");
      auto& lv = levels_[m];
      lv.simplices = std::move(homs.morphisms);
      std::vector<std::vector<std::vector<long>>> degen_ops, face_ops;
      for (int j = 0; j < m; ++j)
        degen_ops.push_back(operator_columns(compose_maps(coface_map(m, j), codegeneracy_map(m - 1, j)), m));
      for (int i = 0; i <= m && m > 0; ++i) face_ops.push_back(operator_columns(coface_map(m, i), m));
      for (std::size_t idx = 0; idx < lv.simplices.size(); ++idx) {
        const AdcMorphism& x = lv.simplices[idx];
        lv.index.emplace(x.encoding(), idx);
        std::optional<SimplexRef> root;
        for (int j = 0; j < m && !root; ++j)
          if (precompose(x, degen_ops[j], m) == x) {
            const SimplexRef r = locate(precompose(x, face_ops[j], m - 1));
            root = SimplexRef{r.id, compose_maps(r.map, codegeneracy_map(m - 1, j))};
          }
        if (!root) {
          std::vector<SimplexRef> faces;
          for (int i = 0; i <= m && m > 0; ++i) faces.push_back(locate(precompose(x, face_ops[i], m - 1)));
          const bool marked = m > 0 && (m > c_->max_degree() || x.matrix(m).column_is_zero(0));
          const int id = set.add(m, std::move(faces), marked);
          nondeg_.push_back({m, idx});
          root = nondegenerate(id, m);
        }
        lv.roots.push_back(*root);
      }
    }
    set.set_cutoff(max_dim);
    set_ = share(std::move(set));
  }

  const ComplexPtr& complex() const { return c_; }
  int max_dim() const { return max_dim_; }
  const MssetPtr& msset() const { return set_; }

  std::size_t count(int m) const { return levels_[m].simplices.size(); }
  const std::vector<AdcMorphism>& simplices(int m) const { return levels_[m].simplices; }
  const AdcMorphism& simplex(int id) const {
    const auto [m, idx] = nondeg_[id];
    return levels_[m].simplices[idx];
  }

  // Normal form of any simplex (degenerate or not).
  SimplexRef locate(const AdcMorphism& x) const {
    const int m = x.source()->max_degree();
    auto it = levels_.at(m).index.find(x.encoding());
    if (it == levels_[m].index.end()) throw std::out_of_range("morphism is not a simplex of this nerve");
    return levels_[m].roots[it->second];
  }
  std::optional<SimplexRef> find(const AdcMorphism& x) const {
    const int m = x.source()->max_degree();
    if (m > max_dim_) return std::nullopt;
    auto it = levels_[m].index.find(x.encoding());
    if (it == levels_[m].index.end()) return std::nullopt;
    return levels_[m].roots[it->second];
  }

  // Morphism of a simplex given in normal form.
  AdcMorphism realise(const SimplexRef& s) const { return precompose(simplex(s.id), s.map); }

 private:
  struct Level {
    std::vector<AdcMorphism> simplices;
    std::vector<SimplexRef> roots;
    std::unordered_map<std::vector<Int>, std::size_t, EncodingHash> index;
  };
  ComplexPtr c_;
  int max_dim_;
  std::vector<Level> levels_;
  std::vector<std::pair<int, std::size_t>> nondeg_;
  MssetPtr set_;
};

using NervePtr = std::shared_ptr<const Nerve>;

inline NervePtr rs_nerve(const ComplexPtr& c, int max_dim, int cap = kDefaultCap) {
  return std::make_shared<const Nerve>(c, max_dim, cap);
}

// Number of vertices sent to the bottom pole, minus one.
inline int simplex_type(const AdcMorphism& x) {
  const std::size_t bot = x.target()->index_of(0, kBottom);
  int n = 0;
  for (std::size_t i = 0; i < x.source()->rank(0); ++i) n += x.matrix(0)(bot, i) == 1 ? 1 : 0;
  return n - 1;
}

inline bool totally_degenerate(const AdcMorphism& x) {
  const int m = x.source()->max_degree();
  const int k = simplex_type(x);
  return k == -1 || k == m;
}

// Sigma y : O[p+1] -> Sigma C for y : O[p] -> C, of type p.
inline AdcMorphism suspend_simplex(const AdcMorphism& y, const ComplexPtr& sc) {
  const int p = y.source()->max_degree();
  const auto& o = oriental_data(p + 1);
  const auto& op = oriental_data(p);
  const Mask apex = Mask{1} << (p + 1);
  auto x = AdcMorphism::zero(o.complex, sc);
  for (int q = 0; q <= p + 1; ++q)
    for (std::size_t i = 0; i < o.masks[q].size(); ++i) {
      const Mask s = o.masks[q][i];
      if (q == 0) {
        x.matrix(0)(s == apex ? 1 : 0, i) = 1;
      } else if (s & apex) {
        const Vec col = y.image(q - 1, op.index_of(s & ~apex));
        for (std::size_t r = 0; r < col.size(); ++r) x.matrix(q)(r, i) = col[r];
      }
    }
  return x;
}

struct Comparison {
  NervePtr base;       // N(C) up to max_dim - 1
  NervePtr suspended;  // N(Sigma C) up to max_dim
  MssetPtr sigma_base;
  MssetMap map;
  std::vector<int> lift;
};

// Sigma N(C) -> N(Sigma C).
inline Comparison comparison_inclusion(const ComplexPtr& c, int max_dim, int cap = kDefaultCap) {
  Comparison out;
  out.base = rs_nerve(c, max_dim - 1, cap);
  auto sc = share(suspend(*c));
  out.suspended = rs_nerve(sc, max_dim, cap);
  auto sig = suspend_msset_with_lift(*out.base->msset());
  out.lift = sig.lift;
  out.sigma_base = share(std::move(sig.set));
  out.map = {out.sigma_base, out.suspended->msset(), {}};
  out.map.images.assign(out.sigma_base->size(), {});
  for (int pole = 0; pole < 2; ++pole) {
    auto v = AdcMorphism::zero(oriental(0), sc);
    v.matrix(0)(pole, 0) = 1;
    out.map.images[pole] = out.suspended->locate(v);
  }
  const auto& bs = *out.base->msset();
  for (std::size_t id = 0; id < bs.size(); ++id)
    out.map.images[out.lift[id]] = out.suspended->locate(suspend_simplex(out.base->simplex(static_cast<int>(id)), sc));
  return out;
}

inline SubObject comparison_image(const Comparison& cmp) { return image_of(cmp.map); }

}  // namespace orient
