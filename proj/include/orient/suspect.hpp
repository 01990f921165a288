#pragma once

#include "fault.hpp"
#include "nerve.hpp"
#include "phi.hpp"

namespace orient {

namespace detail {

inline Mask range_mask(int lo, int hi) {
  if (hi < lo) return 0;
  return ((Mask{1} << (hi + 1)) - 1) & ~((Mask{1} << lo) - 1);
}

// Every submask of m, the empty one included.
template <class F>
void for_submasks(Mask m, F&& f) {
  for (Mask s = m;; s = (s - 1) & m) {
    f(s);
    if (s == 0) break;
  }
}

inline int pop(Mask m) { return std::popcount(m); }
inline int top_bit(Mask m) { return 31 - std::countl_zero(m); }
inline int low_bit(Mask m) { return std::countr_zero(m); }

// Image of a vertex set under the codegeneracy [n+1] -> [n] hitting j twice; empty if it collapses.
inline std::optional<Mask> codegeneracy_image(Mask c, int j) {
  if ((c >> j & 1) && (c >> (j + 1) & 1)) return std::nullopt;
  const Mask low = c & ((Mask{1} << (j + 1)) - 1);
  return low | ((c >> (j + 1)) << j);
}

// Inverse of the coface skipping r, for sets avoiding r.
inline Mask close_gap(Mask c, int r) { return (c & ((Mask{1} << r) - 1)) | ((c >> (r + 1)) << r); }

}  // namespace detail

// A simplex x : O[m] -> Sigma C of type k read as x : O[k] (x) O[l]° -> C.
class TensorView {
 public:
  explicit TensorView(const AdcMorphism& x)
      : x_(&x), m_(x.source()->max_degree()), k_(simplex_type(x)), l_(m_ - k_ - 1) {}

  int dim() const { return m_; }
  int type() const { return k_; }
  int l() const { return l_; }
  const AdcMorphism& simplex() const { return *x_; }

  // Zero chain of C in degree d.
  Vec zero(int d) const { return Vec(x_->target()->rank(d + 1), 0); }

  // x([a] (x) [b]) as a chain of C in degree |a|+|b|.
  Vec value(Mask a, Mask b) const {
    const int d = detail::pop(a) + detail::pop(b) - 2;
    if (!a || !b) throw std::logic_error("empty vertex set");
    if (d + 1 > x_->target()->max_degree()) return {};
    return x_->image(d + 1, oriental_data(m_).index_of(a | (b << (k_ + 1))));
  }
  bool vanishes(Mask a, Mask b) const { return is_zero(value(a, b)); }

 private:
  const AdcMorphism* x_;
  int m_, k_, l_;
};

// Build O[k+1+l] -> Sigma C from tensor values indexed by (a, b).
inline AdcMorphism from_tensor_values(int k, int l, const ComplexPtr& sc, const std::function<Vec(Mask, Mask)>& value) {
  const int m = k + 1 + l;
  const auto& o = oriental_data(m);
  const Mask lowmask = detail::range_mask(0, k);
  auto x = AdcMorphism::zero(o.complex, sc);
  for (int q = 0; q <= m; ++q)
    for (std::size_t i = 0; i < o.masks[q].size(); ++i) {
      const Mask s = o.masks[q][i];
      const Mask a = s & lowmask, b = s >> (k + 1);
      if (q == 0) {
        x.matrix(0)(a ? 0 : 1, i) = 1;
      } else if (a && b && q <= sc->max_degree()) {
        const Vec v = value(a, b);
        for (std::size_t r = 0; r < v.size(); ++r) x.matrix(q)(r, i) = v[r];
      }
    }
  return x;
}

// The same values as a morphism O[k] (x) O[l]° -> C.
inline AdcMorphism tensor_morphism(int k, int l, const ComplexPtr& c, const std::function<Vec(Mask, Mask)>& value) {
  const auto t = tensor_orientals(k, l);
  const auto& ok = oriental_data(k);
  const auto& ol = oriental_data(l);
  auto f = AdcMorphism::zero(t.complex, c);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= l; ++j) {
      if (i + j > c->max_degree()) continue;
      for (Mask a : ok.masks[i])
        for (Mask b : ol.masks[j]) {
          const Vec v = value(a, b);
          const std::size_t col = t.index_of(a, b);
          for (std::size_t r = 0; r < v.size(); ++r) f.matrix(i + j)(r, col) = v[r];
        }
    }
  return f;
}

inline bool structurally_degenerate_at(const AdcMorphism& x, int i) {
  const int m = x.source()->max_degree();
  return precompose(x, compose_maps(coface_map(m, i), codegeneracy_map(m - 1, i))) == x;
}

inline std::vector<int> structural_degeneracies(const AdcMorphism& x) {
  std::vector<int> out;
  for (int i = 0; i < x.source()->max_degree(); ++i)
    if (structurally_degenerate_at(x, i)) out.push_back(i);
  return out;
}

// Conditions (SuspInd 1) and (SuspInd 2) at r.
inline bool suspect_conditions_hold(const TensorView& v, int r) {
  using namespace detail;
  const int k = v.type(), l = v.l();
  bool ok = true;
  for_submasks(range_mask(0, r - 1), [&](Mask a1) {
    if (!ok || !a1) return;
    for_submasks(range_mask(r, k), [&](Mask a) {
      if (!ok || !a) return;
      for_submasks(range_mask(1, l), [&](Mask b) {
        if (ok && b && !v.vanishes(a1 | a, b | 1)) ok = false;
      });
    });
  });
  for_submasks(range_mask(r, k), [&](Mask a) {
    if (!ok || !a) return;
    for_submasks(range_mask(0, l), [&](Mask b) {
      if (ok && pop(b) >= 2 && !v.vanishes(a, b)) ok = false;
    });
  });
  return ok;
}

// Minimal r in [0, k] satisfying both conditions, k+1 if none. Undefined (nullopt) when l = 0.
inline std::optional<int> suspect_index(const TensorView& v) {
  if (v.type() < 0 || v.l() < 0) throw std::invalid_argument("suspect index of a totally degenerate simplex");
  if (v.l() == 0) return std::nullopt;
  for (int r = 0; r <= v.type(); ++r)
    if (suspect_conditions_hold(v, r)) return r;
  return v.type() + 1;
}
inline std::optional<int> suspect_index(const AdcMorphism& x) { return suspect_index(TensorView(x)); }

// Vanishing form: y([a', r-1, r, a] (x) [0]) = 0.
inline bool is_suspect(const TensorView& v, std::optional<int> r) {
  using namespace detail;
  if (!r || *r < 1 || *r > v.type()) return false;
  bool ok = true;
  const Mask pair = (Mask{1} << (*r - 1)) | (Mask{1} << *r);
  for_submasks(range_mask(0, *r - 2), [&](Mask a1) {
    for_submasks(range_mask(*r + 1, v.type()), [&](Mask a) {
      if (ok && !v.vanishes(a1 | pair | a, 1)) ok = false;
    });
  });
  return ok;
}

// Degeneracy form: the restriction to vertices 0..k+1 is degenerate at r-1.
inline bool is_suspect_structural(const TensorView& v, std::optional<int> r) {
  if (!r || *r < 1 || *r > v.type()) return false;
  std::vector<int> onto(v.type() + 2);
  for (int i = 0; i <= v.type() + 1; ++i) onto[i] = i;
  const AdcMorphism z = precompose(v.simplex(), onto);
  return structurally_degenerate_at(z, *r - 1);
}

// Degeneracy at i read off from vanishing conditions; i = k never holds.
inline bool criterion_degenerate_at(const TensorView& v, int i) {
  using namespace detail;
  const int k = v.type(), l = v.l();
  bool ok = true;
  if (i <= k - 1) {
    const Mask pair = (Mask{1} << i) | (Mask{1} << (i + 1));
    for_submasks(range_mask(0, i - 1), [&](Mask a1) {
      for_submasks(range_mask(i + 2, k), [&](Mask a) {
        for_submasks(range_mask(0, l), [&](Mask b) {
          if (ok && b && !v.vanishes(a1 | pair | a, b)) ok = false;
        });
      });
    });
    return ok;
  }
  if (i == k) return false;
  const int j = i - (k + 1);
  const Mask pair = (Mask{1} << j) | (Mask{1} << (j + 1));
  for_submasks(range_mask(0, k), [&](Mask a) {
    if (!a) return;
    for_submasks(range_mask(0, j - 1), [&](Mask b1) {
      for_submasks(range_mask(j + 2, l), [&](Mask b) {
        if (ok && !v.vanishes(a, b1 | pair | b)) ok = false;
      });
    });
  });
  return ok;
}

// ---- the parent construction ----

enum class Clause { p1 = 1, p2, p3, p4, p5, p6, p7 };

// Which of the seven patterns a basis element [c] (x) [b] of O[k+1] (x) O[l]° falls under.
inline std::vector<Clause> matching_clauses(Mask c, Mask b, int r) {
  using namespace detail;
  const bool has_r = c >> r & 1;
  const Mask below = c & range_mask(0, r - 1);
  const Mask above = c & ~range_mask(0, r);
  const int nb = pop(b);
  std::vector<Clause> out;
  auto test = [&](Clause cl, bool hit) {
    if (hit && !fault::omits_clause(static_cast<int>(cl))) out.push_back(cl);
  };
  test(Clause::p1, !has_r);
  test(Clause::p2, has_r && !below && nb == 1);
  test(Clause::p3, has_r && below && !above && nb >= 2);
  test(Clause::p4, has_r && below && !above && nb == 1);
  test(Clause::p5, has_r && below && above && nb == 1);
  test(Clause::p6, has_r && above && nb >= 2);
  test(Clause::p7, c == (Mask{1} << r) && nb >= 2);
  return out;
}

// Value prescribed by a clause, computed from x of type k and suspect index r.
inline Vec clause_value(Clause cl, const TensorView& x, int r, Mask c, Mask b) {
  using namespace detail;
  const int d = pop(c) + pop(b) - 2;
  const Mask rbit = Mask{1} << r;
  auto add = [](Vec u, const Vec& w) {
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += w[i];
    return u;
  };
  switch (cl) {
    case Clause::p1: return x.value(close_gap(c, r), b);
    case Clause::p2:
    case Clause::p5: {
      auto s = codegeneracy_image(c, r - 1);
      return s ? x.value(*s, 1) : x.zero(d);
    }
    case Clause::p3: return (b & 1) ? x.zero(d) : x.value(c & ~rbit, b | 1);
    case Clause::p4: {
      Vec v = (b & 1) ? x.zero(d) : x.value(c & ~rbit, b | 1);
      const Mask a1 = c & ~rbit;
      if (!(a1 >> (r - 1) & 1)) v = add(v, x.value(a1 | (Mask{1} << (r - 1)), 1));
      return v;
    }
    case Clause::p6:
    case Clause::p7: return x.zero(d);
  }
  return x.zero(d);
}

inline std::string tensor_label(Mask c, Mask b) {
  return simplex_label(vertices_of(c)) + "|" + simplex_label(vertices_of(b));
}

struct ParentResult {
  std::optional<AdcMorphism> simplex;  // O[m+1] -> Sigma C
  std::optional<AdcMorphism> tensor;   // O[k+1] (x) O[l]° -> C
  int r = 0;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

// Values of every basis element of O[k+1] (x) O[l]° under the clauses, recording coverage failures.
inline std::map<std::pair<Mask, Mask>, Vec> clause_table(const TensorView& x, int r, std::vector<std::string>& errors,
                                                       std::map<std::pair<Mask, Mask>, Clause>* which = nullptr) {
  std::map<std::pair<Mask, Mask>, Vec> vals;
  const auto& ok = oriental_data(x.type() + 1);
  const auto& ol = oriental_data(x.l());
  for (const auto& cs : ok.masks)
    for (Mask c : cs)
      for (const auto& bs : ol.masks)
        for (Mask b : bs) {
          auto hits = matching_clauses(c, b, r);
          if (hits.size() != 1) {
            errors.push_back("clause coverage: " + tensor_label(c, b) + " matched by " + std::to_string(hits.size()) +
                             " clauses");
            continue;
          }
          if (which) (*which)[{c, b}] = hits[0];
          vals[{c, b}] = clause_value(hits[0], x, r, c, b);
        }
  return vals;
}

// Parent of a non-degenerate, non-suspect x with l >= 1 and suspect index r >= 1.
inline ParentResult parent(const AdcMorphism& xs, const ComplexPtr& c) {
  ParentResult res;
  const TensorView x(xs);
  if (x.type() < 0 || x.l() < 1) {
    res.errors.push_back("parent needs type >= 0 and l >= 1");
    return res;
  }
  const auto r = suspect_index(x);
  if (!r || *r < 1) {
    res.errors.push_back("parent needs suspect index >= 1");
    return res;
  }
  if (is_suspect(x, r)) {
    res.errors.push_back("parent of a suspect simplex");
    return res;
  }
  res.r = *r;
  auto vals = clause_table(x, *r, res.errors);
  if (!res.ok()) return res;
  auto lookup = [&](Mask a, Mask b) { return vals.at({a, b}); };
  auto t = tensor_morphism(x.type() + 1, x.l(), c, lookup);
  auto v = validate_morphism(t);
  for (const auto& e : v.violations) res.errors.push_back("parent is not a chain map: " + e);
  res.tensor = std::move(t);
  res.simplex = from_tensor_values(x.type() + 1, x.l(), xs.target(), lookup);
  return res;
}

// (S1)-(S7): the values of a suspect y against its face d_r y.
// This form takes r as given.
inline CheckResult enforced_values_check(const AdcMorphism& ys, int r) {
  CheckResult res;
  const TensorView y(ys);
  const AdcMorphism face = precompose(ys, coface_map(y.dim(), r));
  const TensorView x(face);
  std::vector<std::string> errors;
  std::map<std::pair<Mask, Mask>, Clause> which;
  auto vals = clause_table(x, r, errors, &which);
  for (auto& e : errors) res.fail(e);
  for (const auto& [key, val] : vals) {
    const Vec actual = y.value(key.first, key.second);
    if (actual != val)
      res.fail("S" + std::to_string(static_cast<int>(which[key])) + " fails at " + tensor_label(key.first, key.second));
  }
  return res;
}

inline CheckResult enforced_values_check(const AdcMorphism& ys) {
  const TensorView y(ys);
  const auto r = suspect_index(y);
  if (!is_suspect(y, r)) {
    CheckResult res;
    res.fail("not a suspect simplex");
    return res;
  }
  return enforced_values_check(ys, *r);
}

// ---- whole-nerve analysis ----

struct SuspectProfile {
  int id = -1;
  int dim = 0;
  int type = 0;
  std::optional<int> index;  // nullopt when l = 0 or totally degenerate
  bool suspect = false;
  bool totally_degenerate = false;
};

inline SuspectProfile profile_of(const AdcMorphism& x, int id = -1) {
  SuspectProfile p;
  p.id = id;
  p.dim = x.source()->max_degree();
  p.type = simplex_type(x);
  p.totally_degenerate = p.type == -1 || p.type == p.dim;
  if (p.totally_degenerate) return p;
  const TensorView v(x);
  p.index = suspect_index(v);
  p.suspect = is_suspect(v, p.index);
  return p;
}

class SuspectAnalysis {
 public:
  SuspectAnalysis(ComplexPtr c, NervePtr nerve) : c_(std::move(c)), n_(std::move(nerve)) {
    const auto& set = *n_->msset();
    profiles_.reserve(set.size());
    for (std::size_t id = 0; id < set.size(); ++id)
      profiles_.push_back(profile_of(n_->simplex(static_cast<int>(id)), static_cast<int>(id)));
  }

  const ComplexPtr& base() const { return c_; }
  const NervePtr& nerve() const { return n_; }
  const SuspectProfile& profile(int id) const { return profiles_[id]; }
  const std::vector<SuspectProfile>& profiles() const { return profiles_; }

  // Non-degenerate simplices outside the suspension image (l >= 1).
  bool in_complement(int id) const {
    const auto& p = profiles_[id];
    return !p.totally_degenerate && p.type <= p.dim - 2;
  }
  bool eligible_for_parent(int id) const { return in_complement(id) && !profiles_[id].suspect; }

 private:
  ComplexPtr c_;
  NervePtr n_;
  std::vector<SuspectProfile> profiles_;
};

struct SuspectReport {
  Verdict verdict = Verdict::pass;
  std::size_t suspect_count = 0, nonsuspect_count = 0, checked = 0;
  std::vector<std::string> details;
  void fail(std::string d) {
    verdict = Verdict::fail;
    if (details.size() < 50) details.push_back(std::move(d));
  }
};

inline std::string simplex_name(const SuspectProfile& p) {
  return "#" + std::to_string(p.id) + " (dim " + std::to_string(p.dim) + ", type " + std::to_string(p.type) + ")";
}

// Complement of the suspension image: types 0..m-2 and suspect index 1..k+1.
inline SuspectReport check_complement_description(const Comparison& cmp, const SuspectAnalysis& an, int max_dim) {
  SuspectReport rep;
  auto img = comparison_image(cmp);
  const auto& set = *an.nerve()->msset();
  for (int d = 1; d <= max_dim; ++d)
    for (int id : set.of_dim(d)) {
      const auto& p = an.profile(id);
      ++rep.checked;
      const bool image_type = p.type == d - 1;
      if (img.contains(id) != image_type) rep.fail("image membership disagrees with type for " + simplex_name(p));
      if (img.contains(id)) continue;
      if (p.type < 0 || p.type > d - 2) rep.fail("complement simplex of unexpected type " + simplex_name(p));
      if (!p.index || *p.index < 1 || *p.index > p.type + 1) rep.fail("complement simplex of suspect index out of range " + simplex_name(p));
    }
  return rep;
}

// Criterion for degeneracy against x = s_i d_i x, on every simplex up to max_dim.
inline SuspectReport check_degeneracy_criterion(const Nerve& n, int max_dim) {
  SuspectReport rep;
  for (int m = 1; m <= std::min(max_dim, n.max_dim()); ++m)
    for (const auto& x : n.simplices(m)) {
      if (totally_degenerate(x)) continue;
      const TensorView v(x);
      for (int i = 0; i < m; ++i) {
        ++rep.checked;
        if (criterion_degenerate_at(v, i) != structurally_degenerate_at(x, i))
          rep.fail("criterion disagrees at i=" + std::to_string(i) + " on a simplex of dim " + std::to_string(m) +
                   " type " + std::to_string(v.type()));
      }
      if (v.l() >= 1) {
        const auto r = suspect_index(v);
        ++rep.checked;
        if (is_suspect(v, r) != is_suspect_structural(v, r))
          rep.fail("the two suspect characterisations disagree on a simplex of dim " + std::to_string(m));
      }
    }
  return rep;
}

// The r-th face and the parent are mutually inverse between suspect (m+1)-simplices
// and non-suspect m-simplices of the complement, for m <= max_dim - 1.
inline SuspectReport check_bijection(const SuspectAnalysis& an, int max_dim) {
  SuspectReport rep;
  const Nerve& n = *an.nerve();
  const auto& set = *n.msset();
  const int top = std::min(max_dim, n.max_dim());
  for (int m = 1; m + 1 <= top; ++m) {
    for (int id : set.of_dim(m)) {
      if (!an.eligible_for_parent(id)) continue;
      const auto& p = an.profile(id);
      ++rep.nonsuspect_count;
      ++rep.checked;
      if (*p.index < 1) {
        rep.fail("non-degenerate complement simplex of suspect index 0 " + simplex_name(p));
        continue;
      }
      auto par = parent(n.simplex(id), an.base());
      if (!par.ok()) {
        for (auto& e : par.errors) rep.fail(simplex_name(p) + ": " + e);
        continue;
      }
      auto loc = n.find(*par.simplex);
      if (!loc) {
        rep.fail("parent of " + simplex_name(p) + " is not a simplex");
        continue;
      }
      if (loc->degenerate()) rep.fail("parent of " + simplex_name(p) + " is degenerate");
      const auto& pp = an.profile(loc->id);
      if (!pp.suspect || pp.index != p.index || pp.type != p.type + 1 || pp.dim != m + 1)
        rep.fail("parent of " + simplex_name(p) + " has the wrong features");
      if (!(precompose(*par.simplex, coface_map(m + 1, par.r)) == n.simplex(id)))
        rep.fail("d_r of the parent differs from " + simplex_name(p));
    }
    for (int id : set.of_dim(m + 1)) {
      const auto& p = an.profile(id);
      if (!an.in_complement(id) || !p.suspect) continue;
      ++rep.suspect_count;
      ++rep.checked;
      const AdcMorphism y = n.simplex(id);
      const AdcMorphism face = precompose(y, coface_map(m + 1, *p.index));
      const SimplexRef f = n.locate(face);
      if (f.degenerate()) {
        rep.fail("d_r of " + simplex_name(p) + " is degenerate");
        continue;
      }
      const auto& fp = an.profile(f.id);
      if (fp.suspect || fp.index != p.index || fp.type != p.type - 1) rep.fail("d_r of " + simplex_name(p) + " has the wrong features");
      if (!an.eligible_for_parent(f.id)) continue;
      auto par = parent(face, an.base());
      if (!par.ok() || !(*par.simplex == y)) rep.fail("parent of d_r differs from " + simplex_name(p));
      auto enf = enforced_values_check(y);
      if (!enf.ok) rep.fail("enforced values fail on " + simplex_name(p) + ": " + enf.details.front());
    }
  }
  if (rep.suspect_count != rep.nonsuspect_count) rep.fail("the two sides have different sizes");
  return rep;
}

// Faces of non-degenerate suspect simplices obey (Face 1)-(Face 4).
inline SuspectReport check_face_classification(const SuspectAnalysis& an, int max_dim) {
  SuspectReport rep;
  const Nerve& n = *an.nerve();
  const auto& set = *n.msset();
  for (int d = 2; d <= std::min(max_dim, n.max_dim()); ++d)
    for (int id : set.of_dim(d)) {
      const auto& p = an.profile(id);
      if (!an.in_complement(id) || !p.suspect) continue;
      ++rep.suspect_count;
      const int r = *p.index;
      const int k = p.type - 1;  // y has type k+1
      for (int i = 0; i <= d; ++i) {
        const SimplexRef f = n.locate(precompose(n.simplex(id), coface_map(d, i)));
        if (f.degenerate()) continue;
        ++rep.checked;
        const auto& fp = an.profile(f.id);
        bool ok = true;
        if (i <= r - 1) {
          ok = fp.index && *fp.index <= r - 1;
        } else if (i == r) {
          ok = !fp.suspect && fp.index == r && fp.type == k;
        } else if (i <= k + 1) {
          ok = fp.index && (*fp.index <= r - 1 || (fp.suspect && *fp.index == r));
        } else {
          ok = fp.type == k + 1;
        }
        if (!ok) rep.fail("face " + std::to_string(i) + " of " + simplex_name(p) + " breaks the classification");
      }
    }
  return rep;
}

}  // namespace orient
