#pragma once

#include <climits>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "complex.hpp"
#include "oriental.hpp"

namespace orient {

inline constexpr int kNoCutoff = INT_MAX;

// The simplex w o map, where w is a non-degenerate simplex and map : [n] -> [dim w]
// is a monotone surjection (identity when the simplex is non-degenerate).
struct SimplexRef {
  int id = -1;
  std::vector<int> map;

  int dim() const { return static_cast<int>(map.size()) - 1; }
  bool degenerate() const {
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] != static_cast<int>(i)) return true;
    return false;
  }
  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

inline std::vector<int> identity_map(int n) {
  std::vector<int> m(n + 1);
  for (int i = 0; i <= n; ++i) m[i] = i;
  return m;
}

inline SimplexRef nondegenerate(int id, int dim) { return {id, identity_map(dim)}; }

// Degeneracy word of a surjection: the positions j with map(j) = map(j+1), decreasing.
inline std::vector<int> degeneracy_word(const std::vector<int>& map) {
  std::vector<int> w;
  for (int j = static_cast<int>(map.size()) - 2; j >= 0; --j)
    if (map[j] == map[j + 1]) w.push_back(j);
  return w;
}

inline std::vector<int> surjection_from_word(const std::vector<int>& word, int p) {
  const int n = p + static_cast<int>(word.size());
  std::vector<int> m = identity_map(n);
  int cur = n;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const int i = word[t];
    if (i < 0 || i >= cur || (t && word[t] >= word[t - 1]))
      throw StructuralError("degeneracy word is not in normal form");
    m = compose_maps(codegeneracy_map(cur - 1, i), m);
    --cur;
  }
  return m;
}

struct NdSimplex {
  int dim = 0;
  std::vector<SimplexRef> faces;
  bool marked = false;
  std::string name;
};

class MarkedSimplicialSet {
 public:
  int add(int dim, std::vector<SimplexRef> faces, bool marked, std::string name = {}) {
    if (dim < 0) throw StructuralError("negative simplex dimension");
    if (dim == 0 && !faces.empty()) throw StructuralError("vertices have no faces");
    if (dim > 0 && faces.size() != static_cast<std::size_t>(dim) + 1)
      throw StructuralError("simplex needs dim+1 faces");
    if (dim == 0 && marked) throw StructuralError("vertices cannot be marked");
    for (const auto& f : faces) {
      if (f.id < 0 || f.id >= static_cast<int>(simplices_.size())) throw StructuralError("face refers to a missing simplex");
      if (f.dim() != dim - 1) throw StructuralError("face has the wrong dimension");
      check_surjection(f.map, simplices_[f.id].dim);
    }
    const int id = static_cast<int>(simplices_.size());
    simplices_.push_back({dim, std::move(faces), marked, std::move(name)});
    if (by_dim_.size() <= static_cast<std::size_t>(dim)) by_dim_.resize(dim + 1);
    by_dim_[dim].push_back(id);
    return id;
  }

  std::size_t size() const { return simplices_.size(); }
  const NdSimplex& operator[](int id) const { return simplices_[id]; }
  void set_marked(int id, bool m) {
    if (m && simplices_[id].dim == 0) throw StructuralError("vertices cannot be marked");
    simplices_[id].marked = m;
  }
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<int>& of_dim(int d) const {
    static const std::vector<int> empty;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[d];
  }
  int cutoff() const { return cutoff_; }
  void set_cutoff(int c) { cutoff_ = c; }

  bool is_marked(const SimplexRef& s) const { return s.degenerate() || simplices_[s.id].marked; }

  // (w o sigma) o theta, normalised.
  SimplexRef act(const SimplexRef& s, const std::vector<int>& theta) const {
    std::vector<int> rho = compose_maps(s.map, theta);
    int w = s.id;
    for (;;) {
      const int p = simplices_[w].dim;
      std::vector<bool> hit(p + 1, false);
      for (int v : rho) hit[v] = true;
      int missing = -1;
      for (int j = p; j >= 0; --j)
        if (!hit[j]) {
          missing = j;
          break;
        }
      if (missing < 0) return {w, rho};
      // rho factors through delta^missing; pass to that face.
      const SimplexRef& f = simplices_[w].faces[missing];
      std::vector<int> inner;
      for (int v : rho) inner.push_back(v < missing ? v : v - 1);
      rho = compose_maps(f.map, inner);
      w = f.id;
    }
  }

  SimplexRef face(const SimplexRef& s, int i) const { return act(s, coface_map(s.dim(), i)); }
  SimplexRef face(int id, int i) const { return simplices_[id].faces[i]; }

  // Vertex ids of a simplex in order.
  std::vector<int> vertices(const SimplexRef& s) const {
    std::vector<int> v;
    for (int i = 0; i <= s.dim(); ++i) v.push_back(act(s, {i}).id);
    return v;
  }

  std::vector<std::string> check_simplicial_identities() const {
    std::vector<std::string> bad;
    for (std::size_t id = 0; id < simplices_.size(); ++id) {
      const int n = simplices_[id].dim;
      if (n < 2) continue;
      const SimplexRef y = nondegenerate(static_cast<int>(id), n);
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (!(face(face(y, j), i) == face(face(y, i), j - 1)))
            bad.push_back("d" + std::to_string(i) + "d" + std::to_string(j) + " identity fails on simplex " +
                          std::to_string(id));
    }
    return bad;
  }

 private:
  static void check_surjection(const std::vector<int>& m, int p) {
    if (m.empty() || m.front() != 0 || m.back() != p) throw StructuralError("degeneracy map is not onto");
    for (std::size_t i = 1; i < m.size(); ++i)
      if (m[i] != m[i - 1] && m[i] != m[i - 1] + 1) throw StructuralError("degeneracy map is not a surjection");
  }

  std::vector<NdSimplex> simplices_;
  std::vector<std::vector<int>> by_dim_;
  int cutoff_ = kNoCutoff;
};

using MssetPtr = std::shared_ptr<const MarkedSimplicialSet>;

inline MssetPtr share(MarkedSimplicialSet x) { return std::make_shared<const MarkedSimplicialSet>(std::move(x)); }

struct MssetMap {
  MssetPtr source, target;
  std::vector<SimplexRef> images;  // image of each non-degenerate simplex of the source

  SimplexRef apply(const SimplexRef& s) const { return target->act(images[s.id], s.map); }
};

inline ValidationReport validate_map(const MssetMap& f) {
  ValidationReport rep;
  const auto& x = *f.source;
  const auto& y = *f.target;
  if (f.images.size() != x.size()) {
    rep.add("map has the wrong number of images");
    return rep;
  }
  for (std::size_t id = 0; id < x.size(); ++id) {
    const auto& s = x[static_cast<int>(id)];
    const SimplexRef& img = f.images[id];
    if (img.id < 0 || img.id >= static_cast<int>(y.size()) || img.dim() != s.dim) {
      rep.add("image of simplex " + std::to_string(id) + " has the wrong dimension");
      continue;
    }
    for (int i = 0; i <= s.dim && s.dim > 0; ++i)
      if (!(f.apply(s.faces[i]) == y.face(img, i)))
        rep.add("map does not commute with face " + std::to_string(i) + " of simplex " + std::to_string(id));
    if (s.marked && !y.is_marked(img)) rep.add("marked simplex " + std::to_string(id) + " maps to an unmarked one");
  }
  return rep;
}

inline bool is_mono(const MssetMap& f) {
  std::set<int> seen;
  for (const auto& img : f.images)
    if (img.degenerate() || !seen.insert(img.id).second) return false;
  return true;
}

// Mono, and a simplex is marked exactly when its image is.
inline bool is_regular_inclusion(const MssetMap& f) {
  if (!is_mono(f)) return false;
  for (std::size_t id = 0; id < f.images.size(); ++id)
    if ((*f.source)[static_cast<int>(id)].marked != (*f.target)[f.images[id].id].marked) return false;
  return true;
}

inline MssetMap compose(const MssetMap& g, const MssetMap& f) {
  MssetMap h{f.source, g.target, {}};
  for (const auto& img : f.images) h.images.push_back(g.apply(img));
  return h;
}

inline MssetMap identity_map(const MssetPtr& x) {
  MssetMap f{x, x, {}};
  for (std::size_t id = 0; id < x->size(); ++id) f.images.push_back(nondegenerate(static_cast<int>(id), (*x)[static_cast<int>(id)].dim));
  return f;
}

// Standard simplex on the subsets of [m] accepted by keep, ordered by (dim, lex).
inline MarkedSimplicialSet simplex_on_subsets(int m, const std::function<bool(Mask)>& keep,
                                              const std::function<bool(Mask)>& marked) {
  MarkedSimplicialSet x;
  std::map<Mask, int> ids;
  for (int q = 0; q <= m; ++q) {
    for (Mask s : oriental_data(m).masks[q]) {
      if (!keep(s)) continue;
      std::vector<SimplexRef> faces;
      if (q > 0) {
        const Vertices v = vertices_of(s);
        for (int i = 0; i <= q; ++i) faces.push_back(nondegenerate(ids.at(s & ~(Mask{1} << v[i])), q - 1));
      }
      ids[s] = x.add(q, std::move(faces), q > 0 && marked(s), simplex_label(vertices_of(s)));
    }
  }
  return x;
}

enum class Variant { plain, prime, doubleprime };

inline std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::prime: return "prime";
    case Variant::doubleprime: return "doubleprime";
  }
  return "?";
}

inline Mask full_mask(int m) { return (Mask{1} << (m + 1)) - 1; }

inline std::function<bool(Mask)> admissible_marking(int m, int k, Variant variant) {
  if (k < 0 || k > m) throw std::out_of_range("k must lie in [0, m]");
  Mask need = 0;
  for (int v = k - 1; v <= k + 1; ++v)
    if (v >= 0 && v <= m) need |= Mask{1} << v;
  const Mask all = full_mask(m);
  return [=](Mask s) {
    if ((s & need) == need) return true;
    if (variant != Variant::plain) {
      if (k - 1 >= 0 && s == (all & ~(Mask{1} << (k - 1)))) return true;
      if (k + 1 <= m && s == (all & ~(Mask{1} << (k + 1)))) return true;
    }
    if (variant == Variant::doubleprime && s == (all & ~(Mask{1} << k))) return true;
    return false;
  };
}

inline MarkedSimplicialSet standard_simplex(int m) {
  return simplex_on_subsets(m, [](Mask) { return true; }, [](Mask) { return false; });
}

inline MarkedSimplicialSet standard(int m, int k, Variant variant = Variant::plain) {
  return simplex_on_subsets(m, [](Mask) { return true; }, admissible_marking(m, k, variant));
}

inline MarkedSimplicialSet horn(int m, int k, Variant variant = Variant::plain) {
  if (variant == Variant::doubleprime) throw std::invalid_argument("horns come in plain and prime variants");
  const Mask all = full_mask(m);
  const Mask kface = all & ~(Mask{1} << k);
  return simplex_on_subsets(
      m, [=](Mask s) { return s != all && s != kface; }, admissible_marking(m, k, variant));
}

inline MarkedSimplicialSet boundary_simplex(int m) {
  const Mask all = full_mask(m);
  return simplex_on_subsets(m, [=](Mask s) { return s != all; }, [](Mask) { return false; });
}

// Delta[m] with the top simplex marked.
inline MarkedSimplicialSet standard_trivial(int m) {
  const Mask all = full_mask(m);
  return simplex_on_subsets(m, [](Mask) { return true; }, [=](Mask s) { return s == all; });
}

inline MarkedSimplicialSet delta3_eq() {
  return simplex_on_subsets(
      3, [](Mask) { return true; },
      [](Mask s) { return std::popcount(s) >= 3 || s == mask_of({0, 2}) || s == mask_of({1, 3}); });
}

inline MarkedSimplicialSet delta3_sharp() {
  return simplex_on_subsets(3, [](Mask) { return true; }, [](Mask) { return true; });
}

// Inclusion of a sub-collection of subsets of [m] (such as a horn) into the standard simplex.
inline MssetMap subset_inclusion(const MssetPtr& sub, const MssetPtr& full) {
  std::map<std::string, int> by_name;
  for (std::size_t id = 0; id < full->size(); ++id) by_name[(*full)[static_cast<int>(id)].name] = static_cast<int>(id);
  MssetMap f{sub, full, {}};
  for (std::size_t id = 0; id < sub->size(); ++id) {
    const auto& s = (*sub)[static_cast<int>(id)];
    f.images.push_back(nondegenerate(by_name.at(s.name), s.dim));
  }
  return f;
}

inline MarkedSimplicialSet sharp(const MarkedSimplicialSet& x) {
  MarkedSimplicialSet y = x;
  for (std::size_t id = 0; id < y.size(); ++id)
    if (y[static_cast<int>(id)].dim > 0) y.set_marked(static_cast<int>(id), true);
  return y;
}

// Suspension with two cone points: ids 0 (bottom) and 1 (top), then Sigma x for
// each non-degenerate x in order. A face i <= dim x of Sigma x is Sigma(d_i x)
// (the top pole when x is a vertex); the last face is the constant bottom simplex.
struct SuspendedMsset {
  MarkedSimplicialSet set;
  std::vector<int> lift;  // lift[x] = id of Sigma x
};

inline SimplexRef suspend_ref(const SimplexRef& s, const std::vector<int>& lift) {
  std::vector<int> m = s.map;
  const int p = s.map.empty() ? -1 : s.map.back();
  m.push_back(p + 1);
  return {lift[s.id], m};
}

inline SuspendedMsset suspend_msset_with_lift(const MarkedSimplicialSet& x) {
  SuspendedMsset out;
  auto& s = out.set;
  const int bot = s.add(0, {}, false, kBottom);
  const int top = s.add(0, {}, false, kTop);
  out.lift.assign(x.size(), -1);
  for (int d = 0; d <= x.max_dim(); ++d)
    for (int id : x.of_dim(d)) {
      const auto& xs = x[id];
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= d; ++i) {
        if (d == 0)
          faces.push_back(nondegenerate(top, 0));
        else
          faces.push_back(suspend_ref(xs.faces[i], out.lift));
      }
      faces.push_back({bot, std::vector<int>(d + 1, 0)});
      out.lift[id] = s.add(d + 1, std::move(faces), xs.marked, xs.name);
    }
  if (x.cutoff() != kNoCutoff) s.set_cutoff(x.cutoff() + 1);
  return out;
}

inline MarkedSimplicialSet suspend_msset(const MarkedSimplicialSet& x) { return suspend_msset_with_lift(x).set; }

inline MssetMap suspend_map(const MssetMap& f, const MssetPtr& sigma_source, const MssetPtr& sigma_target) {
  auto ls = suspend_msset_with_lift(*f.source).lift;
  auto lt = suspend_msset_with_lift(*f.target).lift;
  MssetMap g{sigma_source, sigma_target, {}};
  g.images.assign(sigma_source->size(), {});
  g.images[0] = nondegenerate(0, 0);
  g.images[1] = nondegenerate(1, 0);
  for (std::size_t id = 0; id < f.images.size(); ++id) g.images[ls[id]] = suspend_ref(f.images[id], lt);
  return g;
}

// Cartesian product; a simplex (x o s, y o t) is non-degenerate when (s, t) is
// jointly injective, and marked when both projections are marked or degenerate.
struct ProductMsset {
  MarkedSimplicialSet set;
  std::vector<std::pair<SimplexRef, SimplexRef>> components;
};

inline ProductMsset product_with_projections(const MarkedSimplicialSet& x, const MarkedSimplicialSet& y,
                                             int max_dim = kNoCutoff) {
  ProductMsset out;
  std::map<std::pair<SimplexRef, SimplexRef>, int> ids;
  const int top = std::min({max_dim, x.cutoff() == kNoCutoff ? kNoCutoff : x.cutoff(),
                            y.cutoff() == kNoCutoff ? kNoCutoff : y.cutoff(), x.max_dim() + y.max_dim()});
  // Monotone surjections [n] -> [p], listed once per (n, p).
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> surj;
  auto surjections = [&](int n, int p) -> const std::vector<std::vector<int>>& {
    auto key = std::make_pair(n, p);
    auto it = surj.find(key);
    if (it != surj.end()) return it->second;
    std::vector<std::vector<int>> all;
    // choose the p positions j in [0, n-1] where map(j+1) = map(j) + 1
    for (Mask steps = 0; steps < (Mask{1} << n); ++steps) {
      if (std::popcount(steps) != p) continue;
      std::vector<int> m{0};
      for (int j = 0; j < n; ++j) m.push_back(m.back() + ((steps >> j) & 1));
      all.push_back(std::move(m));
    }
    return surj.emplace(key, std::move(all)).first->second;
  };
  auto normalise = [&](const SimplexRef& a, const SimplexRef& b) -> SimplexRef {
    // Collapse consecutive repeated pairs.
    std::vector<int> rho{0};
    SimplexRef na{a.id, {a.map[0]}}, nb{b.id, {b.map[0]}};
    for (std::size_t i = 1; i < a.map.size(); ++i) {
      if (a.map[i] == a.map[i - 1] && b.map[i] == b.map[i - 1]) {
        rho.push_back(rho.back());
      } else {
        rho.push_back(rho.back() + 1);
        na.map.push_back(a.map[i]);
        nb.map.push_back(b.map[i]);
      }
    }
    return {ids.at({na, nb}), rho};
  };
  for (int n = 0; n <= top; ++n)
    for (int p = 0; p <= std::min(n, x.max_dim()); ++p)
      for (int q = std::max(0, n - p); q <= std::min(n, y.max_dim()); ++q) {
        if (x.of_dim(p).empty() || y.of_dim(q).empty()) continue;
        for (const auto& s : surjections(n, p))
          for (const auto& t : surjections(n, q)) {
            bool injective = true;
            for (int i = 0; i < n && injective; ++i)
              if (s[i] == s[i + 1] && t[i] == t[i + 1]) injective = false;
            if (!injective) continue;
            for (int xa : x.of_dim(p))
              for (int yb : y.of_dim(q)) {
                SimplexRef a{xa, s}, b{yb, t};
                std::vector<SimplexRef> faces;
                for (int i = 0; i <= n && n > 0; ++i)
                  faces.push_back(normalise(x.face(a, i), y.face(b, i)));
                const bool marked = n > 0 && x.is_marked(a) && y.is_marked(b);
                const std::string name = "(" + x[xa].name + "," + y[yb].name + ")";
                const int id = out.set.add(n, std::move(faces), marked, name);
                ids[{a, b}] = id;
                out.components.emplace_back(a, b);
              }
          }
      }
  if (top != x.max_dim() + y.max_dim()) out.set.set_cutoff(top);
  return out;
}

inline MarkedSimplicialSet product(const MarkedSimplicialSet& x, const MarkedSimplicialSet& y, int max_dim = kNoCutoff) {
  return product_with_projections(x, y, max_dim).set;
}

// Pushout of a mono f : A -> X and any g : A -> Y. Simplices of Y come first,
// then the simplices of X outside the image of f.
struct Pushout {
  MssetPtr object;
  MssetMap from_x, from_y;
  std::vector<int> x_new;  // x_new[id of X] = id in the pushout, or -1 when in the image of f
};

inline Pushout pushout(const MssetMap& f, const MssetMap& g) {
  if (f.source != g.source && f.source->size() != g.source->size())
    throw StructuralError("pushout legs must share their source");
  if (f.images.size() != f.source->size() || g.images.size() != g.source->size())
    throw StructuralError("pushout leg does not cover its source");
  if (!is_mono(f)) throw std::invalid_argument("pushout requires the first leg to be a monomorphism");
  const auto& a = *f.source;
  const auto& x = *f.target;
  const auto& y = *g.target;
  MarkedSimplicialSet p;
  for (std::size_t id = 0; id < y.size(); ++id) {
    const auto& s = y[static_cast<int>(id)];
    p.add(s.dim, s.faces, s.marked, s.name);
  }
  std::vector<int> preimage(x.size(), -1);
  for (std::size_t id = 0; id < a.size(); ++id) preimage[f.images[id].id] = static_cast<int>(id);
  // A simplex of Y becomes marked when some marked simplex of X restricts to it.
  for (std::size_t id = 0; id < x.size(); ++id) {
    const int pa = preimage[id];
    if (pa < 0 || !x[static_cast<int>(id)].marked) continue;
    const SimplexRef& img = g.images[pa];
    if (!img.degenerate() && !p[img.id].marked) p.set_marked(img.id, true);
  }
  std::vector<int> x_new(x.size(), -1);
  auto lift = [&](const SimplexRef& s) -> SimplexRef {
    const int pa = preimage[s.id];
    if (pa >= 0) return p.act(g.images[pa], s.map);
    return {x_new[s.id], s.map};
  };
  for (int d = 0; d <= x.max_dim(); ++d)
    for (int id : x.of_dim(d)) {
      if (preimage[id] >= 0) continue;
      const auto& s = x[id];
      std::vector<SimplexRef> faces;
      for (const auto& fc : s.faces) faces.push_back(lift(fc));
      x_new[id] = p.add(d, std::move(faces), s.marked, s.name);
    }
  p.set_cutoff(std::min({x.cutoff(), y.cutoff(), a.cutoff()}));
  Pushout out;
  out.x_new = x_new;
  out.from_x.source = f.target;
  for (std::size_t id = 0; id < x.size(); ++id)
    out.from_x.images.push_back(lift(nondegenerate(static_cast<int>(id), x[static_cast<int>(id)].dim)));
  out.object = share(std::move(p));
  out.from_x.target = out.object;
  out.from_y = {g.target, out.object, {}};
  for (std::size_t id = 0; id < y.size(); ++id)
    out.from_y.images.push_back(nondegenerate(static_cast<int>(id), y[static_cast<int>(id)].dim));
  return out;
}

// The map out of a pushout induced by maps out of X and Y.
inline MssetMap induced_map(const Pushout& po, const MssetMap& hx, const MssetMap& hy) {
  MssetMap h{po.object, hy.target, {}};
  h.images.assign(po.object->size(), {});
  for (std::size_t id = 0; id < hy.images.size(); ++id) h.images[id] = hy.images[id];
  for (std::size_t id = 0; id < po.x_new.size(); ++id)
    if (po.x_new[id] >= 0) h.images[po.x_new[id]] = hx.images[id];
  return h;
}

// Bijective on non-degenerate simplices with matching marking.
inline bool is_isomorphism(const MssetMap& f) {
  return is_regular_inclusion(f) && f.images.size() == f.target->size();
}

// A subset of the non-degenerate simplices of an ambient set.
struct SubObject {
  MssetPtr ambient;
  std::vector<char> member;

  std::size_t count() const { return static_cast<std::size_t>(std::count(member.begin(), member.end(), 1)); }
  bool contains(int id) const { return member[id] != 0; }
  friend bool operator==(const SubObject& a, const SubObject& b) { return a.member == b.member; }
};

inline SubObject empty_subobject(const MssetPtr& ambient) { return {ambient, std::vector<char>(ambient->size(), 0)}; }

// Close under faces; marking is inherited from the ambient set.
inline SubObject smallest_regular_containing(const MssetPtr& ambient, const std::vector<int>& seeds,
                                             SubObject start) {
  std::deque<int> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    const int id = todo.front();
    todo.pop_front();
    if (start.member[id]) continue;
    start.member[id] = 1;
    for (const auto& f : (*ambient)[id].faces)
      if (!start.member[f.id]) todo.push_back(f.id);
  }
  return start;
}

inline SubObject smallest_regular_containing(const MssetPtr& ambient, const std::vector<int>& seeds) {
  return smallest_regular_containing(ambient, seeds, empty_subobject(ambient));
}

inline bool closed_under_faces(const SubObject& s) {
  for (std::size_t id = 0; id < s.member.size(); ++id)
    if (s.member[id])
      for (const auto& f : (*s.ambient)[static_cast<int>(id)].faces)
        if (!s.member[f.id]) return false;
  return true;
}

struct Materialised {
  MssetPtr set;
  MssetMap inclusion;
  std::vector<int> local;  // ambient id -> local id or -1
};

inline Materialised materialise(const SubObject& s) {
  MarkedSimplicialSet out;
  std::vector<int> local(s.member.size(), -1);
  std::vector<int> order;
  for (std::size_t id = 0; id < s.member.size(); ++id)
    if (s.member[id]) order.push_back(static_cast<int>(id));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return (*s.ambient)[a].dim < (*s.ambient)[b].dim; });
  for (int id : order) {
    const auto& sx = (*s.ambient)[id];
    std::vector<SimplexRef> faces;
    for (const auto& f : sx.faces) {
      if (local[f.id] < 0) throw StructuralError("sub-object is not closed under faces");
      faces.push_back({local[f.id], f.map});
    }
    local[id] = out.add(sx.dim, std::move(faces), sx.marked, sx.name);
  }
  out.set_cutoff(s.ambient->cutoff());
  Materialised m;
  m.set = share(std::move(out));
  m.local = local;
  m.inclusion = {m.set, s.ambient, {}};
  for (int id : order) m.inclusion.images.push_back(nondegenerate(id, (*s.ambient)[id].dim));
  return m;
}

// The image of a map as a sub-object of its target (the target's own marking).
inline SubObject image_of(const MssetMap& f) {
  SubObject s = empty_subobject(f.target);
  std::vector<int> seeds;
  for (const auto& img : f.images) seeds.push_back(img.id);
  return smallest_regular_containing(f.target, seeds, s);
}

}  // namespace orient
