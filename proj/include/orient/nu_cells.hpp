#pragma once

#include <map>
#include <set>

#include "hom_search.hpp"

namespace orient {

// An n-cell of nu C: rows x^-_0..x^-_n and x^+_0..x^+_n with x^-_n = x^+_n.
struct SteinerTable {
  int dim = 0;
  std::vector<Vec> minus, plus;

  const Vec& top() const { return minus[dim]; }
  friend bool operator==(const SteinerTable&, const SteinerTable&) = default;
  friend auto operator<=>(const SteinerTable& a, const SteinerTable& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    if (auto c = a.minus <=> b.minus; c != 0) return c;
    return a.plus <=> b.plus;
  }
};

inline ValidationReport validate_table(const BasedComplex& c, const SteinerTable& x) {
  ValidationReport rep;
  const int n = x.dim;
  if (n < 0 || x.minus.size() != static_cast<std::size_t>(n) + 1 || x.plus.size() != x.minus.size()) {
    rep.add("table-shape");
    return rep;
  }
  for (int p = 0; p <= n; ++p)
    for (const auto* row : {&x.minus, &x.plus}) {
      if ((*row)[p].size() != c.rank(p)) {
        rep.add("entry-length at p=" + std::to_string(p));
        return rep;
      }
      for (Int v : (*row)[p])
        if (v < 0) rep.add("negative-entry at p=" + std::to_string(p));
    }
  if (x.minus[n] != x.plus[n]) rep.add("top-entries-differ");
  for (const auto* row : {&x.minus, &x.plus}) {
    Int e = 0;
    for (std::size_t i = 0; i < c.rank(0); ++i) e += c.augmentation()[i] * (*row)[0][i];
    if (e != 1) rep.add("augmentation-not-one");
  }
  for (int p = 1; p <= n; ++p) {
    const IntMatrix d = c.differential(p - 1);
    Vec want(c.rank(p - 1));
    for (std::size_t i = 0; i < want.size(); ++i) want[i] = x.plus[p - 1][i] - x.minus[p - 1][i];
    if (d.apply(x.minus[p]) != want || d.apply(x.plus[p]) != want)
      rep.add("boundary-mismatch at p=" + std::to_string(p));
  }
  return rep;
}

inline SteinerTable source_cell(const SteinerTable& x, int p) {
  if (p < 0 || p >= x.dim) throw std::out_of_range("source dimension out of range");
  SteinerTable s;
  s.dim = p;
  s.minus.assign(x.minus.begin(), x.minus.begin() + p + 1);
  s.plus.assign(x.plus.begin(), x.plus.begin() + p);
  s.plus.push_back(x.minus[p]);
  return s;
}

inline SteinerTable target_cell(const SteinerTable& x, int p) {
  if (p < 0 || p >= x.dim) throw std::out_of_range("target dimension out of range");
  SteinerTable t;
  t.dim = p;
  t.minus.assign(x.minus.begin(), x.minus.begin() + p);
  t.minus.push_back(x.plus[p]);
  t.plus.assign(x.plus.begin(), x.plus.begin() + p + 1);
  return t;
}

// Identity on x, padded with zeros up to dimension n.
inline SteinerTable identity_cell(const BasedComplex& c, const SteinerTable& x, int n) {
  SteinerTable id = x;
  for (int p = x.dim + 1; p <= n; ++p) {
    id.minus.emplace_back(c.rank(p), 0);
    id.plus.emplace_back(c.rank(p), 0);
  }
  id.dim = std::max(n, x.dim);
  return id;
}

inline SteinerTable identity_cell(const BasedComplex& c, const SteinerTable& x) {
  return identity_cell(c, x, x.dim + 1);
}

// x *_p y, defined when the p-source of x is the p-target of y.
inline std::optional<SteinerTable> compose_cells(const BasedComplex& c, const SteinerTable& x, const SteinerTable& y,
                                                 int p) {
  if (p < 0 || p >= x.dim || p >= y.dim) return std::nullopt;
  if (!(source_cell(x, p) == target_cell(y, p))) return std::nullopt;
  const int n = std::max(x.dim, y.dim);
  const SteinerTable a = identity_cell(c, x, n), b = identity_cell(c, y, n);
  SteinerTable r;
  r.dim = n;
  for (int i = 0; i <= n; ++i) {
    if (i < p) {
      r.minus.push_back(a.minus[i]);
      r.plus.push_back(a.plus[i]);
    } else if (i == p) {
      r.minus.push_back(b.minus[i]);
      r.plus.push_back(a.plus[i]);
    } else {
      Vec mi(a.minus[i].size()), pl(a.plus[i].size());
      for (std::size_t j = 0; j < mi.size(); ++j) {
        mi[j] = a.minus[i][j] + b.minus[i][j];
        pl[j] = a.plus[i][j] + b.plus[i][j];
      }
      r.minus.push_back(std::move(mi));
      r.plus.push_back(std::move(pl));
    }
  }
  return r;
}

struct CellEnumeration {
  std::vector<std::vector<SteinerTable>> cells;  // cells[n] = all n-cells, sorted
  bool complete = true;
};

// Cells dimension by dimension: an n-cell is a parallel pair (u, v) of
// (n-1)-cells together with z >= 0 in C_n such that dz = top(v) - top(u).
inline CellEnumeration enumerate_cells(const BasedComplex& c, int max_dim, int cap = kDefaultCap) {
  CellEnumeration out;
  out.cells.resize(max_dim + 1);
  for (std::size_t i = 0; i < c.rank(0); ++i) {
    if (c.augmentation()[i] != 1) continue;
    SteinerTable t;
    t.dim = 0;
    Vec v(c.rank(0), 0);
    v[i] = 1;
    t.minus = {v};
    t.plus = {v};
    out.cells[0].push_back(t);
  }
  std::sort(out.cells[0].begin(), out.cells[0].end());
  for (int n = 1; n <= max_dim; ++n) {
    NonnegSolver solver(c.differential(n - 1), cap);
    std::map<std::pair<std::vector<Vec>, std::vector<Vec>>, std::vector<const SteinerTable*>> groups;
    for (const auto& u : out.cells[n - 1]) {
      std::vector<Vec> lo(u.minus.begin(), u.minus.end() - 1), hi(u.plus.begin(), u.plus.end() - 1);
      groups[{lo, hi}].push_back(&u);
    }
    for (const auto& [key, members] : groups)
      for (const auto* u : members)
        for (const auto* v : members) {
          Vec b(c.rank(n - 1));
          for (std::size_t i = 0; i < b.size(); ++i) b[i] = v->top()[i] - u->top()[i];
          const auto& sol = solver.solve(b);
          if (!sol.complete) out.complete = false;
          for (const Vec& z : sol.solutions) {
            SteinerTable x;
            x.dim = n;
            x.minus = u->minus;
            x.minus.push_back(z);
            x.plus = v->plus;
            x.plus.push_back(z);
            out.cells[n].push_back(std::move(x));
          }
        }
    std::sort(out.cells[n].begin(), out.cells[n].end());
  }
  return out;
}

inline CheckResult check_cells_valid(const BasedComplex& c, const CellEnumeration& e) {
  CheckResult r;
  for (const auto& level : e.cells)
    for (const auto& x : level) {
      auto v = validate_table(c, x);
      for (const auto& s : v.violations) r.fail("cell of dimension " + std::to_string(x.dim) + ": " + s);
    }
  return r;
}

// Sigma on tables: prepend the poles.
inline SteinerTable suspend_cell(const SteinerTable& x) {
  SteinerTable s;
  s.dim = x.dim + 1;
  s.minus.push_back(Vec{1, 0});
  s.plus.push_back(Vec{0, 1});
  s.minus.insert(s.minus.end(), x.minus.begin(), x.minus.end());
  s.plus.insert(s.plus.end(), x.plus.begin(), x.plus.end());
  return s;
}

inline SteinerTable pole_identity(const BasedComplex& sc, int pole, int n) {
  SteinerTable p;
  p.dim = 0;
  Vec v{pole == 0 ? 1 : 0, pole == 0 ? 0 : 1};
  p.minus = {v};
  p.plus = {v};
  return n == 0 ? p : identity_cell(sc, p, n);
}

// nu Sigma C against Sigma nu C: cells match, positive-level compositions
// match, and level 0 composition only ever involves pole identities.
inline CheckResult check_nu_sigma(const BasedComplex& c, int max_dim, int cap = kDefaultCap) {
  CheckResult r;
  const BasedComplex sc = suspend(c);
  auto base = enumerate_cells(c, max_dim, cap);
  auto susp = enumerate_cells(sc, max_dim + 1, cap);
  if (!base.complete || !susp.complete) r.note("enumeration incomplete");
  for (int n = 0; n <= max_dim + 1; ++n) {
    std::set<SteinerTable> expected{pole_identity(sc, 0, n), pole_identity(sc, 1, n)};
    if (n >= 1)
      for (const auto& x : base.cells[n - 1]) expected.insert(suspend_cell(x));
    std::set<SteinerTable> got(susp.cells[n].begin(), susp.cells[n].end());
    if (got != expected) r.fail("cells of dimension " + std::to_string(n) + " differ");
  }
  for (int n = 1; n <= max_dim; ++n)
    for (int p = 0; p < n; ++p)
      for (const auto& x : base.cells[n])
        for (const auto& y : base.cells[n]) {
          auto xy = compose_cells(c, x, y, p);
          auto sxy = compose_cells(sc, suspend_cell(x), suspend_cell(y), p + 1);
          if (xy.has_value() != sxy.has_value() || (xy && !(suspend_cell(*xy) == *sxy)))
            r.fail("composition at level " + std::to_string(p) + " is not preserved");
        }
  for (int n = 1; n <= max_dim + 1; ++n)
    for (const auto& x : susp.cells[n])
      for (const auto& y : susp.cells[n]) {
        auto xy = compose_cells(sc, x, y, 0);
        if (!xy) continue;
        const bool x_pole = x == pole_identity(sc, 0, n) || x == pole_identity(sc, 1, n);
        const bool y_pole = y == pole_identity(sc, 0, n) || y == pole_identity(sc, 1, n);
        if (!x_pole && !y_pole) r.fail("level 0 composite of two non-pole cells");
        else if (!(*xy == (x_pole ? y : x))) r.fail("pole identity is not a unit");
      }
  return r;
}

// Counit lambda nu C -> C in degree q: rank of Z[q-cells] modulo
// [x *_p y] = [x] + [y] equals rank C_q; the relations also die under x -> top(x).
inline CheckResult check_counit(const BasedComplex& c, int max_dim, int cap = kDefaultCap) {
  CheckResult r;
  auto e = enumerate_cells(c, max_dim, cap);
  for (int q = 0; q <= max_dim; ++q) {
    const auto& cells = e.cells[q];
    std::map<SteinerTable, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
    std::set<std::vector<std::pair<std::size_t, Int>>> relations;
    for (int p = 0; p < q; ++p) {
      std::map<SteinerTable, std::vector<std::size_t>> by_target;
      for (std::size_t j = 0; j < cells.size(); ++j) by_target[target_cell(cells[j], p)].push_back(j);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        auto it = by_target.find(source_cell(cells[i], p));
        if (it == by_target.end()) continue;
        for (std::size_t j : it->second) {
          auto xy = compose_cells(c, cells[i], cells[j], p);
          const std::size_t k = index.at(*xy);
          std::map<std::size_t, Int> rel;
          rel[k] += 1;
          rel[i] -= 1;
          rel[j] -= 1;
          std::vector<std::pair<std::size_t, Int>> sparse;
          for (auto [col, v] : rel)
            if (v) sparse.emplace_back(col, v);
          if (!sparse.empty()) relations.insert(sparse);
          Vec top(c.rank(q), 0);
          for (std::size_t t = 0; t < top.size(); ++t) top[t] = xy->top()[t] - cells[i].top()[t] - cells[j].top()[t];
          if (!is_zero(top)) r.fail("relation does not vanish in C at q=" + std::to_string(q));
        }
      }
    }
    // Sparse exact elimination over Q.
    std::map<std::size_t, std::map<std::size_t, Rational>> pivots;
    for (const auto& rel : relations) {
      std::map<std::size_t, Rational> row;
      for (auto [col, v] : rel) row[col] = v;
      while (!row.empty()) {
        auto lead = row.begin();
        auto piv = pivots.find(lead->first);
        if (piv == pivots.end()) break;
        const Rational f = lead->second / piv->second.begin()->second;
        for (const auto& [col, v] : piv->second) {
          Rational nv = row[col] - f * v;
          if (nv == 0)
            row.erase(col);
          else
            row[col] = nv;
        }
      }
      if (!row.empty()) pivots[row.begin()->first] = std::move(row);
    }
    const std::size_t quotient = cells.size() - pivots.size();
    if (quotient != c.rank(q))
      r.fail("quotient rank " + std::to_string(quotient) + " differs from rank " + std::to_string(c.rank(q)) +
             " at q=" + std::to_string(q));
  }
  return r;
}

// Cells of C° are the cells of C with the two rows exchanged.
inline SteinerTable swap_rows(const SteinerTable& x) {
  SteinerTable s = x;
  std::swap(s.minus, s.plus);
  return s;
}

inline CheckResult check_dual(const BasedComplex& c, int max_dim, int cap = kDefaultCap) {
  CheckResult r;
  auto a = enumerate_cells(c, max_dim, cap);
  auto b = enumerate_cells(total_dual(c), max_dim, cap);
  for (int n = 0; n <= max_dim; ++n) {
    std::set<SteinerTable> swapped;
    for (const auto& x : a.cells[n]) swapped.insert(swap_rows(x));
    std::set<SteinerTable> got(b.cells[n].begin(), b.cells[n].end());
    if (swapped != got) r.fail("dual cells differ in dimension " + std::to_string(n));
    for (const auto& x : a.cells[n])
      for (int p = 0; p < n; ++p)
        if (!(source_cell(swap_rows(x), p) == swap_rows(target_cell(x, p))))
          r.fail("dual does not exchange source and target");
  }
  return r;
}

}  // namespace orient
