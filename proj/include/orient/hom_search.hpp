#pragma once

#include <queue>
#include <set>
#include <unordered_set>

#include "phi.hpp"
#include "solve.hpp"

namespace orient {

struct HomEnumeration {
  std::vector<AdcMorphism> morphisms;
  bool complete = true;
  int cap_used = kDefaultCap;
};

// Enumerates morphisms into a fixed target. Each source generator g is assigned
// after the generators in its boundary; its image x must satisfy
// d x = f(dg) (or eps x = eps g in degree 0), solved over non-negative integers.
class HomSearcher {
 public:
  explicit HomSearcher(ComplexPtr target, int cap = kDefaultCap) : tgt_(std::move(target)), cap_(cap) {}

  const ComplexPtr& target() const { return tgt_; }
  int cap() const { return cap_; }

  HomEnumeration enumerate(const ComplexPtr& source) {
    const auto& s = *source;
    Run run{source, {}, {}, {}};
    run.order = generator_order(s);
    run.images.resize(s.max_degree() + 1);
    for (int q = 0; q <= s.max_degree(); ++q) run.images[q].assign(s.rank(q), Vec(tgt_->rank(q), 0));
    run.result.cap_used = cap_;
    dfs(run, 0);
    return std::move(run.result);
  }

 private:
  struct Run {
    ComplexPtr source;
    std::vector<std::pair<int, std::size_t>> order;
    std::vector<std::vector<Vec>> images;
    HomEnumeration result;
  };

  // Topological order of generators with respect to the boundary relation,
  // preferring the highest ready degree so cells are fixed as soon as possible.
  static std::vector<std::pair<int, std::size_t>> generator_order(const BasedComplex& s) {
    std::vector<std::vector<int>> pending(s.max_degree() + 1);
    std::vector<std::vector<std::vector<std::size_t>>> cofaces(s.max_degree() + 1);
    using Item = std::tuple<int, long, std::size_t>;  // (-degree, index) ordering
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> ready;
    for (int q = 0; q <= s.max_degree(); ++q) {
      pending[q].assign(s.rank(q), 0);
      cofaces[q].assign(s.rank(q), {});
    }
    for (int q = 1; q <= s.max_degree(); ++q) {
      const IntMatrix d = s.differential(q - 1);
      for (std::size_t j = 0; j < s.rank(q); ++j)
        for (std::size_t i = 0; i < s.rank(q - 1); ++i)
          if (d(i, j) != 0) {
            ++pending[q][j];
            cofaces[q - 1][i].push_back(j);
          }
    }
    for (int q = 0; q <= s.max_degree(); ++q)
      for (std::size_t j = 0; j < s.rank(q); ++j)
        if (pending[q][j] == 0) ready.emplace(-q, static_cast<long>(j), j);
    std::vector<std::pair<int, std::size_t>> order;
    while (!ready.empty()) {
      auto [nq, idx, j] = ready.top();
      ready.pop();
      const int q = -nq;
      order.emplace_back(q, j);
      if (q < s.max_degree())
        for (std::size_t c : cofaces[q][j])
          if (--pending[q + 1][c] == 0) ready.emplace(-(q + 1), static_cast<long>(c), c);
    }
    return order;
  }

  NonnegSolver& solver(int q) {
    auto it = solvers_.find(q);
    if (it != solvers_.end()) return *it->second;
    IntMatrix a;
    if (q == 0) {
      a = IntMatrix(1, tgt_->rank(0));
      for (std::size_t i = 0; i < tgt_->rank(0); ++i) a(0, i) = tgt_->augmentation()[i];
    } else {
      a = tgt_->differential(q - 1);
    }
    return *solvers_.emplace(q, std::make_unique<NonnegSolver>(std::move(a), cap_)).first->second;
  }

  void dfs(Run& run, std::size_t pos) {
    const auto& s = *run.source;
    if (pos == run.order.size()) {
      std::vector<IntMatrix> mats;
      for (int q = 0; q <= s.max_degree(); ++q) {
        IntMatrix m(tgt_->rank(q), s.rank(q));
        for (std::size_t j = 0; j < s.rank(q); ++j) m.set_column(j, run.images[q][j]);
        mats.push_back(std::move(m));
      }
      run.result.morphisms.emplace_back(run.source, tgt_, std::move(mats));
      return;
    }
    const auto [q, j] = run.order[pos];
    Vec b;
    if (q == 0) {
      b = {s.augmentation()[j]};
    } else {
      b.assign(tgt_->rank(q - 1), 0);
      const Vec dg = s.boundary(q, j);
      for (std::size_t i = 0; i < dg.size(); ++i) {
        if (dg[i] == 0) continue;
        const Vec& img = run.images[q - 1][i];
        for (std::size_t r = 0; r < b.size(); ++r) b[r] += dg[i] * img[r];
      }
    }
    const SolveResult& sol = solver(q).solve(b);
    if (!sol.complete) run.result.complete = false;
    for (const Vec& x : sol.solutions) {
      run.images[q][j] = x;
      dfs(run, pos + 1);
    }
    run.images[q][j].assign(tgt_->rank(q), 0);
  }

  ComplexPtr tgt_;
  int cap_;
  std::map<int, std::unique_ptr<NonnegSolver>> solvers_;
};

inline HomEnumeration enumerate_homs(const ComplexPtr& source, const ComplexPtr& target, int cap = kDefaultCap) {
  HomSearcher s(target, cap);
  return s.enumerate(source);
}

enum class Verdict { pass, fail, indeterminate };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

struct BijectionCheck {
  Verdict verdict = Verdict::pass;
  std::size_t left = 0, right = 0;
  std::vector<std::string> details;
};

// adCh(O[m], Sigma C) against the disjoint union over k+1+l = m of
// adCh(O[k] (x) O[l]°, C), the latter sent across by x -> Sigma x o phi.
inline BijectionCheck hom_bijection_check(const ComplexPtr& c, int m, int cap = kDefaultCap) {
  BijectionCheck res;
  auto sc = share(suspend(*c));
  auto rhs = enumerate_homs(oriental(m), sc, cap);
  if (!rhs.complete) res.verdict = Verdict::indeterminate;
  std::unordered_set<std::vector<Int>, EncodingHash> right;
  for (const auto& x : rhs.morphisms) right.insert(x.encoding());
  res.right = right.size();
  std::unordered_set<std::vector<Int>, EncodingHash> seen;
  auto record = [&](const AdcMorphism& x, const std::string& where) {
    auto v = validate_morphism(x);
    if (!v.ok()) res.details.push_back("image from " + where + " is not a morphism");
    auto e = x.encoding();
    if (!seen.insert(e).second) res.details.push_back("two preimages from " + where);
    if (!right.count(e)) res.details.push_back("image from " + where + " missing on the right");
    ++res.left;
  };
  // k = -1 and k = m: constant maps at the poles.
  for (int pole = 0; pole < 2; ++pole) {
    auto x = AdcMorphism::zero(oriental(m), sc);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i) x.matrix(0)(pole, i) = 1;
    record(x, pole == 0 ? "k=m" : "k=-1");
  }
  for (int k = 0; k + 1 <= m; ++k) {
    const int l = m - 1 - k;
    const auto t = tensor_orientals(k, l);
    const AdcMorphism phi = phi_map(t);
    auto homs = enumerate_homs(t.complex, c, cap);
    if (!homs.complete) res.verdict = Verdict::indeterminate;
    for (const auto& f : homs.morphisms) record(compose(suspend(f, t.suspended, sc), phi), "k=" + std::to_string(k));
  }
  if (res.left != res.right) res.details.push_back("sizes differ");
  if (!res.details.empty()) res.verdict = Verdict::fail;
  return res;
}

// Sigma is faithful on Hom(S,T) and its image is exactly the pole-preserving maps.
inline BijectionCheck suspension_full_faithful_check(const ComplexPtr& s, const ComplexPtr& t, int cap = kDefaultCap) {
  BijectionCheck res;
  auto ss = share(suspend(*s)), st = share(suspend(*t));
  auto plain = enumerate_homs(s, t, cap);
  auto susp = enumerate_homs(ss, st, cap);
  if (!plain.complete || !susp.complete) res.verdict = Verdict::indeterminate;
  std::set<std::vector<Int>> images, pointed;
  for (const auto& f : plain.morphisms)
    if (!images.insert(suspend(f, ss, st).encoding()).second) res.details.push_back("suspension is not faithful");
  for (const auto& g : susp.morphisms)
    if (g.matrix(0) == IntMatrix::identity(2)) pointed.insert(g.encoding());
  res.left = images.size();
  res.right = pointed.size();
  if (images != pointed) res.details.push_back("suspension is not full onto pole-preserving maps");
  if (!res.details.empty()) res.verdict = Verdict::fail;
  return res;
}

}  // namespace orient
