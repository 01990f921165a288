#include "catch_amalgamated.hpp"

#include <random>
#include <set>

#include "orient/hom_search.hpp"

using namespace orient;

namespace {

// Independent oracle: every candidate image with coefficients in [0, bound],
// checked against the chain and augmentation laws directly.
std::set<std::vector<Int>> brute_force_homs(const ComplexPtr& s, const ComplexPtr& t, Int bound) {
  std::vector<std::pair<int, std::size_t>> gens;
  for (int q = 0; q <= s->max_degree(); ++q)
    for (std::size_t j = 0; j < s->rank(q); ++j) gens.emplace_back(q, j);
  std::vector<IntMatrix> mats;
  for (int q = 0; q <= s->max_degree(); ++q) mats.emplace_back(t->rank(q), s->rank(q));
  std::set<std::vector<Int>> out;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == gens.size()) {
      AdcMorphism f(s, t, mats);
      if (validate_morphism(f).ok()) out.insert(f.encoding());
      return;
    }
    auto [q, j] = gens[pos];
    const std::size_t n = t->rank(q);
    Vec v(n, 0);
    for (;;) {
      mats[q].set_column(j, v);
      // Prune on the law for this generator, whose faces come earlier.
      bool ok = true;
      if (q == 0) {
        Int e = 0;
        for (std::size_t i = 0; i < n; ++i) e += t->augmentation()[i] * v[i];
        ok = e == s->augmentation()[j];
      } else {
        const Vec lhs = t->differential(q - 1).apply(v);
        const Vec rhs = mats[q - 1].apply(s->boundary(q, j));
        ok = lhs == rhs;
      }
      if (ok) rec(pos + 1);
      std::size_t i = 0;
      while (i < n && v[i] == bound) v[i++] = 0;
      if (i == n) break;
      ++v[i];
    }
    mats[q].set_column(j, Vec(n, 0));
  };
  rec(0);
  return out;
}

std::set<std::vector<Int>> encodings(const HomEnumeration& h) {
  std::set<std::vector<Int>> out;
  for (const auto& f : h.morphisms) out.insert(f.encoding());
  return out;
}

}  // namespace

TEST_CASE("solve_nonneg on a pointed cone is complete") {
  IntMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  auto r = solve_nonneg(a, {2});
  CHECK(r.complete);
  CHECK(r.solutions == std::vector<Vec>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(solve_nonneg(a, {-1}).solutions.empty());
}

TEST_CASE("solve_nonneg flags a non-trivial recession cone") {
  IntMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = -1;
  auto r = solve_nonneg(a, {0});
  CHECK_FALSE(r.complete);
  REQUIRE(r.solutions.size() == 33);
  for (std::size_t t = 0; t < r.solutions.size(); ++t) CHECK(r.solutions[t] == Vec{Int(t), Int(t)});
  auto few = solve_nonneg(a, {0}, 4);
  CHECK(few.solutions.size() == 3);
  // Rationally infeasible systems are complete and empty even on a non-trivial cone.
  IntMatrix b(2, 2);
  b(0, 0) = 1;
  b(0, 1) = -1;
  auto none = solve_nonneg(b, {0, 1});
  CHECK(none.complete);
  CHECK(none.solutions.empty());
}

TEST_CASE("solve_nonneg degenerate shapes") {
  IntMatrix empty_cols(2, 0);
  CHECK(solve_nonneg(empty_cols, {0, 0}).solutions == std::vector<Vec>{Vec{}});
  CHECK(solve_nonneg(empty_cols, {0, 1}).solutions.empty());
  IntMatrix no_rows(0, 2);
  CHECK_FALSE(solve_nonneg(no_rows, {}).complete);
}

TEST_CASE("solve_nonneg agrees with bounded brute force on random pointed systems") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-1, 2);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 3, n = 1 + trial % 4;
    IntMatrix a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
    NonnegSolver s(a);
    if (!s.cone_trivial()) continue;
    Vec b(m);
    for (auto& v : b) v = std::uniform_int_distribution<int>(0, 4)(rng);
    const auto& r = s.solve(b);
    CHECK(r.complete);
    std::set<Vec> brute;
    Vec x(n, 0);
    for (;;) {
      if (a.apply(x) == b) brute.insert(x);
      int j = 0;
      while (j < n && x[j] == 8) x[j++] = 0;
      if (j == n) break;
      ++x[j];
    }
    std::set<Vec> got(r.solutions.begin(), r.solutions.end());
    // Every brute-force solution is found; found solutions are genuine.
    for (const auto& v : brute) CHECK(got.count(v));
    for (const auto& v : got) CHECK(a.apply(v) == b);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("hom counts into O[1] and O[0]") {
  for (int m = 0; m <= 6; ++m) {
    auto h = enumerate_homs(oriental(m), oriental(1));
    CHECK(h.complete);
    CHECK(h.morphisms.size() == static_cast<std::size_t>(m + 2));
    CHECK(enumerate_homs(oriental(m), oriental(0)).morphisms.size() == 1);
  }
}

TEST_CASE("hom enumeration matches the brute-force oracle") {
  auto s_o1 = share(suspend(*oriental(1)));
  auto t11 = share(tensor(*oriental(1), total_dual(*oriental(1))));
  std::vector<std::tuple<ComplexPtr, ComplexPtr, std::size_t>> cases{
      {oriental(1), oriental(2), 7},
      {oriental(2), oriental(2), 0},
      {oriental(2), s_o1, 0},
      {oriental(3), oriental(1), 5},
      {t11, oriental(1), 0},
      {oriental(1), t11, 0},
  };
  for (auto& [s, t, expected] : cases) {
    auto h = enumerate_homs(s, t);
    CHECK(h.complete);
    auto brute = brute_force_homs(s, t, 2);
    CHECK(encodings(h) == brute);
    if (expected) CHECK(h.morphisms.size() == expected);
    for (const auto& f : h.morphisms) CHECK(validate_morphism(f).ok());
  }
}

TEST_CASE("hom bijection through phi") {
  for (int m = 0; m <= 4; ++m) {
    INFO("m=" << m);
    auto r = hom_bijection_check(oriental(0), m);
    CHECK(r.verdict == Verdict::pass);
    auto r1 = hom_bijection_check(oriental(1), m);
    CHECK(r1.verdict == Verdict::pass);
  }
  auto r2 = hom_bijection_check(oriental(2), 3);
  CHECK(r2.verdict == Verdict::pass);
}

TEST_CASE("suspension is fully faithful onto pole-preserving maps") {
  auto r = suspension_full_faithful_check(oriental(1), oriental(2));
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.left == 7);
  auto r2 = suspension_full_faithful_check(oriental(2), oriental(2));
  CHECK(r2.verdict == Verdict::pass);
}
