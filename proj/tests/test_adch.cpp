#include "catch_amalgamated.hpp"

#include <map>

#include "orient/phi.hpp"

using namespace orient;

namespace {

// Label-keyed sparse chains, used to recompute tensor differentials independently.
using SparseChain = std::map<std::string, Int>;

SparseChain boundary_of(const BasedComplex& c, int q, const std::string& label) {
  SparseChain out;
  if (q == 0) return out;
  const Vec col = c.boundary(q, c.index_of(q, label));
  for (std::size_t i = 0; i < col.size(); ++i)
    if (col[i]) out[c.basis(q - 1)[i]] += col[i];
  return out;
}

BasedComplex two_vertex_loop() {
  // Degree 0: u, v with eps = (1, 2); degree 1: h with dh = 2u - v.
  IntMatrix d(2, 1);
  d(0, 0) = 2;
  d(1, 0) = -1;
  return BasedComplex(1, {{"u", "v"}, {"h"}}, {d}, {1, 2});
}

}  // namespace

TEST_CASE("orientals have binomial ranks and satisfy the complex laws") {
  for (int m = 0; m <= 6; ++m) {
    auto o = oriental(m);
    CHECK(o->max_degree() == m);
    for (int q = 0; q <= m; ++q) CHECK(static_cast<Int>(o->rank(q)) == binomial(m + 1, q + 1));
    CHECK(validate_complex(*o).ok());
  }
  CHECK(oriental(-1)->total_rank() == 0);
  CHECK(validate_complex(*oriental(-1)).ok());
}

TEST_CASE("oriental labels and boundary signs") {
  auto o = oriental(3);
  CHECK(o->basis(1)[0] == "0.1");
  CHECK(o->basis(2)[3] == "1.2.3");
  const auto d = boundary_of(*o, 2, "0.2.3");
  CHECK(d == SparseChain{{"2.3", 1}, {"0.3", -1}, {"0.2", 1}});
}

TEST_CASE("validation reports the failing law and degree") {
  IntMatrix d0(1, 1), d1(1, 1);
  d0(0, 0) = 0;
  d1(0, 0) = 0;
  BasedComplex good(2, {{"a"}, {"b"}, {"c"}}, {d0, d1}, {1});
  CHECK(validate_complex(good).ok());

  // Degree 0: x, y; degree 1: e with de = y - x; degree 2: f with df = e.
  IntMatrix e(2, 1), f(1, 1);
  e(0, 0) = -1;
  e(1, 0) = 1;
  f(0, 0) = 1;
  BasedComplex bad(2, {{"x", "y"}, {"e"}, {"f"}}, {e, f}, {1, 1});
  auto rep = validate_complex(bad);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0] == "dd-nonzero at q=0");

  auto loop = two_vertex_loop();
  auto r2 = validate_complex(loop);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0] == "augmentation-not-unital at v");
}

TEST_CASE("shape mismatches are structural errors") {
  IntMatrix wrong(3, 1);
  CHECK_THROWS_AS(BasedComplex(1, {{"a", "b"}, {"e"}}, {wrong}, {1, 1}), StructuralError);
  CHECK_THROWS_AS(BasedComplex(1, {{"a", "b"}, {"e"}}, {}, {1, 1}), StructuralError);
  CHECK_THROWS_AS(BasedComplex(0, {{"a", "a"}}, {}, {1, 1}), StructuralError);
}

TEST_CASE("tensor differential follows the Leibniz rule with the Koszul sign") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    auto c = oriental(a);
    auto d = share(total_dual(*oriental(b)));
    auto t = tensor(*c, *d);
    CHECK(validate_complex(t).ok());
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j)
        for (const auto& x : c->basis(i))
          for (const auto& y : d->basis(j)) {
            SparseChain expect;
            for (auto [lab, v] : boundary_of(*c, i, x)) expect[pair_label(lab, y)] += v;
            const Int sign = i % 2 == 0 ? 1 : -1;
            for (auto [lab, v] : boundary_of(*d, j, y)) expect[pair_label(x, lab)] += sign * v;
            std::erase_if(expect, [](const auto& kv) { return kv.second == 0; });
            CHECK(boundary_of(t, i + j, pair_label(x, y)) == expect);
          }
  }
}

TEST_CASE("dropping the tensor sign breaks dd = 0") {
  fault::Scope s(fault::Kind::drop_tensor_sign);
  auto t = tensor(*oriental(1), *oriental(1));
  CHECK_FALSE(validate_complex(t).ok());
}

TEST_CASE("suspension shifts degrees and uses the augmentation on old vertices") {
  auto s = suspend(*oriental(1));
  CHECK(s.max_degree() == 2);
  CHECK(s.basis(0) == std::vector<std::string>{kBottom, kTop});
  CHECK(s.basis(1) == std::vector<std::string>{"0", "1"});
  CHECK(validate_complex(s).ok());
  auto loop = suspend(two_vertex_loop());
  CHECK(boundary_of(loop, 1, "v") == SparseChain{{kBottom, -2}, {kTop, 2}});
  CHECK(validate_complex(loop).ok());
  fault::Scope f(fault::Kind::drop_suspension_augmentation);
  auto broken = suspend(two_vertex_loop());
  CHECK(validate_complex(broken).violations == std::vector<std::string>{"dd-nonzero at q=0"});
}

TEST_CASE("dual, sum and wedge") {
  auto o = oriental(2);
  auto d = total_dual(*o);
  CHECK(validate_complex(d).ok());
  CHECK(total_dual(d) == *o);
  auto s = direct_sum(*o, *oriental(1));
  CHECK(validate_complex(s).ok());
  CHECK(s.rank(0) == 5);
  auto so = suspend(*oriental(0));
  auto w = wedge_at_point(so, kTop, so, kBottom);
  CHECK(validate_complex(w).ok());
  CHECK(w.rank(0) == 3);
  CHECK(w.rank(1) == 2);
  auto sop = share(so), wp = share(w);
  auto [l, r] = wedge_inclusions(sop, kTop, sop, kBottom, wp);
  CHECK(validate_morphism(l).ok());
  CHECK(validate_morphism(r).ok());
  CHECK(l.image(0, 1) == r.image(0, 0));
}

TEST_CASE("truncation records itself") {
  auto t = truncate(*oriental(3), 1);
  CHECK(t.truncated());
  CHECK(t.max_degree() == 1);
  CHECK(t.rank(1) == 6);
  CHECK(validate_complex(t).ok());
}

TEST_CASE("phi is the pushout map for small k and l") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      INFO("k=" << k << " l=" << l);
      auto r = verify_suspension_pushout(k, l);
      CHECK(r.ok);
      CHECK(verify_phi_epi(k, l).ok);
    }
}

TEST_CASE("phi sends crossing simplices to split tensors") {
  auto t = tensor_orientals(1, 1);
  auto phi = phi_map(t);
  const auto& o3 = oriental_data(3);
  const auto col = phi.image(2, o3.index_of(mask_of({0, 2, 3})));
  const std::size_t want = t.suspended->index_of(2, pair_label("0", "0.1"));
  for (std::size_t i = 0; i < col.size(); ++i) CHECK(col[i] == (i == want ? 1 : 0));
  CHECK(is_zero(phi.image(1, o3.index_of(mask_of({0, 1})))));
}

TEST_CASE("a truncated phi is not an epimorphism") {
  auto phi = phi_map(1, 1);
  phi.matrix(2)(0, 1) = 0;
  for (std::size_t c = 0; c < phi.matrix(2).cols(); ++c)
    for (std::size_t r = 0; r < phi.matrix(2).rows(); ++r)
      if (r == 0) phi.matrix(2)(r, c) = 0;
  CHECK_FALSE(verify_phi_epi(phi).ok);
}
