#include "catch_amalgamated.hpp"

#include "orient/nu_cells.hpp"

using namespace orient;

namespace {

// The n-globe: two cells s_q, t_q below the top, with ds_q = dt_q = t_{q-1} - s_{q-1}.
ComplexPtr globe(int n) {
  std::vector<std::vector<std::string>> basis(n + 1);
  for (int q = 0; q < n; ++q) basis[q] = {"s" + std::to_string(q), "t" + std::to_string(q)};
  basis[n] = {"e"};
  std::vector<IntMatrix> diff;
  for (int q = 0; q < n; ++q) {
    IntMatrix d(2, basis[q + 1].size());
    for (std::size_t j = 0; j < basis[q + 1].size(); ++j) {
      d(0, j) = -1;
      d(1, j) = 1;
    }
    diff.push_back(d);
  }
  return share(BasedComplex(n, basis, diff, Vec(basis[0].size(), 1)));
}

}  // namespace

TEST_CASE("cells of nu O[1]") {
  auto e = enumerate_cells(*oriental(1), 2);
  CHECK(e.complete);
  CHECK(e.cells[0].size() == 2);
  // 1-cells: two identities and the arrow.
  CHECK(e.cells[1].size() == 3);
  CHECK(e.cells[2].size() == 3);
  CHECK(check_cells_valid(*oriental(1), e).ok);
}

TEST_CASE("cells of nu O[2] in dimension 1") {
  auto e = enumerate_cells(*oriental(2), 2);
  // identities, three edges and the composite [01]+[12]
  CHECK(e.cells[1].size() == 7);
}

TEST_CASE("n-cells of nu C correspond to morphisms from the n-globe") {
  std::vector<ComplexPtr> cs{oriental(1), oriental(2), oriental(3), share(suspend(*oriental(1))),
                             share(tensor(*oriental(1), total_dual(*oriental(1))))};
  for (const auto& c : cs) {
    auto e = enumerate_cells(*c, 3);
    for (int n = 0; n <= 3; ++n) CHECK(e.cells[n].size() == enumerate_homs(globe(n), c).morphisms.size());
  }
}

TEST_CASE("sources, targets and identities") {
  const auto& c = *oriental(2);
  auto e = enumerate_cells(c, 2);
  for (const auto& x : e.cells[2]) {
    for (int p = 0; p < 2; ++p) {
      CHECK(validate_table(c, source_cell(x, p)).ok());
      CHECK(validate_table(c, target_cell(x, p)).ok());
    }
    // globularity
    CHECK(source_cell(source_cell(x, 1), 0) == source_cell(target_cell(x, 1), 0));
    CHECK(target_cell(source_cell(x, 1), 0) == target_cell(target_cell(x, 1), 0));
    auto id = identity_cell(c, x);
    CHECK(validate_table(c, id).ok());
    CHECK(source_cell(id, 2) == x);
    CHECK(target_cell(id, 2) == x);
  }
}

TEST_CASE("composition is unital, associative and satisfies interchange") {
  const auto& c = *oriental(3);
  auto e = enumerate_cells(c, 2);
  const auto& two = e.cells[2];
  int composites = 0;
  for (const auto& x : two)
    for (int p = 0; p < 2; ++p) {
      auto s = identity_cell(c, source_cell(x, p), 2);
      auto t = identity_cell(c, target_cell(x, p), 2);
      CHECK(compose_cells(c, x, s, p) == x);
      CHECK(compose_cells(c, t, x, p) == x);
    }
  for (const auto& x : two)
    for (const auto& y : two)
      for (int p = 0; p < 2; ++p) {
        auto xy = compose_cells(c, x, y, p);
        if (!xy) continue;
        ++composites;
        CHECK(validate_table(c, *xy).ok());
        for (const auto& z : two) {
          auto yz = compose_cells(c, y, z, p);
          if (!yz) continue;
          auto l = compose_cells(c, *xy, z, p);
          auto r = compose_cells(c, x, *yz, p);
          REQUIRE(l);
          REQUIRE(r);
          CHECK(*l == *r);
        }
      }
  CHECK(composites > 0);
  // (a *1 b) *0 (c *1 d) = (a *0 c) *1 (b *0 d) whenever both sides are defined.
  int interchanges = 0;
  for (const auto& a : two)
    for (const auto& b : two) {
      auto ab = compose_cells(c, a, b, 1);
      if (!ab) continue;
      for (const auto& cc : two)
        for (const auto& d : two) {
          auto cd = compose_cells(c, cc, d, 1);
          if (!cd) continue;
          auto lhs = compose_cells(c, *ab, *cd, 0);
          auto ac = compose_cells(c, a, cc, 0);
          auto bd = compose_cells(c, b, d, 0);
          if (!lhs || !ac || !bd) continue;
          auto rhs = compose_cells(c, *ac, *bd, 1);
          REQUIRE(rhs);
          CHECK(*lhs == *rhs);
          ++interchanges;
        }
    }
  CHECK(interchanges > 0);
}

TEST_CASE("nu commutes with suspension") {
  CHECK(check_nu_sigma(*oriental(0), 3).ok);
  CHECK(check_nu_sigma(*oriental(1), 2).ok);
  CHECK(check_nu_sigma(*oriental(2), 2).ok);
}

TEST_CASE("counit of lambda nu on orientals is an isomorphism rationally") {
  for (int m = 0; m <= 3; ++m) {
    INFO("m=" << m);
    auto r = check_counit(*oriental(m), m);
    CHECK(r.ok);
  }
}

TEST_CASE("cells of the dual complex are cells with swapped rows") {
  CHECK(check_dual(*oriental(2), 2).ok);
  CHECK(check_dual(*oriental(3), 3).ok);
}
