#include "catch_amalgamated.hpp"

#include "orient/theta.hpp"

using namespace orient;

namespace {

std::vector<std::size_t> ranks(const BasedComplex& c) {
  std::vector<std::size_t> r;
  for (int q = 0; q <= c.max_degree(); ++q) r.push_back(c.rank(q));
  return r;
}

std::size_t monotone_count(int m, int n) { return static_cast<std::size_t>(binomial(m + n + 1, m + 1)); }

}  // namespace

TEST_CASE("theta syntax") {
  const auto t = parse_theta("[2|[0], [1|[0]]]");
  CHECK(t.k == 2);
  CHECK(t.depth() == 2);
  CHECK(to_string(t) == "[2|[0],[1|[0]]]");
  CHECK(parse_theta(to_string(t)) == t);
  CHECK(parse_theta("[0]").depth() == 0);
  CHECK_THROWS_AS(parse_theta("[2|[0]]"), ThetaSyntaxError);
  CHECK_THROWS_AS(parse_theta("[1|[0]"), ThetaSyntaxError);
  CHECK_THROWS_AS(parse_theta("[1|[0]]x"), ThetaSyntaxError);
  CHECK_THROWS_AS(parse_theta("[a]"), ThetaSyntaxError);
}

TEST_CASE("theta complexes") {
  CHECK(ranks(*theta_adc(parse_theta("[0]"))) == std::vector<std::size_t>{1});
  CHECK(ranks(*theta_adc(parse_theta("[1|[0]]"))) == std::vector<std::size_t>{2, 1});
  CHECK(ranks(*theta_adc(parse_theta("[2|[0],[0]]"))) == std::vector<std::size_t>{3, 2});
  CHECK(ranks(*theta_adc(parse_theta("[1|[1|[0]]]"))) == std::vector<std::size_t>{2, 2, 1});
  for (const char* s : {"[3|[0],[1|[0]],[0]]", "[2|[2|[0],[0]],[1|[1|[0]]]]"}) {
    const auto t = parse_theta(s);
    const auto tc = theta_complex(t);
    CHECK(validate_complex(*tc.complex).ok());
    // wedge arithmetic in degree 0
    std::size_t expected = 1;
    for (const auto& c : t.children) expected += suspend(*theta_adc(c)).rank(0) - 1;
    CHECK(tc.complex->rank(0) == expected);
    for (const auto& p : tc.pieces) CHECK(validate_morphism(p).ok());
  }
}

TEST_CASE("nerves of one-dimensional theta objects count monotone maps") {
  auto a = rs_nerve(theta_adc(parse_theta("[1|[0]]")), 5);
  auto b = rs_nerve(theta_adc(parse_theta("[2|[0],[0]]")), 5);
  for (int m = 0; m <= 5; ++m) {
    CHECK(a->count(m) == monotone_count(m, 1));
    CHECK(b->count(m) == monotone_count(m, 2));
  }
}

TEST_CASE("generators of the left adjoint") {
  auto g0 = ln_generator(parse_theta("[0]"), 0, 4);
  CHECK(g0.size() == 1);
  auto g1 = ln_generator(parse_theta("[1|[0]]"), 0, 4);
  auto n1 = rs_nerve(theta_adc(parse_theta("[1|[0]]")), 4);
  CHECK(g1.size() == n1->msset()->size());
  auto g2 = ln_generator(parse_theta("[1|[0]]"), 1, 4);
  CHECK(g2.of_dim(2).size() == 2);
  CHECK(g2.check_simplicial_identities().empty());
  // the interval factor is fully marked, so a 2-simplex is marked exactly when its first component is
  for (int id : g2.of_dim(2)) CHECK(g2[id].marked);
}

TEST_CASE("segal spine") {
  const auto leaf = ThetaExpr::leaf();
  auto s = segality_map(1, 2, {leaf, leaf}, 4);
  CHECK(is_mono(s.map));
  CHECK_FALSE(s.note.empty());
  // the spine of the 2-simplex: 3 vertices and 2 edges
  CHECK(s.map.source->of_dim(0).size() == 3);
  CHECK(s.map.source->of_dim(1).size() == 2);
  CHECK(s.map.source->of_dim(2).empty());
  auto img = image_of(s.map);
  std::size_t missing2 = 0;
  for (int id : s.map.target->of_dim(2)) missing2 += !img.contains(id);
  CHECK(missing2 == 1);
}

TEST_CASE("segality and completeness maps are monomorphisms") {
  const auto leaf = ThetaExpr::leaf();
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k) {
      INFO("j=" << j << " k=" << k);
      auto s = segality_map(j, k, std::vector<ThetaExpr>(k, leaf), 4);
      CHECK(is_mono(s.map));
      CHECK(s.note.empty() == (j >= 2));
    }
  auto deeper = segality_map(1, 2, {parse_theta("[1|[0]]"), leaf}, 4);
  CHECK(is_mono(deeper.map));
  for (int j = 0; j <= 2; ++j) {
    INFO("j=" << j);
    auto c = completeness_map(j, 4);
    CHECK(is_mono(c.map));
    CHECK(validate_map(c.map).ok());
  }
  auto c0 = completeness_map(0, 4);
  CHECK(c0.map.source->size() == 1);
  // [3] with 02 and 13 collapsed: two vertices remain
  CHECK(c0.map.target->of_dim(0).size() == 2);
  CHECK_THROWS(segality_map(0, 1, {leaf}, 4));
}
