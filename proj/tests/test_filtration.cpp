#include "catch_amalgamated.hpp"

#include "orient/filtration.hpp"

using namespace orient;

namespace {

SubObject truncation(const MssetPtr& amb, int d) {
  SubObject s = empty_subobject(amb);
  for (int q = 0; q <= d; ++q)
    for (int id : amb->of_dim(q)) s.member[id] = 1;
  return s;
}

// start as a sub-object of end, both materialised, as a map of sets
MssetMap relative_inclusion(const SubObject& start, const SubObject& end) {
  auto ms = materialise(start);
  auto me = materialise(end);
  MssetMap f{ms.set, me.set, {}};
  for (const auto& img : ms.inclusion.images) f.images.push_back(nondegenerate(me.local[img.id], img.dim()));
  return f;
}

}  // namespace

TEST_CASE("filtration over a point is constant") {
  auto f = build_filtration(oriental(0), 4);
  CHECK(f.ok());
  for (const auto& s : f.stages) {
    CHECK(s.added.empty());
    CHECK(s.sub == f.stages.front().sub);
  }
  auto cert = certify_filtration(f);
  CHECK(cert.steps.empty());
  CHECK(cert.complete());
}

TEST_CASE("filtration over the arrow") {
  auto f = build_filtration(oriental(1), 4);
  for (const auto& e : f.errors) UNSCOPED_INFO(e);
  REQUIRE(f.ok());
  // X_2 adds the missing 2-simplex and its suspect parent
  const FiltrationStage* x1 = nullptr;
  const FiltrationStage* x2 = nullptr;
  for (const auto& s : f.stages) {
    if (s.label == "X" && s.m == 1) x1 = &s;
    if (s.label == "X" && s.m == 2) x2 = &s;
  }
  REQUIRE(x1);
  REQUIRE(x2);
  CHECK(x2->sub.count() - x1->sub.count() == 2);
  std::size_t w_at_2 = 0;
  for (const auto& s : f.stages)
    if (s.label == "W" && s.m == 2) {
      w_at_2 += s.added.size();
      for (const auto& p : s.added) {
        CHECK((*f.ambient())[p.x].dim == 2);
        CHECK((*f.ambient())[p.parent].dim == 3);
      }
    }
  CHECK(w_at_2 == 1);
  auto cert = certify_filtration(f);
  CHECK(cert.complete());
  CHECK(cert.steps.size() == 3);
}

TEST_CASE("W steps consist of matched pairs") {
  for (int cm = 1; cm <= 2; ++cm) {
    auto f = build_filtration(oriental(cm), 4);
    REQUIRE(f.ok());
    const auto& an = *f.analysis;
    for (std::size_t i = 1; i < f.stages.size(); ++i) {
      const auto& s = f.stages[i];
      if (s.label != "W") continue;
      CHECK(s.sub.count() - f.stages[i - 1].sub.count() == 2 * s.added.size());
      for (const auto& p : s.added) {
        CHECK_FALSE(an.profile(p.x).suspect);
        CHECK(an.profile(p.parent).suspect);
        CHECK(an.profile(p.parent).index == p.r);
        CHECK((*f.ambient())[p.parent].faces[p.r] == nondegenerate(p.x, p.m));
      }
    }
  }
}

TEST_CASE("every W step over O[2] certifies") {
  auto f = build_filtration(oriental(2), 4);
  REQUIRE(f.ok());
  auto cert = certify_filtration(f);
  for (const auto& st : cert.steps) {
    INFO(st.from << " -> " << st.to);
    for (const auto& e : st.errors) UNSCOPED_INFO(e);
    CHECK(st.ok());
  }
  CHECK(cert.replay_matches);
  CHECK(cert.truncation_matches);
  CHECK(cert.complete());
  CHECK(to_json(cert).at("complete") == true);
}

TEST_CASE("a tampered stage is refused") {
  auto f = build_filtration(oriental(1), 4);
  REQUIRE(f.ok());
  std::size_t w = 0;
  for (std::size_t i = 0; i < f.stages.size(); ++i)
    if (!f.stages[i].added.empty()) {
      w = i;
      break;
    }
  REQUIRE(w > 0);
  // drop the marking witness: claim an unrelated parent
  auto g = f;
  g.stages[w].added[0].r += 1;
  auto cert = certify_step(g, w - 1, w);
  CHECK_FALSE(cert.ok());
  // next stage with one extra simplex
  auto h = f;
  for (int id : h.ambient()->of_dim(4))
    if (!h.stages[w].sub.contains(id)) {
      h.stages[w].sub.member[id] = 1;
      break;
    }
  CHECK_FALSE(certify_step(h, w - 1, w).ok());
}

TEST_CASE("search certificates for generators") {
  {
    auto a = share(horn(2, 1));
    auto b = share(standard(2, 1));
    auto res = certify_inner_anodyne(subset_inclusion(a, b), 1000);
    REQUIRE(res.steps);
    CHECK(res.steps->size() == 1);
    CHECK(res.steps->front().kind == GeneratorStep::horn_extension);
  }
  {
    auto a = share(horn(2, 1, Variant::prime));
    auto b = share(standard(2, 1, Variant::doubleprime));
    auto res = certify_inner_anodyne(subset_inclusion(a, b), 1000);
    REQUIRE(res.steps);
    CHECK(res.steps->size() == 2);
    CHECK(res.steps->back().kind == GeneratorStep::thinness_extension);
  }
  {
    // an outer horn has no certificate
    auto a = share(horn(2, 0));
    auto b = share(standard(2, 0));
    auto res = certify_inner_anodyne(subset_inclusion(a, b), 1000);
    CHECK_FALSE(res.steps);
  }
}

TEST_CASE("search agrees with the filtration over the arrow") {
  auto f = build_filtration(oriental(1), 4);
  REQUIRE(f.ok());
  // X_3 is the last stage whose horn fillers all lie in dimension <= 4
  const FiltrationStage* x3 = nullptr;
  for (const auto& s : f.stages)
    if (s.label == "X" && s.m == 3) x3 = &s;
  REQUIRE(x3);
  auto incl = relative_inclusion(f.stages.front().sub, x3->sub);
  auto res = certify_inner_anodyne(incl, 20000);
  INFO(res.diagnostic);
  REQUIRE(res.steps);
  std::size_t horns = 0;
  for (const auto& st : *res.steps) horns += st.kind == GeneratorStep::horn_extension;
  std::size_t pairs = 0;
  for (const auto& s : f.stages)
    for (const auto& p : s.added) pairs += p.m <= 3;
  CHECK(horns == pairs);
  // the dimension-4 remainder needs a 5-dimensional filler
  auto rest = relative_inclusion(f.stages.front().sub, truncation(f.ambient(), 4));
  CHECK_FALSE(certify_inner_anodyne(rest, 20000).steps);
}

TEST_CASE("no attached simplex has suspect index 0") {
  for (int cm = 0; cm <= 2; ++cm) {
    auto f = build_filtration(oriental(cm), 4);
    for (const auto& s : f.stages)
      for (const auto& p : s.added) {
        CHECK(f.analysis->profile(p.x).index != 0);
        CHECK(f.analysis->profile(p.parent).index != 0);
      }
  }
}
