#include "catch_amalgamated.hpp"

#include <filesystem>

#include "orient/filtration.hpp"
#include "orient/json_io.hpp"
#include "orient/suite.hpp"

using namespace orient;

TEST_CASE("complexes survive a json round trip") {
  for (const auto& c : {*oriental(2), suspend(*oriental(1)), tensor(*oriental(1), total_dual(*oriental(1)))}) {
    const Json j = to_json(c);
    const BasedComplex back = complex_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.bases() == c.bases());
    CHECK(validate_complex(back).ok());
  }
}

TEST_CASE("morphisms and tables round trip") {
  auto n = rs_nerve(oriental(1), 2);
  for (const auto& x : n->simplices(2)) {
    auto back = morphism_from_json(to_json(x));
    CHECK(back == x);
  }
  SteinerTable t{1, {{1, 0}, {1}}, {{0, 1}, {1}}};
  auto tb = table_from_json(to_json(t));
  CHECK(tb.minus == t.minus);
  CHECK(tb.plus == t.plus);
}

TEST_CASE("marked simplicial sets and maps round trip") {
  auto x = share(standard(3, 1, Variant::prime));
  auto h = share(horn(3, 1, Variant::prime));
  CHECK(to_json(msset_from_json(to_json(*x))) == to_json(*x));
  auto f = subset_inclusion(h, x);
  auto g = msset_map_from_json(to_json(f));
  CHECK(g.images == f.images);
  CHECK(validate_map(g).ok());
}

TEST_CASE("canonical encoding ignores source order") {
  auto amb = rs_nerve(share(suspend(*oriental(1))), 3)->msset();
  SubObject s = empty_subobject(amb);
  for (int d = 0; d <= 2; ++d)
    for (int id : amb->of_dim(d)) s.member[id] = 1;
  auto m = materialise(s);
  CHECK(canonical_json(m.inclusion) == canonical_json(m.inclusion));
  // same image through a different insertion order
  auto r = materialise(s);
  CHECK(canonical_json(r.inclusion) == canonical_json(m.inclusion));
  s.member[amb->of_dim(2).front()] = 0;
  CHECK(canonical_json(materialise(s).inclusion) != canonical_json(m.inclusion));
}

TEST_CASE("malformed input is rejected") {
  Json j = to_json(*oriental(1));
  j["differentials"][0][0] = Vec{1, 2};
  CHECK_THROWS_AS(complex_from_json(j), FormatError);
  Json k = to_json(*oriental(1));
  k.erase("basis");
  CHECK_THROWS_AS(complex_from_json(k), FormatError);
  CHECK_THROWS_AS(table_from_json(Json{{"dim", 1}, {"minus", Json::array()}, {"plus", Json::array()}}), FormatError);
  Json s = to_json(standard(1, 0));
  s["simplices"][1]["id"] = 7;
  CHECK_THROWS_AS(msset_from_json(s), FormatError);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "orient_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "c.json").string();
  write_json_file(path, to_json(*oriental(3)));
  CHECK(complex_from_json(read_json_file(path)).rank(1) == 6);
  {
    std::ofstream bad(path);
    bad << "{ not json";
  }
  CHECK_THROWS_AS(read_json_file(path), FormatError);
  CHECK_THROWS(read_json_file((dir / "missing.json").string()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("certificates serialise") {
  auto f = build_filtration(oriental(1), 3);
  auto cert = certify_filtration(f);
  const Json j = to_json(cert);
  CHECK(j.at("complete") == true);
  REQUIRE(j.at("steps").size() == cert.steps.size());
  const auto& a = j.at("steps")[0].at("attachments")[0];
  CHECK(a.at("horn").at("m") == 3);
  CHECK(a.at("horn").at("variant") == "plain");
  CHECK(a.at("checks").at("faces_present") == true);
}

TEST_CASE("suite report round trips and sets the exit code") {
  auto rep = run_suite(Profile::quick, 2);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.entries.size() == suite_entries(Profile::quick).size());
  const Json j = to_json(rep);
  auto back = report_from_json(j);
  CHECK(to_json(back) == j);
  back.entries[0].status = Verdict::indeterminate;
  CHECK(back.exit_code() == 2);
  back.entries[1].status = Verdict::fail;
  CHECK(back.exit_code() == 1);
  Json bad = j;
  bad["entries"][0]["status"] = "maybe";
  CHECK_THROWS_AS(report_from_json(bad), FormatError);
}
