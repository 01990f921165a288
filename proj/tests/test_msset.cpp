#include "catch_amalgamated.hpp"

#include "orient/msset.hpp"

using namespace orient;

namespace {

std::set<std::string> marked_names(const MarkedSimplicialSet& x) {
  std::set<std::string> out;
  for (std::size_t id = 0; id < x.size(); ++id)
    if (x[static_cast<int>(id)].marked) out.insert(x[static_cast<int>(id)].name);
  return out;
}

std::set<std::string> names(const MarkedSimplicialSet& x) {
  std::set<std::string> out;
  for (std::size_t id = 0; id < x.size(); ++id) out.insert(x[static_cast<int>(id)].name);
  return out;
}

std::vector<std::size_t> counts(const MarkedSimplicialSet& x) {
  std::vector<std::size_t> c;
  for (int d = 0; d <= x.max_dim(); ++d) c.push_back(x.of_dim(d).size());
  return c;
}

}  // namespace

TEST_CASE("degeneracy words round trip") {
  for (int n = 0; n <= 5; ++n)
    for (Mask steps = 0; steps < (Mask{1} << n); ++steps) {
      std::vector<int> m{0};
      for (int j = 0; j < n; ++j) m.push_back(m.back() + ((steps >> j) & 1));
      CHECK(surjection_from_word(degeneracy_word(m), m.back()) == m);
    }
  CHECK(degeneracy_word({0, 0, 1, 1}) == std::vector<int>{2, 0});
  CHECK_THROWS(surjection_from_word({0, 2}, 1));
}

TEST_CASE("standard simplices and horns") {
  auto d = standard(2, 1);
  CHECK(marked_names(d) == std::set<std::string>{"0.1.2"});
  auto h = horn(2, 1);
  CHECK(names(h) == std::set<std::string>{"0", "1", "2", "0.1", "1.2"});
  CHECK(marked_names(h).empty());
  auto p = standard(3, 1, Variant::prime);
  CHECK(marked_names(p) == std::set<std::string>{"0.1.2", "0.1.2.3", "1.2.3", "0.1.3"});
  auto pp = standard(3, 1, Variant::doubleprime);
  CHECK(marked_names(pp) == std::set<std::string>{"0.1.2", "0.1.2.3", "1.2.3", "0.1.3", "0.2.3"});
  auto e = delta3_eq();
  CHECK(marked_names(e) == std::set<std::string>{"0.2", "1.3", "0.1.2", "0.1.3", "0.2.3", "1.2.3", "0.1.2.3"});
  CHECK(marked_names(delta3_sharp()).size() == 11);
  CHECK(marked_names(standard_trivial(2)) == std::set<std::string>{"0.1.2"});
  CHECK_THROWS(standard(2, 3));
  for (int m = 0; m <= 5; ++m) CHECK(standard_simplex(m).check_simplicial_identities().empty());
}

TEST_CASE("horn inclusion is a regular mono") {
  auto h = share(horn(2, 1));
  auto d = share(standard(2, 1));
  auto f = subset_inclusion(h, d);
  CHECK(validate_map(f).ok());
  CHECK(is_mono(f));
  CHECK(is_regular_inclusion(f));
  auto hp = share(horn(4, 2, Variant::prime));
  auto dp = share(standard(4, 2, Variant::prime));
  CHECK(is_regular_inclusion(subset_inclusion(hp, dp)));
}

TEST_CASE("act normalises through faces and degeneracies") {
  auto d = standard_simplex(3);
  const SimplexRef top = nondegenerate(static_cast<int>(d.size()) - 1, 3);
  // [0,0,2] is the degenerate image of the edge [0,2].
  auto s = d.act(top, {0, 0, 2});
  CHECK(d[s.id].name == "0.2");
  CHECK(s.map == std::vector<int>{0, 0, 1});
  auto v = d.act(s, {1});
  CHECK(d[v.id].name == "0");
  CHECK(d.vertices(top).size() == 4);
}

TEST_CASE("suspension of simplicial sets with marking") {
  auto s0 = suspend_msset(standard_simplex(0));
  CHECK(counts(s0) == std::vector<std::size_t>{2, 1});
  CHECK(marked_names(s0).empty());
  CHECK(s0.check_simplicial_identities().empty());
  auto sb = suspend_msset(boundary_simplex(1));
  CHECK(counts(sb) == std::vector<std::size_t>{2, 2});
  for (int id : sb.of_dim(1)) {
    CHECK(sb[id].faces[1].id == 0);
    CHECK(sb[id].faces[0].id == 1);
  }
  auto marked_edge = standard_trivial(1);
  auto se = suspend_msset(marked_edge);
  CHECK(se[se.of_dim(2)[0]].marked);
  auto s2 = suspend_msset(standard(3, 1));
  CHECK(s2.check_simplicial_identities().empty());
}

TEST_CASE("suspension preserves monos and regular inclusions") {
  auto h = share(horn(3, 1));
  auto d = share(standard(3, 1));
  auto f = subset_inclusion(h, d);
  auto sh = share(suspend_msset(*h)), sd = share(suspend_msset(*d));
  auto sf = suspend_map(f, sh, sd);
  CHECK(validate_map(sf).ok());
  CHECK(is_regular_inclusion(sf));
}

TEST_CASE("products") {
  auto p10 = product(standard_simplex(1), standard_simplex(0));
  CHECK(counts(p10) == std::vector<std::size_t>{2, 1});
  auto p11 = product(standard_simplex(1), standard_simplex(1));
  CHECK(counts(p11) == std::vector<std::size_t>{4, 5, 2});
  CHECK(p11.check_simplicial_identities().empty());
  auto p21 = product(standard_simplex(2), standard_simplex(1));
  CHECK(counts(p21) == std::vector<std::size_t>{6, 12, 10, 3});
  CHECK(p21.check_simplicial_identities().empty());
  // Against a sharp factor only edges degenerate in the plain factor are marked.
  auto ps = product(standard_simplex(1), sharp(standard_simplex(1)));
  std::size_t marked = 0;
  for (int id : ps.of_dim(1))
    if (ps[id].marked) ++marked;
  CHECK(marked == 2);
  auto all = product(standard_trivial(1), sharp(standard_simplex(1)));
  for (int id : all.of_dim(1)) CHECK(all[id].marked);
  CHECK(marked_names(sharp(standard_simplex(3))) == marked_names(delta3_sharp()));
}

TEST_CASE("pushouts along monos") {
  auto d0 = share(standard_simplex(0));
  auto d1 = share(standard_simplex(1));
  MssetMap end{d0, d1, {nondegenerate(1, 0)}};
  MssetMap start{d0, d1, {nondegenerate(0, 0)}};
  auto po = pushout(start, end);
  CHECK(counts(*po.object) == std::vector<std::size_t>{3, 2});
  CHECK(validate_map(po.from_x).ok());
  CHECK(validate_map(po.from_y).ok());
  CHECK(po.object->check_simplicial_identities().empty());
  // Collapsing an edge of a marked triangle to a point.
  auto tri = share(standard(2, 1));
  MssetMap edge{d1, tri, {nondegenerate(0, 0), nondegenerate(1, 0), nondegenerate(3, 1)}};
  MssetMap collapse{d1, d0, {nondegenerate(0, 0), nondegenerate(0, 0), SimplexRef{0, {0, 0}}}};
  CHECK(validate_map(edge).ok());
  CHECK(validate_map(collapse).ok());
  auto pc = pushout(edge, collapse);
  CHECK(counts(*pc.object) == std::vector<std::size_t>{2, 2, 1});
  CHECK(pc.object->check_simplicial_identities().empty());
  CHECK(validate_map(pc.from_x).ok());
  CHECK_THROWS(pushout(collapse, edge));
}

TEST_CASE("suspension commutes with a pushout on a small instance") {
  auto d0 = share(standard_simplex(0));
  auto d1 = share(standard_simplex(1));
  MssetMap end{d0, d1, {nondegenerate(1, 0)}};
  MssetMap start{d0, d1, {nondegenerate(0, 0)}};
  auto po = pushout(start, end);
  auto sigma_po = share(suspend_msset(*po.object));
  auto s0 = share(suspend_msset(*d0)), s1 = share(suspend_msset(*d1));
  auto spo = pushout(suspend_map(start, s0, s1), suspend_map(end, s0, s1));
  auto hx = suspend_map(po.from_x, s1, sigma_po);
  auto hy = suspend_map(po.from_y, s1, sigma_po);
  auto cmp = induced_map(spo, hx, hy);
  CHECK(validate_map(cmp).ok());
  CHECK(is_isomorphism(cmp));
}

TEST_CASE("regular closure") {
  auto d = share(standard(3, 1));
  const int top = static_cast<int>(d->size()) - 1;
  auto s = smallest_regular_containing(d, {top});
  CHECK(s.count() == d->size());
  auto e = smallest_regular_containing(d, {d->of_dim(2)[0]});
  CHECK(e.count() == 7);
  CHECK(closed_under_faces(e));
  auto m = materialise(e);
  CHECK(is_regular_inclusion(m.inclusion));
  CHECK(validate_map(m.inclusion).ok());
}
