#pragma once

#include <cctype>

#include "nerve.hpp"

namespace orient {

// [k|t1,...,tk]; a leaf is [0].
struct ThetaExpr {
  int k = 0;
  std::vector<ThetaExpr> children;

  static ThetaExpr leaf() { return {}; }
  static ThetaExpr node(std::vector<ThetaExpr> cs) {
    ThetaExpr t;
    t.k = static_cast<int>(cs.size());
    t.children = std::move(cs);
    return t;
  }
  int depth() const {
    int d = 0;
    for (const auto& c : children) d = std::max(d, c.depth() + 1);
    return d;
  }
  friend bool operator==(const ThetaExpr&, const ThetaExpr&) = default;
};

inline std::string to_string(const ThetaExpr& t) {
  if (t.k == 0) return "[0]";
  std::string s = "[" + std::to_string(t.k) + "|";
  for (int i = 0; i < t.k; ++i) s += (i ? "," : "") + to_string(t.children[i]);
  return s + "]";
}

class ThetaSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct ThetaParser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ThetaSyntaxError("theta expression: " + what + " at position " + std::to_string(pos));
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  ThetaExpr parse() {
    expect('[');
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    const int k = std::stoi(std::string(s.substr(start, pos - start)));
    skip();
    ThetaExpr t;
    t.k = k;
    if (k == 0) {
      expect(']');
      return t;
    }
    expect('|');
    for (int i = 0; i < k; ++i) {
      if (i) expect(',');
      t.children.push_back(parse());
    }
    expect(']');
    return t;
  }
};

}  // namespace detail

inline ThetaExpr parse_theta(std::string_view s) {
  detail::ThetaParser p{s};
  auto t = p.parse();
  p.skip();
  if (p.pos != s.size()) p.fail("trailing input");
  return t;
}

// Sigma^j of an expression: j-fold [1|-].
inline ThetaExpr theta_suspend(ThetaExpr t, int j = 1) {
  for (int i = 0; i < j; ++i) t = ThetaExpr::node({std::move(t)});
  return t;
}

// The wedge chain of suspensions, with the inclusion of each suspended child.
struct ThetaComplex {
  ComplexPtr complex;
  std::vector<AdcMorphism> pieces;  // Sigma(child i) -> complex
};

inline ThetaComplex theta_complex(const ThetaExpr& t) {
  ThetaComplex out;
  if (t.k == 0) {
    out.complex = oriental(0);
    return out;
  }
  std::string top;
  for (int i = 0; i < t.k; ++i) {
    auto piece = share(suspend(*theta_complex(t.children[i]).complex));
    if (i == 0) {
      out.complex = piece;
      out.pieces.push_back(identity_morphism(piece));
      top = kTop;
      continue;
    }
    auto w = share(wedge_at_point(*out.complex, top, *piece, kBottom));
    auto [left, right] = wedge_inclusions(out.complex, top, piece, kBottom, w);
    for (auto& p : out.pieces) p = compose(left, p);
    out.pieces.push_back(right);
    out.complex = w;
    top = kRightTag + kTop;
  }
  return out;
}

inline ComplexPtr theta_adc(const ThetaExpr& t) { return theta_complex(t).complex; }

inline MarkedSimplicialSet ln_generator(const ThetaExpr& t, int l, int cutoff, int cap = kDefaultCap) {
  auto n = rs_nerve(theta_adc(t), cutoff, cap);
  return product(*n->msset(), sharp(standard_simplex(l)), cutoff);
}

// Postcomposition with f on nerves truncated at the same dimension.
inline MssetMap nerve_map(const AdcMorphism& f, const Nerve& a, const Nerve& b) {
  MssetMap m{a.msset(), b.msset(), {}};
  for (std::size_t id = 0; id < a.msset()->size(); ++id) m.images.push_back(b.locate(compose(f, a.simplex(static_cast<int>(id)))));
  return m;
}

class NotMonomorphism : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ThetaExtension {
  std::string name;
  MssetMap map;
  std::string note;
};

namespace detail {

// O[0] -> Sigma D at a pole, suspended j times.
inline AdcMorphism pole_inclusion(const ComplexPtr& sigma_d, bool top, int j) {
  auto pt = oriental(0);
  IntMatrix m(2, 1);
  m(top ? 1 : 0, 0) = 1;
  std::vector<IntMatrix> mats{m};
  for (int q = 1; q <= pt->max_degree(); ++q) mats.emplace_back(sigma_d->rank(q), 0);
  AdcMorphism f(pt, sigma_d, std::move(mats));
  for (int i = 0; i < j; ++i) f = suspend(f);
  return f;
}

inline AdcMorphism suspend_times(AdcMorphism f, int j) {
  for (int i = 0; i < j; ++i) f = suspend(f);
  return f;
}

inline void require_mono(const MssetMap& m, const std::string& what) {
  auto rep = validate_map(m);
  if (!rep.ok()) throw NotMonomorphism(what + " is not a map: " + rep.violations.front());
  if (!is_mono(m)) throw NotMonomorphism(what + " is not a monomorphism");
}

}  // namespace detail

// Sigma^j[t1] u ... u Sigma^j[tk] glued along Sigma^{j-1}[0]  ->  Sigma^{j-1}[k|t1,...,tk].
inline ThetaExtension segality_map(int j, int k, const std::vector<ThetaExpr>& ts, int cutoff, int cap = kDefaultCap) {
  if (j < 1) throw std::invalid_argument("segality extensions need j >= 1");
  if (k < 1 || static_cast<int>(ts.size()) != k) throw std::invalid_argument("segality extensions need k >= 1 children");
  const ThetaExpr whole = ThetaExpr::node(ts);
  const auto tc = theta_complex(whole);
  std::vector<AdcMorphism> incls;
  for (const auto& p : tc.pieces) incls.push_back(detail::suspend_times(p, j - 1));
  auto target = rs_nerve(incls.front().target(), cutoff, cap);
  auto glue = rs_nerve(theta_adc(theta_suspend(ThetaExpr::leaf(), j - 1)), cutoff, cap);

  ThetaExtension out;
  out.name = "segality j=" + std::to_string(j) + " k=" + std::to_string(k);
  if (j == 1) out.note = "j = 1 lies outside 2 <= j <= n and is covered by the suspension statement only";

  MssetPtr cur;
  MssetMap to_target;
  MssetMap last_top;  // glue -> cur at the top of the latest piece
  for (int i = 0; i < k; ++i) {
    const AdcMorphism& incl = incls[i];
    auto piece = rs_nerve(incl.source(), cutoff, cap);
    const MssetMap into = nerve_map(incl, *piece, *target);
    const MssetMap bot = nerve_map(detail::pole_inclusion(tc.pieces[i].source(), false, j - 1), *glue, *piece);
    const MssetMap top = nerve_map(detail::pole_inclusion(tc.pieces[i].source(), true, j - 1), *glue, *piece);
    if (i == 0) {
      cur = piece->msset();
      to_target = into;
      last_top = top;
      continue;
    }
    auto po = pushout(bot, last_top);
    to_target = induced_map(po, into, to_target);
    cur = po.object;
    last_top = compose(po.from_x, top);
  }
  out.map = to_target;
  detail::require_mono(out.map, out.name);
  return out;
}

// Sigma^j[0] -> Sigma^j([0] u_[1] [3] u_[1] [0]), gluing along the edges 02 and 13.
inline ThetaExtension completeness_map(int j, int cutoff, int cap = kDefaultCap) {
  if (j < 0) throw std::invalid_argument("completeness extensions need j >= 0");
  const ThetaExpr leaf = ThetaExpr::leaf();
  auto point_c = theta_adc(leaf);
  auto arrow_c = theta_adc(theta_suspend(leaf));
  auto chain_c = theta_adc(ThetaExpr::node({leaf, leaf, leaf}));
  // arrow onto a composite of two consecutive edges
  auto edge = [&](int from) {
    IntMatrix v(4, 2), e(3, 1);
    v(from, 0) = 1;
    v(from + 2, 1) = 1;
    e(from, 0) = e(from + 1, 0) = 1;
    return AdcMorphism(arrow_c, chain_c, {v, e});
  };
  IntMatrix cv(1, 2);
  cv(0, 0) = cv(0, 1) = 1;
  const AdcMorphism collapse(arrow_c, point_c, {cv, IntMatrix(0, 1)});
  const AdcMorphism e02 = detail::suspend_times(edge(0), j);
  const AdcMorphism e13 = detail::suspend_times(edge(1), j);
  const AdcMorphism c = detail::suspend_times(collapse, j);

  auto point = rs_nerve(c.target(), cutoff, cap);
  auto arrow = rs_nerve(c.source(), cutoff, cap);
  auto chain = rs_nerve(e02.target(), cutoff, cap);
  const MssetMap n02 = nerve_map(e02, *arrow, *chain);
  const MssetMap n13 = nerve_map(e13, *arrow, *chain);
  const MssetMap nc = nerve_map(c, *arrow, *point);

  detail::require_mono(n02, "edge 02");
  auto first = pushout(n02, nc);
  const MssetMap second_leg = compose(first.from_x, n13);
  detail::require_mono(second_leg, "edge 13 in the first pushout");
  auto second = pushout(second_leg, nc);

  ThetaExtension out;
  out.name = "completeness j=" + std::to_string(j);
  out.map = compose(second.from_x, first.from_y);
  detail::require_mono(out.map, out.name);
  return out;
}

}  // namespace orient
