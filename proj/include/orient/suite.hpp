#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <thread>

#include "filtration.hpp"
#include "hom_search.hpp"
#include "json_io.hpp"
#include "nu_cells.hpp"
#include "phi.hpp"
#include "suspect.hpp"
#include "theta.hpp"

namespace orient {

enum class Profile { quick, full };

inline Profile profile_from_name(std::string_view s) {
  if (s == "quick") return Profile::quick;
  if (s == "full") return Profile::full;
  throw std::invalid_argument("unknown profile '" + std::string(s) + "'");
}

struct Outcome {
  Verdict status = Verdict::pass;
  std::vector<std::string> details;

  void fail(std::string d) {
    status = Verdict::fail;
    details.push_back(std::move(d));
  }
  void unsure(std::string d) {
    if (status == Verdict::pass) status = Verdict::indeterminate;
    details.push_back(std::move(d));
  }
  void absorb(const CheckResult& r, const std::string& where) {
    if (!r.ok) {
      for (const auto& d : r.details) fail(where + ": " + d);
      if (r.details.empty()) fail(where);
    } else {
      for (const auto& d : r.details)
        if (d.find("incomplete") != std::string::npos) unsure(where + ": " + d);
    }
  }
  void absorb(Verdict v, const std::vector<std::string>& ds, const std::string& where) {
    if (v == Verdict::fail) {
      fail(where);
    } else if (v == Verdict::indeterminate) {
      unsure(where);
    }
    for (std::size_t i = 0; i < ds.size() && i < 5; ++i) details.push_back(where + ": " + ds[i]);
  }
};

struct SuiteEntry {
  std::string id;      // the statement checked
  std::string params;  // human readable parameter range
  std::function<Outcome()> run;
};

struct ReportEntry {
  std::string id, params;
  Verdict status = Verdict::pass;
  double elapsed_s = 0;
  std::vector<std::string> details;
};

struct VerificationReport {
  std::string profile;
  std::vector<ReportEntry> entries;

  bool any(Verdict v) const {
    return std::any_of(entries.begin(), entries.end(), [&](const ReportEntry& e) { return e.status == v; });
  }
  int exit_code() const {
    if (any(Verdict::fail)) return 1;
    if (any(Verdict::indeterminate)) return 2;
    return 0;
  }
};

inline Verdict verdict_from_name(std::string_view s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "indeterminate") return Verdict::indeterminate;
  throw FormatError("unknown status '" + std::string(s) + "'");
}

inline Json to_json(const VerificationReport& r) {
  Json es = Json::array();
  for (const auto& e : r.entries)
    es.push_back({{"id", e.id},
                  {"params", e.params},
                  {"status", verdict_name(e.status)},
                  {"elapsed_s", e.elapsed_s},
                  {"details", e.details}});
  return {{"profile", r.profile}, {"entries", es}, {"exit_code", r.exit_code()}};
}

inline VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  try {
    r.profile = j.at("profile").get<std::string>();
    for (const auto& e : j.at("entries")) {
      ReportEntry x;
      x.id = e.at("id").get<std::string>();
      x.params = e.at("params").get<std::string>();
      x.status = verdict_from_name(e.at("status").get<std::string>());
      x.elapsed_s = e.at("elapsed_s").get<double>();
      x.details = e.at("details").get<std::vector<std::string>>();
      r.entries.push_back(std::move(x));
    }
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
  return r;
}

namespace detail {

// u, v with eps = (1, 2) and dh = 2u - v; the suspension differential depends on eps here.
inline BasedComplex weighted_edge() {
  IntMatrix d(2, 1);
  d(0, 0) = 2;
  d(1, 0) = -1;
  return BasedComplex(1, {{"u", "v"}, {"h"}}, {d}, {1, 2});
}

inline std::string range(const char* var, int hi) { return std::string(var) + " <= " + std::to_string(hi); }

inline std::vector<std::pair<std::string, ComplexPtr>> small_orientals(int hi) {
  std::vector<std::pair<std::string, ComplexPtr>> out;
  for (int m = 0; m <= hi; ++m) out.emplace_back("O[" + std::to_string(m) + "]", oriental(m));
  return out;
}

}  // namespace detail

inline std::vector<SuiteEntry> suite_entries(Profile p) {
  const bool full = p == Profile::full;
  const int kl = full ? 3 : 2;
  const int dim = full ? 4 : 3;
  std::vector<SuiteEntry> es;

  es.push_back({"oriental-laws", "m <= 6", [] {
                  Outcome o;
                  for (int m = 0; m <= 6; ++m) {
                    auto c = oriental(m);
                    auto rep = validate_complex(*c);
                    if (!rep.ok()) o.fail("O[" + std::to_string(m) + "]: " + rep.violations.front());
                    for (int q = 0; q <= m; ++q)
                      if (c->rank(q) != static_cast<std::size_t>(binomial(m + 1, q + 1)))
                        o.fail("rank of O[" + std::to_string(m) + "] in degree " + std::to_string(q));
                  }
                  return o;
                }});
  es.push_back({"tensor-and-suspension-laws", "O[k] (x) O[l]°, k, l <= 3; suspension of a weighted edge", [] {
                  Outcome o;
                  for (int k = 0; k <= 3; ++k)
                    for (int l = 0; l <= 3; ++l) {
                      auto rep = validate_complex(tensor(*oriental(k), total_dual(*oriental(l))));
                      if (!rep.ok()) o.fail("tensor " + std::to_string(k) + "," + std::to_string(l) + ": " + rep.violations.front());
                    }
                  auto rep = validate_complex(suspend(detail::weighted_edge()));
                  if (!rep.ok()) o.fail("suspension: " + rep.violations.front());
                  return o;
                }});
  es.push_back({"phi-chain-map", "k, l <= 3", [] {
                  Outcome o;
                  for (int k = 0; k <= 3; ++k)
                    for (int l = 0; l <= 3; ++l) {
                      auto rep = validate_morphism(phi_map(k, l));
                      if (!rep.ok()) o.fail("phi(" + std::to_string(k) + "," + std::to_string(l) + "): " + rep.violations.front());
                    }
                  return o;
                }});
  es.push_back({"phi-epimorphism", "k, l <= 3", [] {
                  Outcome o;
                  for (int k = 0; k <= 3; ++k)
                    for (int l = 0; l <= 3; ++l)
                      o.absorb(verify_phi_epi(k, l), "phi(" + std::to_string(k) + "," + std::to_string(l) + ")");
                  return o;
                }});
  es.push_back({"suspension-pushout", detail::range("k, l", kl), [kl] {
                  Outcome o;
                  for (int k = 0; k <= kl; ++k)
                    for (int l = 0; l <= kl; ++l)
                      o.absorb(verify_suspension_pushout(k, l), "square(" + std::to_string(k) + "," + std::to_string(l) + ")");
                  return o;
                }});
  es.push_back({"hom-bijection", "C in O[0..2], O[1] (x) O[1]°; " + detail::range("m", dim), [dim] {
                  Outcome o;
                  auto cs = detail::small_orientals(2);
                  cs.emplace_back("O[1](x)O[1]°", share(tensor(*oriental(1), total_dual(*oriental(1)))));
                  for (const auto& [name, c] : cs)
                    for (int m = 0; m <= dim; ++m) {
                      auto r = hom_bijection_check(c, m);
                      o.absorb(r.verdict, r.verdict == Verdict::pass ? std::vector<std::string>{} : r.details,
                               name + " m=" + std::to_string(m));
                    }
                  return o;
                }});
  es.push_back({"nerve-counts", "O[m] -> O[1], m <= 5", [] {
                  Outcome o;
                  for (int m = 0; m <= 5; ++m) {
                    auto h = enumerate_homs(oriental(m), oriental(1));
                    if (!h.complete) o.unsure("m=" + std::to_string(m) + " incomplete");
                    if (h.morphisms.size() != static_cast<std::size_t>(m + 2))
                      o.fail("m=" + std::to_string(m) + ": " + std::to_string(h.morphisms.size()) + " morphisms");
                  }
                  return o;
                }});
  es.push_back({"nu-sigma", "C in O[0..2], cells " + detail::range("dim", dim), [dim] {
                  Outcome o;
                  for (const auto& [name, c] : detail::small_orientals(2)) o.absorb(check_nu_sigma(*c, dim), name);
                  return o;
                }});
  es.push_back({"comparison-inclusion", "C in O[0..2], " + detail::range("dim", dim), [dim] {
                  Outcome o;
                  for (const auto& [name, c] : detail::small_orientals(2)) {
                    auto cmp = comparison_inclusion(c, dim);
                    if (!validate_map(cmp.map).ok()) o.fail(name + ": not a map");
                    if (!is_mono(cmp.map)) o.fail(name + ": not injective");
                    if (!is_regular_inclusion(cmp.map)) o.fail(name + ": not regular");
                    SuspectAnalysis an(c, cmp.suspended);
                    auto rep = check_complement_description(cmp, an, dim);
                    o.absorb(rep.verdict, rep.details, name + " complement");
                  }
                  return o;
                }});
  es.push_back({"suspect-machinery", "C in O[1..2], " + detail::range("dim", dim), [dim] {
                  Outcome o;
                  for (int cm = 1; cm <= 2; ++cm) {
                    const std::string name = "O[" + std::to_string(cm) + "]";
                    auto c = oriental(cm);
                    auto nerve = rs_nerve(share(suspend(*c)), dim);
                    SuspectAnalysis an(c, nerve);
                    std::size_t parents = 0;
                    for (int m = 1; m < dim; ++m)
                      for (int id : nerve->msset()->of_dim(m)) {
                        if (!an.eligible_for_parent(id)) continue;
                        auto par = parent(nerve->simplex(id), c);
                        ++parents;
                        if (!par.ok()) o.fail(name + " parent: " + par.errors.front());
                        else if (!validate_morphism(*par.simplex).ok()) o.fail(name + ": parent is not a chain map");
                      }
                    if (parents == 0) o.fail(name + ": no eligible simplices");
                    auto b = check_bijection(an, dim);
                    o.absorb(b.verdict, b.details, name + " bijection");
                    auto f = check_face_classification(an, dim);
                    o.absorb(f.verdict, f.details, name + " faces");
                    auto d = check_degeneracy_criterion(*nerve, dim);
                    o.absorb(d.verdict, d.details, name + " degeneracy criterion");
                  }
                  return o;
                }});
  es.push_back({"comparison-anodyne", "C in O[0..2], cutoff " + std::to_string(dim), [dim] {
                  Outcome o;
                  for (const auto& [name, c] : detail::small_orientals(2)) {
                    auto f = build_filtration(c, dim);
                    auto cert = certify_filtration(f);
                    for (std::size_t i = 0; i < cert.errors.size() && i < 5; ++i) o.fail(name + ": " + cert.errors[i]);
                    for (const auto& st : cert.steps)
                      if (!st.ok()) o.fail(name + ": step " + st.from + " -> " + st.to + " refused");
                    if (!cert.replay_matches) o.fail(name + ": replay differs");
                    if (!cert.truncation_matches) o.fail(name + ": final stage differs from the truncated nerve");
                  }
                  return o;
                }});
  es.push_back({"theta-constructions", "n <= 2, j <= 2, k <= 2, cutoff " + std::to_string(dim), [dim] {
                  Outcome o;
                  const std::vector<std::pair<std::string, std::vector<std::size_t>>> hand{
                      {"[1|[0]]", {2, 1}}, {"[2|[0],[0]]", {3, 2}}, {"[1|[1|[0]]]", {2, 2, 1}}};
                  for (const auto& [s, rk] : hand) {
                    auto c = theta_adc(parse_theta(s));
                    std::vector<std::size_t> got;
                    for (int q = 0; q <= c->max_degree(); ++q) got.push_back(c->rank(q));
                    if (got != rk) o.fail(s + ": ranks differ");
                    if (!validate_complex(*c).ok()) o.fail(s + ": invalid complex");
                  }
                  const auto leaf = ThetaExpr::leaf();
                  try {
                    for (int j = 1; j <= 2; ++j)
                      for (int k = 1; k <= 2; ++k) segality_map(j, k, std::vector<ThetaExpr>(k, leaf), dim);
                    for (int j = 0; j <= 1; ++j) completeness_map(j, dim);
                  } catch (const NotMonomorphism& e) {
                    o.fail(e.what());
                  }
                  return o;
                }});
  return es;
}

inline ReportEntry run_entry(const SuiteEntry& e) {
  ReportEntry r{e.id, e.params, Verdict::pass, 0, {}};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = e.run();
    r.status = o.status;
    r.details = std::move(o.details);
  } catch (const IncompleteEnumeration& ex) {
    r.status = Verdict::indeterminate;
    r.details.push_back(ex.what());
  } catch (const std::exception& ex) {
    r.status = Verdict::fail;
    r.details.push_back(std::string("exception: ") + ex.what());
  }
  r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Entries run on up to `jobs` threads; the report keeps the entry order.
inline VerificationReport run_suite(Profile p, unsigned jobs = 1) {
  auto es = suite_entries(p);
  VerificationReport rep;
  rep.profile = p == Profile::full ? "full" : "quick";
  rep.entries.resize(es.size());
  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < es.size(); i = next++) rep.entries[i] = run_entry(es[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rep;
}

}  // namespace orient
