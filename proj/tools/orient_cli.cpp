#include <CLI11.hpp>

#include <iostream>
#include <regex>

#include "orient/suite.hpp"

using namespace orient;

namespace {

struct Output {
  bool json = false;
  std::string out;

  // JSON goes to --out when given, to stdout with --json; text otherwise.
  int emit(const Json& j, const std::string& text, int code = 0) const {
    if (!out.empty()) write_json_file(out, j);
    if (json)
      std::cout << j.dump(2) << '\n';
    else
      std::cout << text;
    return code;
  }
};

// "O[n]" for an oriental, otherwise a JSON file.
ComplexPtr load_complex(const std::string& source) {
  static const std::regex oriental_re(R"(O\[(\d+)\])");
  std::smatch m;
  if (std::regex_match(source, m, oriental_re)) return oriental(std::stoi(m[1]));
  return share(complex_from_json(read_json_file(source)));
}

std::string describe(const BasedComplex& c) {
  std::ostringstream s;
  s << "ranks:";
  for (int q = 0; q <= c.max_degree(); ++q) s << ' ' << c.rank(q);
  s << '\n';
  for (int q = 0; q <= c.max_degree(); ++q) {
    s << "  degree " << q << ':';
    for (const auto& b : c.basis(q)) s << ' ' << b;
    s << '\n';
  }
  return s.str();
}

int verdict_code(Verdict v) { return v == Verdict::pass ? 0 : v == Verdict::fail ? 1 : 2; }

std::string counts_line(const MarkedSimplicialSet& x) {
  std::ostringstream s;
  s << "non-degenerate simplices by dimension:";
  for (int d = 0; d <= x.max_dim(); ++d) s << ' ' << x.of_dim(d).size();
  s << '\n';
  return s.str();
}

Variant variant_from(const std::string& s) {
  if (s == "plain") return Variant::plain;
  if (s == "prime") return Variant::prime;
  if (s == "doubleprime") return Variant::doubleprime;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orient: augmented directed complexes, nerves and suspension"};
  app.require_subcommand(1);
  app.fallthrough();
  Output o;
  int cap = kDefaultCap;
  app.add_flag("--json", o.json, "print JSON instead of text");
  app.add_option("--out", o.out, "also write JSON to this file");
  app.add_option("--cap", cap, "search cap for unbounded enumerations");

  std::function<int()> action;

  // oriental
  auto* ori = app.add_subcommand("oriental", "the oriental O[m]");
  int om = 0;
  ori->add_option("m", om, "dimension")->required()->check(CLI::Range(0, 12));
  ori->callback([&] {
    action = [&] {
      auto c = oriental(om);
      return o.emit(to_json(*c), describe(*c));
    };
  });

  // adch
  auto* adch = app.add_subcommand("adch", "constructions on based complexes");
  adch->require_subcommand(1);
  std::string ca, cb, at_a, at_b;
  int pk = 0, pl = 0;
  auto unary = [&](const std::string& name, const std::string& help, std::function<BasedComplex(const BasedComplex&)> f) {
    auto* s = adch->add_subcommand(name, help);
    s->add_option("--complex", ca, "O[n] or a complex JSON file")->required();
    s->callback([&, f] {
      action = [&, f] {
        auto c = f(*load_complex(ca));
        return o.emit(to_json(c), describe(c));
      };
    });
  };
  unary("suspend", "two-point suspension", [](const BasedComplex& c) { return suspend(c); });
  unary("dual", "total dual", [](const BasedComplex& c) { return total_dual(c); });
  auto binary = [&](const std::string& name, const std::string& help, std::function<BasedComplex(const BasedComplex&, const BasedComplex&)> f) {
    auto* s = adch->add_subcommand(name, help);
    s->add_option("--complex", ca, "left factor")->required();
    s->add_option("--with", cb, "right factor")->required();
    s->callback([&, f] {
      action = [&, f] {
        auto c = f(*load_complex(ca), *load_complex(cb));
        return o.emit(to_json(c), describe(c));
      };
    });
    return s;
  };
  binary("tensor", "tensor product", [](const BasedComplex& a, const BasedComplex& b) { return tensor(a, b); });
  binary("sum", "direct sum", [](const BasedComplex& a, const BasedComplex& b) { return direct_sum(a, b); });
  auto* wedge = binary("wedge", "glue two complexes at a vertex",
                       [&](const BasedComplex& a, const BasedComplex& b) { return wedge_at_point(a, at_a, b, at_b); });
  wedge->add_option("--at", at_a, "vertex of the left complex")->required();
  wedge->add_option("--at-with", at_b, "vertex of the right complex")->required();
  auto* phi = adch->add_subcommand("phi", "the map O[k+1+l] -> Sigma(O[k] (x) O[l]°)");
  phi->add_option("k", pk)->required()->check(CLI::Range(0, 6));
  phi->add_option("l", pl)->required()->check(CLI::Range(0, 6));
  phi->callback([&] {
    action = [&] {
      auto f = phi_map(pk, pl);
      auto rep = validate_morphism(f);
      std::ostringstream s;
      s << "phi(" << pk << "," << pl << "): " << (rep.ok() ? "chain map" : rep.violations.front()) << '\n';
      return o.emit(to_json(f), s.str(), rep.ok() ? 0 : 1);
    };
  });

  // hom
  auto* hom = app.add_subcommand("hom", "enumerate morphisms between based complexes");
  std::string hs, ht;
  hom->add_option("--source", hs)->required();
  hom->add_option("--target", ht)->required();
  hom->callback([&] {
    action = [&] {
      auto h = enumerate_homs(load_complex(hs), load_complex(ht), cap);
      Json ms = Json::array();
      for (const auto& f : h.morphisms) ms.push_back(to_json(f)["matrices"]);
      std::ostringstream s;
      s << h.morphisms.size() << " morphisms" << (h.complete ? "" : " (incomplete)") << '\n';
      return o.emit({{"count", h.morphisms.size()}, {"complete", h.complete}, {"morphisms", ms}}, s.str(), h.complete ? 0 : 2);
    };
  });

  // nu
  auto* nu = app.add_subcommand("nu", "cells of the associated omega-category");
  std::string nc;
  int nd = 3;
  nu->add_option("--complex", nc)->required();
  nu->add_option("--max-dim", nd)->check(CLI::Range(0, 8));
  nu->callback([&] {
    action = [&] {
      auto e = enumerate_cells(*load_complex(nc), nd, cap);
      Json cells = Json::array();
      std::ostringstream s;
      s << "cells by dimension:";
      for (const auto& level : e.cells) {
        Json l = Json::array();
        for (const auto& x : level) l.push_back(to_json(x));
        cells.push_back(l);
        s << ' ' << level.size();
      }
      s << (e.complete ? "" : " (incomplete)") << '\n';
      return o.emit({{"complete", e.complete}, {"cells", cells}}, s.str(), e.complete ? 0 : 2);
    };
  });

  // msset
  auto* ms = app.add_subcommand("msset", "standard marked simplices and horns");
  std::string shape = "simplex", variant = "plain";
  int mm = 2, mk = 1;
  ms->add_option("shape", shape, "simplex, horn or boundary")->check(CLI::IsMember({"simplex", "horn", "boundary"}));
  ms->add_option("--m", mm)->check(CLI::Range(0, 10));
  ms->add_option("--k", mk)->check(CLI::Range(0, 10));
  ms->add_option("--variant", variant)->check(CLI::IsMember({"plain", "prime", "doubleprime"}));
  ms->callback([&] {
    action = [&] {
      MarkedSimplicialSet x = shape == "boundary" ? boundary_simplex(mm)
                              : shape == "horn"   ? horn(mm, mk, variant_from(variant))
                                                  : standard(mm, mk, variant_from(variant));
      return o.emit(to_json(x), counts_line(x));
    };
  });

  // nerve
  auto* ner = app.add_subcommand("nerve", "Roberts-Street nerves");
  auto* ncomp = ner->add_subcommand("compute", "nerve of a complex up to a dimension");
  ner->require_subcommand(1);
  std::string nerve_c;
  bool nerve_susp = false;
  int nerve_d = 3;
  ncomp->add_option("--complex", nerve_c)->required();
  ncomp->add_flag("--suspend", nerve_susp, "use the suspension of the complex");
  ncomp->add_option("--max-dim", nerve_d)->check(CLI::Range(0, 8));
  ncomp->callback([&] {
    action = [&] {
      auto c = load_complex(nerve_c);
      if (nerve_susp) c = share(suspend(*c));
      auto n = rs_nerve(c, nerve_d, cap);
      std::ostringstream s;
      s << counts_line(*n->msset());
      s << "all simplices by dimension:";
      for (int m = 0; m <= nerve_d; ++m) s << ' ' << n->count(m);
      s << '\n';
      return o.emit(to_json(*n->msset()), s.str());
    };
  });

  // suspect
  auto* sus = app.add_subcommand("suspect", "suspect indices in the nerve of a suspension");
  auto* srep = sus->add_subcommand("report", "profile every non-degenerate simplex");
  sus->require_subcommand(1);
  std::string sc;
  int sd = 3;
  srep->add_option("--complex", sc)->required();
  srep->add_option("--max-dim", sd)->check(CLI::Range(1, 7));
  srep->callback([&] {
    action = [&] {
      auto c = load_complex(sc);
      auto n = rs_nerve(share(suspend(*c)), sd, cap);
      SuspectAnalysis an(c, n);
      Json rows = Json::array();
      std::ostringstream s;
      s << "id dim type index suspect\n";
      for (const auto& p : an.profiles()) {
        const std::string idx = p.totally_degenerate ? "-" : p.index ? std::to_string(*p.index) : "n/a";
        rows.push_back({{"id", p.id}, {"dim", p.dim}, {"type", p.type}, {"index", idx}, {"suspect", p.suspect}});
        s << p.id << ' ' << p.dim << ' ' << p.type << ' ' << idx << ' ' << (p.suspect ? "yes" : "no") << '\n';
      }
      return o.emit({{"simplices", rows}}, s.str());
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "check a statement on given parameters");
  ver->require_subcommand(1);
  std::string vc;
  int vk = 1, vl = 1, vm = 3, vcut = 3;
  auto* thmb = ver->add_subcommand("thmB", "certify Sigma N C -> N Sigma C up to a cutoff");
  thmb->add_option("--complex", vc)->required();
  thmb->add_option("--cutoff", vcut)->check(CLI::Range(0, 6));
  thmb->callback([&] {
    action = [&] {
      auto f = build_filtration(load_complex(vc), vcut, cap);
      auto cert = certify_filtration(f);
      std::ostringstream s;
      std::size_t horns = 0;
      for (const auto& st : cert.steps) horns += st.attachments.size();
      s << (cert.complete() ? "certified" : "refused") << ": " << cert.steps.size() << " steps, " << horns
        << " horn attachments\n";
      for (const auto& e : cert.errors) s << "  " << e << '\n';
      return o.emit(to_json(cert), s.str(), cert.complete() ? 0 : 1);
    };
  });
  auto check_cmd = [&](const std::string& name, const std::string& help, std::function<CheckResult()> f) {
    auto* s = ver->add_subcommand(name, help);
    s->add_option("--k", vk)->check(CLI::Range(0, 5));
    s->add_option("--l", vl)->check(CLI::Range(0, 5));
    s->callback([&, f, name] {
      action = [&, f, name] {
        auto r = f();
        std::ostringstream t;
        t << name << ' ' << vk << ' ' << vl << ": " << (r.ok ? "pass" : "fail") << '\n';
        for (const auto& d : r.details) t << "  " << d << '\n';
        return o.emit({{"ok", r.ok}, {"details", r.details}}, t.str(), r.ok ? 0 : 1);
      };
    });
  };
  check_cmd("pushout", "the suspension pushout square", [&] { return verify_suspension_pushout(vk, vl); });
  check_cmd("epi", "phi is an epimorphism", [&] { return verify_phi_epi(vk, vl); });
  auto* bij = ver->add_subcommand("bijection", "parent and d_r are inverse up to a dimension");
  bij->add_option("--complex", vc)->required();
  bij->add_option("--max-dim", vm)->check(CLI::Range(1, 6));
  bij->callback([&] {
    action = [&] {
      auto c = load_complex(vc);
      SuspectAnalysis an(c, rs_nerve(share(suspend(*c)), vm, cap));
      auto r = check_bijection(an, vm);
      std::ostringstream s;
      s << verdict_name(r.verdict) << ": " << r.suspect_count << " suspect, " << r.nonsuspect_count << " non-suspect\n";
      for (const auto& d : r.details) s << "  " << d << '\n';
      return o.emit({{"status", verdict_name(r.verdict)}, {"suspect", r.suspect_count}, {"nonsuspect", r.nonsuspect_count},
                     {"details", r.details}},
                    s.str(), verdict_code(r.verdict));
    };
  });
  auto* homset = ver->add_subcommand("homset", "adCh(O[m], Sigma C) against tensor hom-sets");
  homset->add_option("--complex", vc)->required();
  homset->add_option("--m", vm)->check(CLI::Range(0, 6));
  homset->callback([&] {
    action = [&] {
      auto r = hom_bijection_check(load_complex(vc), vm, cap);
      std::ostringstream s;
      s << verdict_name(r.verdict) << ": " << r.left << " vs " << r.right << '\n';
      for (const auto& d : r.details) s << "  " << d << '\n';
      return o.emit({{"status", verdict_name(r.verdict)}, {"left", r.left}, {"right", r.right}, {"details", r.details}}, s.str(),
                    verdict_code(r.verdict));
    };
  });

  // theta
  auto* th = app.add_subcommand("theta", "Theta objects and extension maps");
  th->require_subcommand(1);
  std::string expr = "[1|[0]]", children = "[0],[0]";
  int tj = 1, tcut = 3, tl = 0;
  auto* tb = th->add_subcommand("build", "the complex of a Theta object");
  tb->add_option("expr", expr)->required();
  tb->callback([&] {
    action = [&] {
      auto c = theta_adc(parse_theta(expr));
      return o.emit(to_json(*c), describe(*c));
    };
  });
  auto* tn = th->add_subcommand("nerve", "nerve of a Theta object times a marked simplex");
  tn->add_option("expr", expr)->required();
  tn->add_option("--l", tl, "times the fully marked l-simplex")->check(CLI::Range(0, 4));
  tn->add_option("--cutoff", tcut)->check(CLI::Range(0, 6));
  tn->callback([&] {
    action = [&] {
      auto x = ln_generator(parse_theta(expr), tl, tcut, cap);
      return o.emit(to_json(x), counts_line(x));
    };
  });
  auto ext_text = [](const ThetaExtension& e) {
    std::ostringstream s;
    s << e.name << ": monomorphism\n  source " << counts_line(*e.map.source) << "  target " << counts_line(*e.map.target);
    if (!e.note.empty()) s << "  note: " << e.note << '\n';
    return s.str();
  };
  auto* tsg = th->add_subcommand("segality", "j-fold k-Segality extension");
  tsg->add_option("--j", tj)->check(CLI::Range(1, 4));
  tsg->add_option("--children", children, "comma separated Theta expressions");
  tsg->add_option("--cutoff", tcut)->check(CLI::Range(0, 6));
  tsg->callback([&] {
    action = [&] {
      // split at top-level commas
      std::vector<ThetaExpr> ts;
      int depth = 0;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= children.size(); ++i) {
        if (i == children.size() || (children[i] == ',' && depth == 0)) {
          ts.push_back(parse_theta(children.substr(start, i - start)));
          start = i + 1;
        } else if (children[i] == '[') {
          ++depth;
        } else if (children[i] == ']') {
          --depth;
        }
      }
      auto e = segality_map(tj, static_cast<int>(ts.size()), ts, tcut, cap);
      return o.emit({{"name", e.name}, {"note", e.note}, {"map", to_json(e.map)}}, ext_text(e));
    };
  });
  auto* tcm = th->add_subcommand("completeness", "j-fold completeness extension");
  tcm->add_option("--j", tj)->check(CLI::Range(0, 4));
  tcm->add_option("--cutoff", tcut)->check(CLI::Range(0, 6));
  tcm->callback([&] {
    action = [&] {
      auto e = completeness_map(tj, tcut, cap);
      return o.emit({{"name", e.name}, {"map", to_json(e.map)}}, ext_text(e));
    };
  });

  // suite
  auto* su = app.add_subcommand("suite", "run the verification suite");
  std::string prof = "quick";
  unsigned jobs = 1;
  su->add_option("--profile", prof)->check(CLI::IsMember({"quick", "full"}));
  su->add_option("--jobs", jobs)->check(CLI::Range(1u, 64u));
  su->callback([&] {
    action = [&] {
      auto r = run_suite(profile_from_name(prof), jobs);
      std::ostringstream s;
      for (const auto& e : r.entries) {
        s << verdict_name(e.status) << "  " << e.id << " (" << e.params << ") " << e.elapsed_s << "s\n";
        for (const auto& d : e.details) s << "    " << d << '\n';
      }
      return o.emit(to_json(r), s.str(), r.exit_code());
    };
  });

  CLI11_PARSE(app, argc, argv);
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
