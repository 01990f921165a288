#pragma once

#include <numeric>
#include <functional>
#include <set>
#include <unordered_set>

#include "json_io.hpp"
#include "suspect.hpp"

namespace orient {

// A non-suspect x together with its parent, attached in one horn step.
struct AttachedPair {
  int x = -1, parent = -1;  // ambient ids
  int m = 0, k = 0, r = 0;  // x has dimension m, type k and suspect index r
  bool x_marked = false;
};

struct FiltrationStage {
  std::string label;  // X_m, Y_k or W_r
  int m = 0, k = -1, r = -1;
  SubObject sub;
  std::vector<AttachedPair> added;
};

struct Filtration {
  ComplexPtr base;
  Comparison cmp;
  std::shared_ptr<const SuspectAnalysis> analysis;
  int cutoff = 0;
  std::vector<FiltrationStage> stages;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
  const MssetPtr& ambient() const { return cmp.suspended->msset(); }
};

inline std::string stage_label(const FiltrationStage& s) {
  std::string out = s.label;
  if (s.label != "X") out += " m=" + std::to_string(s.m);
  if (s.label == "X") out += "_" + std::to_string(s.m);
  if (s.label == "Y") out += " k=" + std::to_string(s.k);
  if (s.label == "W") out += " k=" + std::to_string(s.k) + " r=" + std::to_string(s.r);
  return out;
}

// X_0 = Sigma N C inside N Sigma C, then for each m the Y_k (k = m-2 .. 0) and
// within those the W_r (r = 1 .. k+1). Needs the nerve one dimension above the cutoff.
inline Filtration build_filtration(const ComplexPtr& c, int cutoff, int cap = kDefaultCap) {
  Filtration f;
  f.base = c;
  f.cutoff = cutoff;
  f.cmp = comparison_inclusion(c, cutoff + 1, cap);
  f.analysis = std::make_shared<const SuspectAnalysis>(c, f.cmp.suspended);
  const auto& an = *f.analysis;
  const Nerve& n = *f.cmp.suspended;
  const auto& amb = *f.ambient();

  for (std::size_t id = 0; id < amb.size(); ++id) {
    const auto& p = an.profile(static_cast<int>(id));
    if (an.in_complement(static_cast<int>(id)) && p.index == 0)
      f.errors.push_back("non-degenerate simplex of suspect index 0 outside the image: " + simplex_name(p));
  }

  SubObject cur = comparison_image(f.cmp);
  if (!closed_under_faces(cur)) f.errors.push_back("X_0 is not closed under faces");
  f.stages.push_back({"X", 0, -1, -1, cur, {}});

  for (int m = 1; m <= cutoff; ++m) {
    for (int k = m - 2; k >= 0; --k) {
      for (int r = 1; r <= k + 1; ++r) {
        std::vector<AttachedPair> pairs;
        std::vector<int> seeds;
        for (int id : amb.of_dim(m)) {
          const auto& p = an.profile(id);
          if (!an.eligible_for_parent(id) || p.type != k || p.index != r) continue;
          auto par = parent(n.simplex(id), c);
          if (!par.ok()) {
            f.errors.push_back("no parent for " + simplex_name(p) + ": " + par.errors.front());
            continue;
          }
          auto loc = n.find(*par.simplex);
          if (!loc || loc->degenerate()) {
            f.errors.push_back("parent of " + simplex_name(p) + " is not a non-degenerate simplex");
            continue;
          }
          pairs.push_back({id, loc->id, m, k, r, amb[id].marked});
          seeds.push_back(loc->id);
        }
        if (pairs.empty()) continue;
        SubObject next = smallest_regular_containing(f.ambient(), seeds, cur);
        std::size_t added = next.count() - cur.count();
        if (added != 2 * pairs.size())
          f.errors.push_back("W step m=" + std::to_string(m) + " k=" + std::to_string(k) + " r=" + std::to_string(r) +
                             " adds " + std::to_string(added) + " simplices for " + std::to_string(pairs.size()) + " pairs");
        for (const auto& pr : pairs)
          if (cur.contains(pr.x) || cur.contains(pr.parent)) f.errors.push_back("pair already present at W step");
        cur = next;
        f.stages.push_back({"W", m, k, r, cur, std::move(pairs)});
      }
      f.stages.push_back({"Y", m, k, -1, cur, {}});
    }
    // X_m as the closure of its stated contents
    std::vector<int> seeds;
    for (int d = 0; d <= m; ++d)
      for (int id : amb.of_dim(d)) seeds.push_back(id);
    for (int id : amb.of_dim(m + 1))
      if (an.in_complement(id) && an.profile(id).suspect) seeds.push_back(id);
    SubObject expected = smallest_regular_containing(f.ambient(), seeds, f.stages.front().sub);
    if (!(expected == cur)) f.errors.push_back("X_" + std::to_string(m) + " differs from its description");
    f.stages.push_back({"X", m, -1, -1, cur, {}});
  }

  for (std::size_t i = 1; i < f.stages.size(); ++i) {
    const auto& a = f.stages[i - 1].sub;
    const auto& b = f.stages[i].sub;
    for (std::size_t id = 0; id < a.member.size(); ++id)
      if (a.member[id] && !b.member[id]) f.errors.push_back(stage_label(f.stages[i]) + " does not contain its predecessor");
    if (!closed_under_faces(b)) f.errors.push_back(stage_label(f.stages[i]) + " is not closed under faces");
  }
  for (int d = 0; d <= cutoff; ++d)
    for (int id : amb.of_dim(d))
      if (!cur.contains(id)) {
        f.errors.push_back("final stage misses a simplex of dimension " + std::to_string(d));
        break;
      }
  return f;
}

// ---- certificates ----

struct AttachmentRecord {
  AttachedPair pair;
  int horn_dim = 0;  // m+1
  Variant variant = Variant::plain;
  bool faces_present = true, horn_marked = true, primed_faces_marked = true, filler_thin = true;
  bool ok() const { return faces_present && horn_marked && primed_faces_marked && filler_thin; }
};

struct StepCertificate {
  std::string from, to;
  std::vector<AttachmentRecord> attachments;
  bool replay_matches = false;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty() && replay_matches; }
};

struct AnodyneCertificate {
  std::vector<StepCertificate> steps;
  bool replay_matches = false;  // full replay from the start reproduces the final stage
  bool truncation_matches = false;
  std::vector<std::string> errors;
  bool complete() const {
    if (!errors.empty() || !replay_matches || !truncation_matches) return false;
    return std::all_of(steps.begin(), steps.end(), [](const StepCertificate& s) { return s.ok(); });
  }
};

namespace detail {

// A growing object with its embedding in the ambient nerve.
struct Replay {
  MssetPtr ambient;
  MssetPtr cur;
  std::vector<int> to_amb;
  std::unordered_map<int, int> from_amb;

  explicit Replay(const SubObject& start) : ambient(start.ambient) {
    auto mat = materialise(start);
    cur = mat.set;
    for (const auto& img : mat.inclusion.images) {
      from_amb[img.id] = static_cast<int>(to_amb.size());
      to_amb.push_back(img.id);
    }
  }

  MssetMap embedding() const {
    MssetMap h{cur, ambient, {}};
    for (int a : to_amb) h.images.push_back(nondegenerate(a, (*ambient)[a].dim));
    return h;
  }

  // Glue Delta^r[n] (variant) along its horn at the ambient simplex y.
  std::string attach(int y, int r, Variant variant) {
    const int n = (*ambient)[y].dim;
    auto hornset = share(horn(n, r, variant));
    auto simplex = share(standard(n, r, variant == Variant::prime ? Variant::doubleprime : Variant::plain));
    MssetMap incl = subset_inclusion(hornset, simplex);
    MssetMap g{hornset, cur, {}};
    const SimplexRef top = nondegenerate(y, n);
    for (std::size_t id = 0; id < hornset->size(); ++id) {
      const SimplexRef s = ambient->act(top, parse_simplex_label((*hornset)[static_cast<int>(id)].name));
      auto it = from_amb.find(s.id);
      if (it == from_amb.end()) return "horn simplex " + (*hornset)[static_cast<int>(id)].name + " is missing";
      g.images.push_back({it->second, s.map});
    }
    auto po = pushout(incl, g);
    cur = po.object;
    for (std::size_t id = 0; id < simplex->size(); ++id) {
      const int nid = po.x_new[id];
      if (nid < 0) continue;
      const SimplexRef s = ambient->act(top, parse_simplex_label((*simplex)[static_cast<int>(id)].name));
      if (s.degenerate()) return "attached simplex is degenerate in the nerve";
      if (nid != static_cast<int>(to_amb.size())) return "unexpected id order in pushout";
      from_amb[s.id] = nid;
      to_amb.push_back(s.id);
    }
    return {};
  }
};

inline std::string subobject_json(const SubObject& s) { return canonical_json(materialise(s).inclusion); }

inline bool contains_all(Mask s, Mask need) { return (s & need) == need; }

}  // namespace detail

// Check the horn data of every pair added between prev and next, then replay the pushouts.
inline StepCertificate certify_step(const Filtration& f, std::size_t prev_index, std::size_t next_index) {
  StepCertificate cert;
  const auto& prev = f.stages.at(prev_index);
  const auto& next = f.stages.at(next_index);
  cert.from = stage_label(prev);
  cert.to = stage_label(next);
  const auto& amb = *f.ambient();

  std::set<int> expected;
  for (std::size_t id = 0; id < next.sub.member.size(); ++id)
    if (next.sub.contains(static_cast<int>(id)) && !prev.sub.contains(static_cast<int>(id))) expected.insert(static_cast<int>(id));
  std::set<int> paired;
  for (const auto& p : next.added) {
    paired.insert(p.x);
    paired.insert(p.parent);
  }
  if (paired != expected) cert.errors.push_back("added simplices are not exactly the matched pairs");

  auto present = [&](const SimplexRef& s) { return prev.sub.contains(s.id); };
  auto marked = [&](const SimplexRef& s) { return amb.is_marked(s); };

  std::vector<AttachedPair> order = next.added;
  std::sort(order.begin(), order.end(), [](const AttachedPair& a, const AttachedPair& b) { return a.parent < b.parent; });
  for (const auto& p : order) {
    AttachmentRecord rec;
    rec.pair = p;
    rec.horn_dim = p.m + 1;
    rec.variant = p.x_marked ? Variant::prime : Variant::plain;
    const int n = p.m + 1, r = p.r;
    const SimplexRef top = nondegenerate(p.parent, n);
    const auto& y = amb[p.parent];
    for (int a = 0; a <= n; ++a) {
      if (a == r) {
        if (y.faces[a].id != p.x || y.faces[a].degenerate()) rec.faces_present = false;
        continue;
      }
      if (!present(y.faces[a])) rec.faces_present = false;
    }
    // (b): horn simplices that are admissible must already be marked
    const Mask need = ((Mask{1} << (r - 1)) | (Mask{1} << r) | (Mask{1} << (r + 1))) & full_mask(n);
    const Mask missing_face = full_mask(n) & ~(Mask{1} << r);
    for (Mask s = 1; s <= full_mask(n); ++s) {
      if (s == full_mask(n) || s == missing_face) continue;
      if (!detail::contains_all(s, need)) continue;
      if (!marked(amb.act(top, vertices_of(s)))) rec.horn_marked = false;
    }
    if (p.x_marked)
      for (int a : {r - 1, r + 1})
        if (!marked(y.faces[a])) rec.primed_faces_marked = false;
    if (!y.marked) rec.filler_thin = false;
    if (!rec.ok())
      cert.errors.push_back("attachment of #" + std::to_string(p.parent) + " fails:" + (rec.faces_present ? "" : " faces") +
                            (rec.horn_marked ? "" : " horn-marking") + (rec.primed_faces_marked ? "" : " primed-faces") +
                            (rec.filler_thin ? "" : " filler-not-thin"));
    cert.attachments.push_back(rec);
  }

  detail::Replay rp(prev.sub);
  for (const auto& rec : cert.attachments) {
    auto err = rp.attach(rec.pair.parent, rec.pair.r, rec.variant);
    if (!err.empty()) cert.errors.push_back(err);
  }
  const MssetMap h = rp.embedding();
  cert.replay_matches = cert.errors.empty() && validate_map(h).ok() && is_regular_inclusion(h) &&
                        canonical_json(h) == detail::subobject_json(next.sub);
  if (!cert.replay_matches && cert.errors.empty()) cert.errors.push_back("replayed pushout differs from " + cert.to);
  return cert;
}

// Certificates for every consecutive pair of distinct stages, then a full replay from X_0.
inline AnodyneCertificate certify_filtration(const Filtration& f) {
  AnodyneCertificate cert;
  for (const auto& e : f.errors) cert.errors.push_back(e);
  std::size_t prev = 0;
  for (std::size_t i = 1; i < f.stages.size(); ++i) {
    if (f.stages[i].added.empty()) {
      if (!(f.stages[i].sub == f.stages[prev].sub)) cert.errors.push_back(stage_label(f.stages[i]) + " changes without attachments");
      continue;
    }
    cert.steps.push_back(certify_step(f, prev, i));
    prev = i;
  }
  cert.replay_matches = false;
  detail::Replay rp(f.stages.front().sub);
  bool ok = true;
  for (const auto& st : cert.steps)
    for (const auto& rec : st.attachments) {
      auto err = rp.attach(rec.pair.parent, rec.pair.r, rec.variant);
      if (!err.empty()) {
        cert.errors.push_back("full replay: " + err);
        ok = false;
      }
    }
  const MssetMap h = rp.embedding();
  cert.replay_matches = ok && canonical_json(h) == detail::subobject_json(f.stages.back().sub);
  // everything up to the cutoff, compared with the nerve truncated there
  SubObject replayed = empty_subobject(f.ambient());
  for (int a : rp.to_amb)
    if ((*f.ambient())[a].dim <= f.cutoff) replayed.member[a] = 1;
  SubObject truncated = empty_subobject(f.ambient());
  for (int d = 0; d <= f.cutoff; ++d)
    for (int id : f.ambient()->of_dim(d)) truncated.member[id] = 1;
  cert.truncation_matches = detail::subobject_json(replayed) == detail::subobject_json(truncated);
  return cert;
}

inline Json to_json(const AnodyneCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json at = Json::array();
    for (const auto& a : s.attachments)
      at.push_back({{"horn", {{"m", a.horn_dim}, {"r", a.pair.r}, {"variant", variant_name(a.variant)}}},
                    {"attached", a.pair.parent},
                    {"face", a.pair.x},
                    {"type", a.pair.k},
                    {"checks",
                     {{"faces_present", a.faces_present},
                      {"horn_marked", a.horn_marked},
                      {"primed_faces_marked", a.primed_faces_marked},
                      {"filler_thin", a.filler_thin}}}});
    steps.push_back({{"from", s.from}, {"to", s.to}, {"attachments", at}, {"replay_matches", s.replay_matches}, {"errors", s.errors}});
  }
  return {{"steps", steps},
          {"replay_matches", c.replay_matches},
          {"truncation_matches", c.truncation_matches},
          {"complete", c.complete()},
          {"errors", c.errors}};
}

// ---- search for a certificate of an arbitrary regular inclusion ----

struct GeneratorStep {
  enum Kind { horn_extension, thinness_extension } kind = horn_extension;
  int simplex = -1;  // id in the target
  int n = 0, k = 0;
};

struct SearchResult {
  std::optional<std::vector<GeneratorStep>> steps;
  std::size_t explored = 0;
  std::string diagnostic;
};

// Inner horn extensions Lambda^k[n] -> Delta^k[n] and thinness extensions
// Delta^k[n]' -> Delta^k[n]'' realising incl, found by depth-first search with a node budget.
inline SearchResult certify_inner_anodyne(const MssetMap& incl, std::size_t budget) {
  SearchResult res;
  if (!is_regular_inclusion(incl)) {
    res.diagnostic = "not a regular inclusion";
    return res;
  }
  const auto& b = *incl.target;
  const std::size_t size = b.size();
  std::vector<char> member(size, 0), mark(size, 0);
  for (const auto& img : incl.images) {
    member[img.id] = 1;
    mark[img.id] = b[img.id].marked;
  }
  auto is_marked = [&](const SimplexRef& s) { return s.degenerate() || mark[s.id]; };
  auto done = [&]() {
    for (std::size_t id = 0; id < size; ++id)
      if (!member[id] || mark[id] != static_cast<char>(b[static_cast<int>(id)].marked)) return false;
    return true;
  };
  // admissible faces of y (those containing k-1, k, k+1) other than the top
  auto admissible_marked = [&](int y, int n, int k, Mask skip) {
    const Mask need = ((Mask{1} << (k - 1)) | (Mask{1} << k) | (Mask{1} << (k + 1))) & full_mask(n);
    for (Mask s = 1; s < full_mask(n); ++s) {
      if (s == skip || !detail::contains_all(s, need)) continue;
      if (!is_marked(b.act(nondegenerate(y, n), vertices_of(s)))) return false;
    }
    return true;
  };
  auto candidates = [&]() {
    std::vector<GeneratorStep> out;
    for (int n = 1; n <= b.max_dim(); ++n)
      for (int y : b.of_dim(n)) {
        const auto& s = b[y];
        if (member[y]) {
          // thinness: mark face k once faces k-1, k+1 and the admissible ones are marked
          if (!mark[y]) continue;
          for (int k = 1; k < n; ++k) {
            const auto& fk = s.faces[k];
            if (fk.degenerate() || mark[fk.id] || !b[fk.id].marked) continue;
            if (!is_marked(s.faces[k - 1]) || !is_marked(s.faces[k + 1])) continue;
            if (!admissible_marked(y, n, k, full_mask(n) & ~(Mask{1} << k))) continue;
            out.push_back({GeneratorStep::thinness_extension, y, n, k});
          }
          continue;
        }
        if (!b[y].marked || n < 2) continue;
        int missing = -1, count = 0;
        for (int a = 0; a <= n; ++a)
          if (!member[s.faces[a].id]) {
            missing = a;
            ++count;
          }
        if (count != 1 || missing == 0 || missing == n || s.faces[missing].degenerate()) continue;
        // the missing face's own faces must be present
        bool closed = true;
        for (const auto& ff : b[s.faces[missing].id].faces) closed = closed && member[ff.id];
        if (!closed || !admissible_marked(y, n, missing, full_mask(n) & ~(Mask{1} << missing))) continue;
        out.push_back({GeneratorStep::horn_extension, y, n, missing});
      }
    return out;
  };
  std::vector<GeneratorStep> path;
  std::unordered_set<std::string> seen;
  std::function<bool()> dfs = [&]() -> bool {
    if (done()) return true;
    if (++res.explored > budget) return false;
    std::string key(member.begin(), member.end());
    key.append(mark.begin(), mark.end());
    if (!seen.insert(key).second) return false;
    for (const auto& st : candidates()) {
      const auto& s = b[st.simplex];
      int changed_face = -1;
      if (st.kind == GeneratorStep::horn_extension) {
        changed_face = s.faces[st.k].id;
        member[st.simplex] = member[changed_face] = 1;
        mark[st.simplex] = 1;
      } else {
        changed_face = s.faces[st.k].id;
        mark[changed_face] = 1;
      }
      path.push_back(st);
      if (dfs()) return true;
      path.pop_back();
      if (st.kind == GeneratorStep::horn_extension) {
        member[st.simplex] = member[changed_face] = 0;
        mark[st.simplex] = 0;
      } else {
        mark[changed_face] = 0;
      }
      if (res.explored > budget) return false;
    }
    return false;
  };
  if (dfs()) {
    res.steps = path;
  } else {
    res.diagnostic = res.explored > budget ? "budget exhausted" : "no generator sequence found";
  }
  return res;
}

}  // namespace orient
