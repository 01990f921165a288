// One line per acceptance criterion; exit status is nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <iostream>

#include "orient/suite.hpp"

using namespace orient;

namespace {

// Time limits in seconds.
constexpr double kLimit[13] = {0, 1, 1, 1, 5, 60, 5, 60, 120, 300, 300, 60, 120};

struct Line {
  bool ok = true;
  std::string note;
  void require(bool c, const std::string& why) {
    if (!c && ok) {
      ok = false;
      note = why;
    }
  }
};

// Monotone maps [m] -> [n], counted by listing them.
std::size_t monotone_maps(int m, int n) {
  std::size_t count = 0;
  std::vector<int> f(m + 1, 0);
  while (true) {
    ++count;
    int i = m;
    while (i >= 0 && f[i] == n) --i;
    if (i < 0) break;
    ++f[i];
    for (int j = i + 1; j <= m; ++j) f[j] = f[i];
  }
  return count;
}

const std::vector<SuiteEntry>& full_entries() {
  static const auto es = suite_entries(Profile::full);
  return es;
}

ReportEntry run_named(const std::string& id) {
  for (const auto& e : full_entries())
    if (e.id == id) return run_entry(e);
  throw std::logic_error("no suite entry " + id);
}

void from_entry(Line& l, const std::string& id) {
  auto r = run_named(id);
  l.require(r.status == Verdict::pass, id + " " + std::string(verdict_name(r.status)) + (r.details.empty() ? "" : ": " + r.details.front()));
}

Line criterion(int n) {
  Line l;
  switch (n) {
    case 1:
      for (int m = 0; m <= 6; ++m) {
        auto c = oriental(m);
        l.require(validate_complex(*c).ok(), "O[" + std::to_string(m) + "] invalid");
        for (int q = 0; q <= m; ++q)
          l.require(c->rank(q) == static_cast<std::size_t>(binomial(m + 1, q + 1)), "rank mismatch");
      }
      break;
    case 2: from_entry(l, "phi-chain-map"); break;
    case 3: from_entry(l, "phi-epimorphism"); break;
    case 4: from_entry(l, "suspension-pushout"); break;
    case 5: from_entry(l, "hom-bijection"); break;
    case 6:
      for (int m = 0; m <= 5; ++m) {
        auto h = enumerate_homs(oriental(m), oriental(1));
        l.require(h.complete, "incomplete enumeration");
        l.require(h.morphisms.size() == monotone_maps(m, 1), "m=" + std::to_string(m) + " count differs from the oracle");
        l.require(h.morphisms.size() == static_cast<std::size_t>(m + 2), "count is not m+2");
      }
      break;
    case 7: from_entry(l, "nu-sigma"); break;
    case 8: from_entry(l, "comparison-inclusion"); break;
    case 9: from_entry(l, "suspect-machinery"); break;
    case 10:
      for (int cm = 0; cm <= 2; ++cm) {
        auto f = build_filtration(oriental(cm), 4);
        auto cert = certify_filtration(f);
        l.require(cert.complete(), "O[" + std::to_string(cm) + "] certificate incomplete");
        l.require(cert.replay_matches && cert.truncation_matches, "replay differs from the truncated nerve");
      }
      break;
    case 11: from_entry(l, "theta-constructions"); break;
    case 12: {
      std::vector<fault::Kind> ks{fault::Kind::drop_tensor_sign, fault::Kind::drop_suspension_augmentation};
      for (int p = 0; p < 7; ++p) ks.push_back(static_cast<fault::Kind>(static_cast<int>(fault::Kind::omit_p1) + p));
      for (auto k : ks) {
        const auto t0 = std::chrono::steady_clock::now();
        fault::Scope s(k);
        auto rep = run_suite(Profile::full, 1);
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        l.require(rep.any(Verdict::fail), std::string(fault::name(k)) + " went unnoticed");
        l.require(dt < kLimit[12], std::string(fault::name(k)) + " over the per-mutation limit");
      }
      auto clean = run_suite(Profile::full, 1);
      l.require(clean.exit_code() == 0, "unmutated suite does not pass");
      break;
    }
  }
  return l;
}

}  // namespace

int main() {
  int failed = 0;
  for (int n = 1; n <= 12; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    Line l;
    try {
      l = criterion(n);
    } catch (const std::exception& e) {
      l.ok = false;
      l.note = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // criterion 12 is limited per mutation inside the check
    if (n != 12) l.require(dt < kLimit[n], "over the time limit");
    failed += !l.ok;
    std::printf("%s criterion %2d  %8.3fs (limit %gs)%s%s\n", l.ok ? "PASS" : "FAIL", n, dt, kLimit[n],
                l.note.empty() ? "" : "  ", l.note.c_str());
  }
  return failed == 0 ? 0 : 1;
}
