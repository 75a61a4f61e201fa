// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfdissect/dissection.hpp"
#include "cfdissect/grammar.hpp"
#include "cfdissect/omega.hpp"
#include "cfdissect/oracle.hpp"
#include "cfdissect/recognizers.hpp"

namespace {

using namespace cfdissect;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome catalan_counting() {
  const auto start = Clock::now();
  Outcome o;
  std::ostringstream d;
  for (std::size_t k = 2; k <= 8; ++k) {
    std::uint64_t n = 0;
    for_each_enw(k, [&](std::string_view) { ++n; });
    const BigInt expected = (BigInt(1) << k) * catalan(k - 1);
    d << (k > 2 ? "," : "") << n;
    if (BigInt(n) != expected) {
      o.pass = false;
      d << "(expected " << expected << ")";
    }
  }
  const double t = seconds_since(start);
  if (t >= 60) o.pass = false;
  d << " in " << t << "s";
  o.detail = d.str();
  return o;
}

Outcome oracle_equivalence() {
  const auto r = oracle_diff(10, 100000, 20240601);
  Outcome o{r.mismatches == 0, ""};
  std::ostringstream d;
  d << "words=" << r.words << " mismatches=" << r.mismatches;
  for (const auto& m : r.examples) d << " [" << m.word << "]";
  o.detail = d.str();
  return o;
}

Outcome height_law() {
  Outcome o;
  std::uint64_t total = 0;
  std::string first_bad;
  for (std::size_t n = 2; n <= kMaxEnumeratedOmega; ++n) {
    std::uint64_t count = 0;
    for_each_omega(n, [&](std::string_view w, const OmegaScanner& s) {
      ++count;
      if (!s.accepts() || s.z_count() != n || !s.height_law_holds()) {
        if (first_bad.empty()) first_bad = std::string(w);
      }
    });
    if (BigInt(count) != omega_count_formula(n)) {
      o.pass = false;
      if (first_bad.empty()) first_bad = "count mismatch at n=" + std::to_string(n);
    }
    total += count;
  }
  if (!first_bad.empty()) o.pass = false;
  o.detail = "words=" + std::to_string(total) + (first_bad.empty() ? "" : " first failure: " + first_bad);
  return o;
}

Outcome nonemptiness() {
  const auto start = Clock::now();
  Outcome o;
  std::string bad;
  for (std::size_t n = 2; n <= 1024; ++n) {
    const Word w = construct_omega(n);
    if (!is_omega(w) || pi(w).len != n) {
      o.pass = false;
      if (bad.empty()) bad = " first failure n=" + std::to_string(n);
    }
  }
  const double t = seconds_since(start);
  if (t >= 30) o.pass = false;
  o.detail = "n=2..1024 in " + std::to_string(t) + "s" + bad;
  return o;
}

Outcome balanced_factors() {
  Outcome o;
  const auto words = enumerate_derivations(balanced_grammar(), 20);
  std::string bad;
  for (const auto& w : words) {
    if (!check_balanced_factors(w)) {
      o.pass = false;
      if (bad.empty()) bad = " first failure: " + w.str();
    }
  }
  o.detail = "grammar words=" + std::to_string(words.size()) + bad;
  return o;
}

Outcome dissection_demo() {
  Outcome o;
  std::ostringstream d;
  const auto pow2 = UnaryLanguage::builtin("pow2");
  const auto pow3 = UnaryLanguage::builtin("pow3");

  const auto r2 = dissect_geometric(pow2, 2, BigInt(1) << 41, 100);
  bool excluded_at_3_mod_4 = r2.samples_out.size() == r2.out_count;
  for (const auto& m : r2.samples_out) {
    const auto k = msb(m);
    excluded_at_3_mod_4 = excluded_at_3_mod_4 && m == (BigInt(1) << k) && k % 4 == 3;
  }
  if (r2.in_count != 30 || r2.out_count != 10 || !excluded_at_3_mod_4) o.pass = false;
  d << "pow2 in=" << r2.in_count << " out=" << r2.out_count;

  const auto r3 = dissect_geometric(pow3, 3, pow(BigInt(3), 40));
  if (r3.in_count < 5 || r3.out_count < 5) o.pass = false;
  d << "; pow3 in=" << r3.in_count << " out=" << r3.out_count;

  const auto strictly_growing = [&](const UnaryLanguage& lang, const Rational& c,
                                    const std::vector<BigInt>& caps) {
    DissectionReport prev;
    bool ok = true;
    d << " [";
    for (std::size_t i = 0; i < caps.size(); ++i) {
      const auto r = dissect_geometric(lang, c, caps[i]);
      d << (i ? " " : "") << r.in_count << '/' << r.out_count;
      if (i > 0 && (r.in_count <= prev.in_count || r.out_count <= prev.out_count)) ok = false;
      prev = r;
    }
    d << ']';
    return ok;
  };
  d << "; caps";
  if (!strictly_growing(pow2, 2, {BigInt(1) << 21, BigInt(1) << 31, BigInt(1) << 41})) o.pass = false;
  if (!strictly_growing(pow3, 3, {pow(BigInt(3), 20), pow(BigInt(3), 30), pow(BigInt(3), 40)})) {
    o.pass = false;
  }
  o.detail = d.str();
  return o;
}

Outcome image_membership_brute_force() {
  Outcome o;
  std::size_t checked = 0;
  std::string bad;
  for (std::uint64_t g = 1; g <= 3; ++g) {
    const auto d = residue_dissector(g);
    const auto lifted = lift_to_theta(d);
    for (std::size_t m = 2; m <= 40; ++m) {
      bool found = false;
      for_each_omega(m, [&](std::string_view w, const OmegaScanner&) {
        found = found || lifted.contains(w);
      });
      ++checked;
      if (found != image_membership(m, d)) {
        o.pass = false;
        if (bad.empty()) bad = " first mismatch m=" + std::to_string(m) + " g=" + std::to_string(g);
      }
    }
  }
  o.detail = "pairs=" + std::to_string(checked) + bad;
  return o;
}

Outcome perfectness_audit() {
  constexpr std::size_t kMaxLen = 26;
  // Serializations of perfect trees short enough to matter, built leaf by leaf.
  std::set<std::string> perfect;
  for (unsigned h = 1;; ++h) {
    const std::size_t leaves = std::size_t{1} << h;
    if (2 * (leaves - 1) + 3 * leaves > kMaxLen) break;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << leaves); ++mask) {
      PerfectTreeSpec spec{h, {}};
      for (std::size_t i = 0; i < leaves; ++i) {
        spec.leaves.push_back((mask >> (leaves - 1 - i)) & 1 ? LeafKind::pzzp : LeafKind::pzp);
      }
      const auto w = spec.serialize();
      if (w.size() <= kMaxLen) perfect.insert(w.str());
    }
  }

  // Walk Θ^<=26 depth first. Once either scanner has failed, no extension can
  // be accepted, so the subtree is skipped.
  std::set<std::string> accepted;
  std::vector<std::string> counterexamples;
  std::uint64_t visited = 0;
  std::string w;
  std::function<void(const OmegaScanner&)> walk = [&](const OmegaScanner& s) {
    ++visited;
    if (s.accepts()) {
      accepted.insert(w);
      if (!is_omega(w) || !perfect.contains(w)) counterexamples.push_back(w);
    }
    if (w.size() == kMaxLen) return;
    for (char c : {'x', 'y', 'z', 'p'}) {
      OmegaScanner next = s;
      w.push_back(c);
      if (next.feed(c)) walk(next);
      w.pop_back();
    }
  };
  walk(OmegaScanner{});

  for (const auto& p : perfect) {
    if (!accepted.contains(p)) counterexamples.push_back("missed " + p);
  }
  Outcome o{counterexamples.empty(), ""};
  o.detail = "live prefixes=" + std::to_string(visited) + " omega words=" +
             std::to_string(accepted.size()) + " perfect=" + std::to_string(perfect.size());
  for (const auto& c : counterexamples) o.detail += "\n  counterexample: " + c;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 catalan counting", catalan_counting},
      {"AC2 oracle equivalence", oracle_equivalence},
      {"AC3 height law", height_law},
      {"AC4 nonemptiness", nonemptiness},
      {"AC5 balanced factors", balanced_factors},
      {"AC6 dissection demo", dissection_demo},
      {"AC7 image-membership brute force", image_membership_brute_force},
      {"AC8 perfectness audit", perfectness_audit},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
