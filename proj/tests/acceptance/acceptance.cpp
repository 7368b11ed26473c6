// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "twosym/catalogue.hpp"
#include "twosym/homology.hpp"
#include "twosym/moves.hpp"
#include "twosym/orbits.hpp"
#include "twosym/six_tuple.hpp"
#include "twosym/suites.hpp"
#include "twosym/surgery.hpp"

using namespace twosym;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!ok) ++failures;
}

std::string suite_detail(const SuiteReport& r, double secs) {
  std::ostringstream os;
  os << r.name << " bound=" << r.bound << " checks=" << r.checked
     << " failures=" << r.failures.size() << " time=" << secs << "s";
  for (const auto& note : r.notes) os << "; " << note;
  for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) os << "; fail: " << r.failures[i];
  return os.str();
}

SixTuple t(const char* text) { return parse_tuple(text); }

AbelianGroup h1_of(const SixTuple& f) { return h1(build_graph(f)); }

void catalogue_smoke() {
  const auto start = Clock::now();
  const auto list = enumerate_canonical(5);
  const double secs = seconds_since(start);
  const std::vector<SixTuple> expected{SixTuple(), t("(1,1,3;0,0,2)"), t("(1,1,3;2,0,2)")};
  std::ostringstream os;
  os << "enumerate_canonical(5) has " << list.size() << " tuples in " << secs << "s";
  report(1, list == expected && secs < 1.0, os.str());
}

void lens_homology() {
  bool ok = h1_of(SixTuple()).is_trivial() && h1_of(t("(1,1,3;2,0,2)")) == AbelianGroup::cyclic(0);
  int lens = 0, rejected = 0;
  std::string first_bad;
  for (int p = 2; p <= 25; ++p)
    for (int q = 1; q < p; ++q) {
      const auto f = SixTuple::make(1, 1, 2 * p - 1, 0, 0, 2 * q);
      const bool admissible = is_admissible(f).admissible;
      if (std::gcd(p, q) != 1) {
        // Such tuples fail the three-residue condition.
        rejected += !admissible;
        if (admissible && first_bad.empty()) first_bad = format_tuple(f) + " admissible";
        ok &= !admissible;
        continue;
      }
      const bool good = admissible && h1_of(f) == AbelianGroup::cyclic(p);
      lens += good;
      if (!good && first_bad.empty()) first_bad = format_tuple(f);
      ok &= good;
    }
  std::ostringstream os;
  os << "H1(S3)=0, H1(S1xS2)=Z, " << lens << " lens tuples give Z/p, " << rejected
     << " non-coprime tuples inadmissible";
  if (!first_bad.empty()) os << "; first bad " << first_bad;
  report(2, ok, os.str());
}

void run_suite_criterion(int id, const char* name, double limit_secs = 0) {
  const auto start = Clock::now();
  const auto r = run_suite(name);
  const double secs = seconds_since(start);
  const bool in_time = limit_secs <= 0 || secs < limit_secs;
  report(id, r.passed() && in_time, suite_detail(r, secs));
}

void worked_chain() {
  const auto f = t("(1,3,3;2,2,2)");
  const int d0 = delta(f), d1 = delta(psi1(f)), d2 = delta(psi1(psi1(f)));
  const auto step = sigma(t("(3,1,3;2,2,2)"));
  const auto minimum = minimize(f);
  const bool root = is_root(t("(2,2,2;1,1,3)"));
  std::ostringstream os;
  os << "deltas (" << d0 << "," << d1 << "," << d2 << "), sigma(3,1,3;2,2,2)=" << step
     << ", minimize=" << minimum << ", root(2,2,2;1,1,3)=" << (root ? "yes" : "no");
  report(7, d0 == 2 && d1 == 2 && d2 == -1 && step == t("(2,2,2;3,1,1)") &&
                minimum == t("(2,2,2;1,1,3)") && root,
         os.str());
}

void gem_sanity() {
  const auto start = Clock::now();
  const auto r = run_suite("genus-embedding");
  const std::size_t w1 = is_admissible(t("(3,3,3;0,0,2)")).residues_23;
  const std::size_t w2 = is_admissible(t("(1,1,3;0,0,0)")).residues_23;
  std::ostringstream os;
  os << "gem/contracted/bipartite/three residues on every admissible tuple (" << r.checked
     << " checks, " << r.failures.size() << " failures); witnesses report " << w1 << " and " << w2
     << " {2,3}-residues; time=" << seconds_since(start) << "s";
  report(10, r.passed() && w1 == 5 && w2 == 5, os.str());
}

void canonical_uniqueness() {
  const auto start = Clock::now();
  const auto r = run_suite("canonical-uniqueness");
  // The fallback path on a synthetic span with no qualifying member.
  const std::vector<SixTuple> span{t("(3,1,1;2,2,0)"), t("(1,3,1;0,2,2)")};
  const auto choice = select_canonical(span);
  const bool fallback = choice.qualifying == 0 && choice.warning.has_value();
  report(11, r.passed() && fallback,
         suite_detail(r, seconds_since(start)) + (fallback ? "; fallback exercised" : "; fallback broken"));
}

void raw_count_and_guard() {
  const auto start = Clock::now();
  const auto canon = enumerate_canonical(21);
  std::size_t traps = 0;
  std::vector<std::string> offending;
  for (const auto& f : canon) {
    const auto w = is_trap(f);
    if (!w) continue;
    ++traps;
    if (passes_genus_two_guard(f)) offending.push_back(format_tuple(f) + " H1=" + to_string(h1_of(f)));
  }
  std::ostringstream os;
  os << "canonical tuples with complexity <= 21: " << canon.size() << "; traps " << traps
     << "; traps passing the genus-two guard " << offending.size();
  for (std::size_t i = 0; i < offending.size() && i < 4; ++i) os << "; " << offending[i];
  if (!offending.empty())
    os << "; the guard only excludes tuples with two vanishing q's, so S1xS2 and other genus<=1 "
          "or non-prime traps such as (1,1,3;2,0,2) pass it";
  os << "; time=" << seconds_since(start) << "s";
  report(12, offending.empty(), os.str());
}

}  // namespace

int main() {
  catalogue_smoke();
  lens_homology();
  run_suite_criterion(3, "laws", 60);
  run_suite_criterion(4, "sigma-constructive");
  run_suite_criterion(5, "homology-invariance");
  run_suite_criterion(6, "minimality-agreement");
  worked_chain();
  run_suite_criterion(8, "trap-closure");
  run_suite_criterion(9, "genus-embedding");
  gem_sanity();
  canonical_uniqueness();
  raw_count_and_guard();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
