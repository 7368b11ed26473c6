#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace twosym {

struct SuiteReport {
  std::string name;
  /// Complexity bound the suite ran at.
  int bound = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  /// Informational lines (counts, reported-but-tolerated findings).
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

/// laws, sigma-constructive, homology-invariance, minimality-agreement,
/// trap-closure, genus-embedding, canonical-uniqueness, catalogue-smoke.
const std::vector<std::string>& suite_names();

/// Runs a suite at its default bound (or `bound` when positive). Throws
/// std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, int bound = 0);

/// Default complexity bound of a suite.
int default_bound(std::string_view name);

/// Human-readable report; failures are capped at `max_failures` lines.
void write_report(std::ostream& out, const SuiteReport& report, std::size_t max_failures = 20);

}  // namespace twosym
