#pragma once

// Named verification suites behind `stirling-lab verify`: each suite walks a
// desk-scale grid, evaluates both sides of every identity it owns, and
// reports grid sizes and failures. Informational comparisons (boundary
// formulas recorded but deliberately not asserted) surface as notes and
// never affect the pass/fail outcome.

#include "stirling/identities.hpp"
#include "stirling/oracle.hpp"
#include "stirling/triangles.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace stirling {

struct VerifyOptions {
  long long n_max = 12;  // identity grids (convolutions capped at 10)
  long long k_max = 5;
  int order = 20;        // series truncation; column checks go up to n = 18
  unsigned jobs = 1;
  EnumerationCaps caps{};
};

struct SuiteResult {
  std::string suite;
  std::vector<IdentityReport> reports;
  std::vector<std::string> notes;

  std::size_t points() const;
  std::size_t failure_count() const;
  bool passed() const;
};

// Suites that exist; "all" additionally runs every one of them in order.
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite name.
std::vector<SuiteResult> run_suites(const std::string& name,
                                    const TriangleStore& store,
                                    const VerifyOptions& opts);

void render_report(std::ostream& out, const std::vector<SuiteResult>& results);

}  // namespace stirling
