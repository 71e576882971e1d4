#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qdx/fixtures.hpp"
#include "qdx/oracle.hpp"

namespace qdx::cli {

// Brute-force grid used by `qdx validate` and the acceptance checks. Two
// more refinement rounds than the library default keep the grid error of the
// discord upper bound well under 1e-6.
inline constexpr oracle::GridSpec kValidationGrid{64, 5, 0.2};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

// Location where qd(N) at fixed theta and gamma_t = 0 settles: the smallest N
// from which every N' up to `scan_limit` is within `tolerance` of the
// large-N limit.
struct Plateau {
  int n = 0;
  double value = 0.0;  // qd at n
  double limit = 0.0;  // qd at N = 10^6
};
Plateau qd_plateau(double theta, double tolerance = 1e-3, int scan_limit = 4096);

// Golden values computed by the oracle pipeline at `grid`.
FixtureMap compute_fixtures(const oracle::GridSpec& grid = kValidationGrid);

// One failing check per missing, unexpected or mismatching key. Values match
// when |a - b| <= rel_tol * max(|a|, |b|) + 1e-12.
std::vector<CheckResult> compare_fixtures(const FixtureMap& expected, const FixtureMap& actual,
                                          double rel_tol = 1e-9);

// Oracle cross-checks of every module at validation size.
std::vector<CheckResult> run_oracle_checks(const oracle::GridSpec& grid = kValidationGrid);

// With `regenerate`, rewrites the fixtures file from compute_fixtures();
// otherwise compares against it. Oracle checks run in both modes.
ValidationReport run_validation(const std::filesystem::path& fixtures_path,
                                const oracle::GridSpec& grid, bool regenerate);

}  // namespace qdx::cli
