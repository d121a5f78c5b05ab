#ifndef SKEWCAL_SUITES_HPP
#define SKEWCAL_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewcal/deffile.hpp"

namespace skewcal {

struct SuiteOptions {
  std::uint64_t seed = 20260817ULL;
  /// Verdicts of residual checks come from seeded numeric samples (|.| <= tol)
  /// instead of exact zero tests.
  bool numeric_fallback = false;
  double tol = 1e-9;
  /// compat suite only: additionally run the lifted transfer identity.
  bool poissonized = false;
};

struct CheckResult {
  std::string name;
  std::string verdict; ///< pass | fail | skipped
  std::string paper_ref;
  std::string reason; ///< skip reason / failure context
  int residual_nonzero_entries = 0;
  double max_abs_sample = 0.0;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  long long elapsed_ms = 0;
  bool all_passed() const;
};

/// lie, jacobi, compat, poissonize, theorem37, sasaki, theorem38,
/// corollary39, all.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Deterministic for a fixed seed; throws Error on an unknown suite name.
CheckReport run_suite(const DefinitionFile& d, const std::string& suite,
                      const SuiteOptions& opt = {});

} // namespace skewcal

#endif
