#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/json_io.hpp"

namespace cayley {

struct ClaimRecord {
  std::string id;
  /// The identity being checked, as a formula.
  std::string anchor;
  int trial = 0;
  /// Non-finite when the trial threw; `error` then holds the message.
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<std::string> error;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double tol_scale = 1.0;
  int failures = 0;
  double worst_residual = 0.0;
  /// Sorted by claim id, then trial.
  std::vector<ClaimRecord> records;
};

/// Suite names accepted by run_suite, "all" last.
std::vector<std::string> suite_names();

/// Claim ids of a suite in report order.
std::vector<std::string> suite_claims(std::string_view suite);

/// Runs every claim of `suite` for `trials` trials. Trial streams depend only
/// on (seed, claim id, trial), so a claim reports the same residuals whether
/// run alone or inside "all". Throws ParseError for an unknown suite.
SuiteResult run_suite(std::string_view suite, int trials, std::uint64_t seed, double tol_scale = 1.0);

io::Json to_json(const SuiteResult& result);
std::string to_csv(const SuiteResult& result);

}  // namespace cayley
