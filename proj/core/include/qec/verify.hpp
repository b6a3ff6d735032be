#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qec {

enum class Suite { lemma61, detA, series, all };

/// Parses "lemma61", "detA", "series" or "all"; nullopt otherwise.
std::optional<Suite> parse_suite(std::string_view name);

struct VerifyOptions {
  std::size_t lemma_max_n = 300;
  std::size_t det_max_n = 60;
  std::size_t series_max_n = 64;
  std::size_t random_det_pairs = 50;
  std::size_t random_det_max_n = 30;
  long long random_det_max_abs_u = 1'000'000;
  std::uint64_t seed = 0;
};

struct CheckOutcome {
  CheckOutcome() = default;
  explicit CheckOutcome(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;  // first failing case
};

struct SuiteReport {
  std::vector<CheckOutcome> checks;
  bool passed() const;
};

/// Runs the exact-arithmetic identity checks of a suite.
SuiteReport run_suite(Suite suite, const VerifyOptions& options = {});

}  // namespace qec
