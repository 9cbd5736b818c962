#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace lvint {

enum class CheckStatus { exact_pass, numeric_pass, fail };

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::exact_pass;
  std::string witness;  // only set on failure
};

/// Structured outcome of one verification suite for one system.
struct VerificationReport {
  std::string suite;
  int n = 0;
  int k = 0;
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0;  // excluded from JSON to keep output byte-stable

  bool passed() const;
  void add(std::string id, bool ok, std::string witness = {},
           CheckStatus pass_status = CheckStatus::exact_pass);

  /// Stable machine form (no timing).
  nlohmann::ordered_json to_json() const;
  /// One line per check plus a summary line.
  std::string to_text() const;
};

std::string to_string(CheckStatus status);

}  // namespace lvint
