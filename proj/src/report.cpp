#include "lvint/report.hpp"

#include <sstream>

namespace lvint {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::exact_pass: return "exact-pass";
    case CheckStatus::numeric_pass: return "numeric-pass";
    case CheckStatus::fail: return "fail";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  for (const CheckResult& check : checks)
    if (check.status == CheckStatus::fail) return false;
  return true;
}

void VerificationReport::add(std::string id, bool ok, std::string witness,
                             CheckStatus pass_status) {
  CheckResult check;
  check.id = std::move(id);
  check.status = ok ? pass_status : CheckStatus::fail;
  if (!ok) check.witness = std::move(witness);
  checks.push_back(std::move(check));
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["n"] = n;
  j["k"] = k;
  j["passed"] = passed();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CheckResult& check : checks) {
    nlohmann::ordered_json c;
    c["id"] = check.id;
    c["status"] = to_string(check.status);
    if (check.status == CheckStatus::fail) c["witness"] = check.witness;
    list.push_back(std::move(c));
  }
  j["checks"] = std::move(list);
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << " LV(" << n << "," << k << "): "
      << (passed() ? "PASS" : "FAIL") << " (" << checks.size() << " checks, "
      << elapsed_seconds << " s)\n";
  for (const CheckResult& check : checks) {
    out << "  [" << to_string(check.status) << "] " << check.id << "\n";
    if (check.status == CheckStatus::fail && !check.witness.empty())
      out << "      witness: " << check.witness << "\n";
  }
  return out.str();
}

}  // namespace lvint
