#pragma once

#include <map>
#include <string>
#include <vector>

namespace qfodc {

enum class CheckStatus { Pass, Fail, Unsupported };

std::string status_name(CheckStatus s);

// One verified identity: stable id, the equation tag it reproduces, outcome,
// a witness string on failure, and per-oracle agreement flags.
struct CheckResult {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
  std::map<std::string, std::string> oracles;  // "pbw" / "pairing" / "numeric" -> verdict
  long long elapsed_ms = 0;
};

class VerificationReport {
 public:
  void add(CheckResult r);
  void merge(const VerificationReport& o);
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_passed() const;
  size_t failed_count() const;
  // canonical order: sorted by check id
  void canonicalize();

  std::string to_json(const std::map<std::string, std::string>& header) const;
  std::string to_markdown(const std::map<std::string, std::string>& header) const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace qfodc
