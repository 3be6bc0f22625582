#include "qfodc/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qfodc {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unsupported: return "unsupported";
  }
  return "?";
}

void VerificationReport::add(CheckResult r) { checks_.push_back(std::move(r)); }

void VerificationReport::merge(const VerificationReport& o) {
  checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end());
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
}

size_t VerificationReport::failed_count() const {
  return static_cast<size_t>(std::count_if(
      checks_.begin(), checks_.end(),
      [](const CheckResult& c) { return c.status == CheckStatus::Fail; }));
}

void VerificationReport::canonicalize() {
  std::stable_sort(checks_.begin(), checks_.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

std::string VerificationReport::to_json(
    const std::map<std::string, std::string>& header) const {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : header) j[k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["paper_anchor"] = c.anchor;
    jc["status"] = status_name(c.status);
    jc["witness"] = c.witness;
    nlohmann::ordered_json jo = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.oracles) jo[k] = v;
    jc["oracles"] = jo;
    jc["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(jc);
  }
  return j.dump(2);
}

std::string VerificationReport::to_markdown(
    const std::map<std::string, std::string>& header) const {
  std::ostringstream os;
  os << "# verification report\n\n";
  for (const auto& [k, v] : header) os << "- " << k << ": " << v << "\n";
  os << "\n| check | anchor | status | witness |\n|---|---|---|---|\n";
  for (const auto& c : checks_) {
    os << "| " << c.id << " | " << c.anchor << " | " << status_name(c.status) << " | "
       << c.witness << " |\n";
  }
  return os.str();
}

}  // namespace qfodc
