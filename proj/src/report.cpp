#include "rcb/report.hpp"

#include <algorithm>

namespace rcb {

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ReportOnly: return "report_only";
  }
  return "?";
}

void VerificationReport::check(bool ok, const std::string& sample, const std::string& indices,
                               const std::string& lhs, const std::string& rhs) {
  ++instances_checked;
  if (!ok) add_failure({sample, indices, lhs, rhs});
}

void VerificationReport::add_failure(Failure failure) {
  ++failure_count;
  if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(failure));
}

void VerificationReport::absorb(const VerificationReport& other) {
  for (const auto& s : other.parameter_samples) {
    if (std::find(parameter_samples.begin(), parameter_samples.end(), s) == parameter_samples.end()) {
      parameter_samples.push_back(s);
    }
  }
  instances_checked += other.instances_checked;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() < kMaxStoredFailures) failures.push_back(f);
  }
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

Status VerificationReport::status() const {
  if (report_only) return Status::ReportOnly;
  return failure_count == 0 && instances_checked > 0 ? Status::Pass : Status::Fail;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity_id"] = identity_id;
  j["parameter_samples"] = parameter_samples;
  j["instances_checked"] = instances_checked;
  j["failure_count"] = failure_count;
  auto& fails = j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    fails.push_back({{"sample", f.sample}, {"indices", f.indices}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["status"] = to_string(status());
  j["findings"] = findings;
  return j;
}

}  // namespace rcb
