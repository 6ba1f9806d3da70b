#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rcb {

enum class Status { Pass, Fail, ReportOnly };

std::string to_string(Status status);

struct Failure {
  std::string sample;
  std::string indices;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string identity_id;
  std::vector<std::string> parameter_samples;
  std::size_t instances_checked = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // first kMaxStoredFailures only
  std::vector<std::string> findings;
  bool report_only = false;

  static constexpr std::size_t kMaxStoredFailures = 20;

  void check(bool ok, const std::string& sample, const std::string& indices, const std::string& lhs,
             const std::string& rhs);
  void add_failure(Failure failure);
  /// Appends another report's instances, samples, failures and findings.
  void absorb(const VerificationReport& other);

  /// report_only when flagged; otherwise pass iff no failures and at least one instance.
  Status status() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace rcb
