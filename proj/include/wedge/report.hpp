#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wedge {

struct FailureRecord {
  std::string instance;
  std::string expected;
  std::string observed;

  friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

// Outcome of one verification sweep.  Passing means the failure list is
// empty; observational notes never fail a sweep.  Serialized reports are
// byte-identical for identical parameters and seed, elapsed time aside.
struct VerificationReport {
  std::string sweep;
  std::map<std::string, std::string> params;  // includes the seed when used
  long long instances = 0;
  long long skipped = 0;
  std::vector<FailureRecord> failures;
  std::optional<FailureRecord> minimal_failure;
  std::map<std::string, std::string> observations;
  std::string certification = "homological";
  std::string fingerprint;
  double elapsed_seconds = 0.0;

  bool pass() const { return failures.empty(); }

  std::string to_json() const;
  static VerificationReport from_json(const std::string& text);

  // JSON with elapsed_seconds zeroed; the determinism tests compare this.
  std::string stable_json() const;
};

// Library version plus toolchain and threading configuration.
std::string build_fingerprint();

}  // namespace wedge
