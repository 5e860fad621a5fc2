#include "wedge/report.hpp"

#include <sstream>

#include "json.hpp"
#include "wedge/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wedge {

namespace {

nlohmann::json failure_json(const FailureRecord& f) {
  nlohmann::json j;
  j["instance"] = f.instance;
  j["expected"] = f.expected;
  j["observed"] = f.observed;
  return j;
}

FailureRecord failure_from_json(const nlohmann::json& j) {
  FailureRecord f;
  f.instance = j.at("instance").get<std::string>();
  f.expected = j.at("expected").get<std::string>();
  f.observed = j.at("observed").get<std::string>();
  return f;
}

}  // namespace

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["sweep"] = sweep;
  j["params"] = params;
  j["instances"] = instances;
  j["skipped"] = skipped;
  auto fails = nlohmann::json::array();
  for (const auto& f : failures) fails.push_back(failure_json(f));
  j["failures"] = fails;
  if (minimal_failure)
    j["minimal_failure"] = failure_json(*minimal_failure);
  else
    j["minimal_failure"] = nullptr;
  j["observations"] = observations;
  j["certification"] = certification;
  j["fingerprint"] = fingerprint;
  j["elapsed_seconds"] = elapsed_seconds;
  return j.dump(2);
}

VerificationReport VerificationReport::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report json: ") + e.what());
  }
  VerificationReport r;
  r.sweep = j.at("sweep").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.instances = j.at("instances").get<long long>();
  r.skipped = j.at("skipped").get<long long>();
  for (const auto& f : j.at("failures")) r.failures.push_back(failure_from_json(f));
  if (!j.at("minimal_failure").is_null())
    r.minimal_failure = failure_from_json(j.at("minimal_failure"));
  r.observations = j.at("observations").get<std::map<std::string, std::string>>();
  r.certification = j.at("certification").get<std::string>();
  r.fingerprint = j.at("fingerprint").get<std::string>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  return r;
}

std::string VerificationReport::stable_json() const {
  VerificationReport copy = *this;
  copy.elapsed_seconds = 0.0;
  return copy.to_json();
}

std::string build_fingerprint() {
  std::ostringstream s;
  s << "wedge 0.1.0";
#if defined(__clang__)
  s << ", clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
  s << ", gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#endif
#ifdef _OPENMP
  s << ", openmp " << _OPENMP;
#else
  s << ", no openmp";
#endif
  return s.str();
}

}  // namespace wedge
