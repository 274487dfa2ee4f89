#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauerc/bicomb.hpp"
#include "brauerc/field.hpp"

namespace brauerc {

struct Instance {
  std::string index, expected, computed;
  std::optional<bool> pass;  // empty when outside the claim's hypotheses
};

struct Report {
  std::string claim;
  std::uint32_t characteristic = 0;
  std::string delta;
  int r = 0;
  bool in_hypothesis = true;
  std::vector<Instance> instances;

  void add(std::string index, std::string expected, std::string computed, bool pass);
  bool all_pass() const;
};

struct SuiteConfig {
  int r = 2;
  FieldSpec spec = FieldSpec::make(5, "1");
  std::optional<SignPlacement> placement;
  std::uint64_t seed = 0;
  bool allow_out_of_hypothesis = false;
};

struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteResult {
  std::string suite;
  SuiteConfig config;
  SignPlacement placement = SignPlacement::first;
  std::vector<Report> reports;
  bool all_pass() const;
};

const std::vector<std::string>& suite_names();
// Throws HypothesisError when the configuration is outside the suite's
// hypotheses and the override is not set.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

enum class ReportFormat { json, csv, text };
ReportFormat parse_format(const std::string& s);
std::string render(const SuiteResult& result, ReportFormat format);

}  // namespace brauerc
