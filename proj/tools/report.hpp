#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace gkat::cli {

struct ReportEntry {
  std::string name;
  /// holds / fails / sampled-holds for laws, valid / refuted /
  /// sampled-valid for verdicts, or free text for informational rows.
  std::string status;
  std::uint64_t checked = 0;
  std::uint64_t space = 0;
  std::vector<std::pair<std::string, std::string>> counterexample;
  std::optional<std::pair<std::string, std::string>> witness;
  std::string detail;

  bool failed() const { return status == "fails" || status == "refuted"; }
};

struct Report {
  std::string command;
  std::vector<std::string> args;
  std::string algebra;
  std::string algebra_hash;
  bool finite = true;
  std::uint64_t carrier = 0;
  std::string mode;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> result;
  std::vector<ReportEntry> entries;
  bool passed = true;
  std::optional<double> timing_ms;

  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);
  /// Human format, built only from the fields above.
  std::string render() const;
};

bool operator==(const ReportEntry& a, const ReportEntry& b);
bool operator==(const Report& a, const Report& b);

}  // namespace gkat::cli
