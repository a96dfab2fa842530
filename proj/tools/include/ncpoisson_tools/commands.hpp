#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ncpoisson::tools {

struct RunConfig {
  std::vector<int> n_list{2};
  int vars = 1;
  int cap = 4;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 100;
  bool bundle = false;
  bool timings = false;
  std::optional<std::string> json_path;
};

/// Thrown for invalid configurations; maps to exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& config);

enum class Status { Pass, Fail, Error };

struct Record {
  std::string name;
  std::string anchor;
  Status status = Status::Pass;
  double residual = 0.0;
  double runtime_ms = 0.0;
  std::string diagnostic;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(Record r);
  nlohmann::json& results(int n) { return results_[std::to_string(n)]; }

  int count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0 && count(Status::Error) == 0; }
  const std::map<std::string, Record>& records() const { return records_; }

  /// Records sorted by name; runtime_ms only when requested.
  nlohmann::json to_json(const RunConfig& config) const;

 private:
  std::string command_;
  std::map<std::string, Record> records_;
  nlohmann::json results_ = nlohmann::json::object();
};

/// Runs the module suites in a fixed order; deterministic given the config.
Report cmd_verify(const RunConfig& config);

/// Matrix classification per n, or bundle lambda round trips with config.bundle.
Report cmd_classify(const RunConfig& config);

/// Every anchor a report may cite, mapped to the statement it checks.
const std::map<std::string, std::string>& anchor_index();

}  // namespace ncpoisson::tools
