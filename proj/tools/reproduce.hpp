#pragma once

// Fixture-driven reproduction pipelines shared by the command-line driver.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qrf/io.hpp"

namespace qrf::cli {

struct CheckRow {
  std::string quantity;
  std::optional<double> expected;
  double computed = 0.0;
  std::optional<double> tolerance;
  bool pass = true;
};

struct Report {
  Report() = default;
  explicit Report(std::string report_id) : id(std::move(report_id)) {}

  std::string id;
  std::vector<CheckRow> rows;
  Json details = Json::object();

  bool pass() const;
  void add(std::string quantity, double expected, double computed, double tolerance);
  void add_bound(std::string quantity, double computed, bool pass);
  void add_info(std::string quantity, double computed);
};

// QRF_FIXTURES when set, otherwise the directory compiled into the binary.
std::filesystem::path fixture_dir();

const std::vector<std::string>& fixture_ids();
// Throws std::invalid_argument for unknown ids.
Report reproduce(const std::string& id, const std::filesystem::path& dir);

Report imperfect_paper_demo(const std::filesystem::path& dir);
Report imperfect_params_demo(const std::filesystem::path& dir);
Report bell_report(const std::filesystem::path& state_file, double tol);

}  // namespace qrf::cli
