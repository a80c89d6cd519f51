#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"

namespace mfunc::cli {

/// RFC-4180 CSV with a mandatory header; reals use the shortest round-trip form.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  CsvTable& cell(const std::string& text);
  CsvTable& cell(double value);
  CsvTable& cell(std::int64_t value);
  CsvTable& cell(bool value);
  void end_row();

  std::size_t rows() const noexcept { return rows_; }
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::string> pending_;
  std::string body_;
  std::size_t rows_ = 0;
};

/// The JSON report every subcommand writes as `report.json`.
class Report {
 public:
  static constexpr const char* kSchema = "mfunc.report/1";

  explicit Report(const ExperimentConfig& config);

  json& inputs() { return doc_["inputs"]; }
  json& outputs() { return doc_["outputs"]; }
  json& oracle() { return doc_["oracle"]; }

  /// Writes `table` to `<out>/<name>.csv` and lists it in the report.
  void attach(const std::filesystem::path& out, const std::string& name, const CsvTable& table);
  /// Lists a file written by other means (e.g. a density sidecar).
  void attach_file(const std::string& file);

  void write(const std::filesystem::path& out, double wall_time_s);

 private:
  json doc_;
};

/// Replaces non-finite reals by null so the report stays valid JSON.
json real_or_null(double x);

}  // namespace mfunc::cli
