#include "report.hpp"

#include <cmath>
#include <fstream>

#include "mfunc/error.hpp"
#include "mfunc/grid_io.hpp"

#ifndef MFUNC_VERSION
#define MFUNC_VERSION "unknown"
#endif

namespace mfunc::cli {

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorKind::Data, "cannot write " + path.string());
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable& CsvTable::cell(const std::string& text) {
  pending_.push_back(quote(text));
  return *this;
}
CsvTable& CsvTable::cell(double value) { return cell(format_real(value)); }
CsvTable& CsvTable::cell(std::int64_t value) { return cell(std::to_string(value)); }
CsvTable& CsvTable::cell(bool value) { return cell(std::string(value ? "true" : "false")); }

void CsvTable::end_row() {
  require(pending_.size() == header_.size(), ErrorKind::Data, "CSV row width does not match the header");
  for (std::size_t i = 0; i < pending_.size(); ++i) body_ += (i ? "," : "") + pending_[i];
  body_ += "\r\n";
  pending_.clear();
  ++rows_;
}

void CsvTable::write(const std::filesystem::path& path) const {
  std::string text;
  for (std::size_t i = 0; i < header_.size(); ++i) text += (i ? "," : "") + quote(header_[i]);
  write_text(path, text + "\r\n" + body_);
}

Report::Report(const ExperimentConfig& config) {
  doc_["schema"] = kSchema;
  doc_["experiment"] = config.experiment();
  doc_["versions"] = {{"mfunc", MFUNC_VERSION}, {"report_schema", kSchema}};
  doc_["config"] = config.document();
  doc_["inputs"] = json::object();
  doc_["outputs"] = json::object();
  doc_["oracle"] = json::object();
  doc_["files"] = json::array();
}

void Report::attach(const std::filesystem::path& out, const std::string& name, const CsvTable& table) {
  table.write(out / (name + ".csv"));
  attach_file(name + ".csv");
}

void Report::attach_file(const std::string& file) { doc_["files"].push_back(file); }

void Report::write(const std::filesystem::path& out, double wall_time_s) {
  doc_["wall_time_s"] = wall_time_s;
  write_text(out / "report.json", doc_.dump(2) + "\n");
}

json real_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace mfunc::cli
