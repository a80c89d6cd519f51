#include "mfunc/grid_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mfunc/error.hpp"

namespace mfunc {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

fs::path with_ext(const fs::path& base, const char* ext) {
  fs::path p = base;
  p += ext;
  return p;
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  require(bool(out), ErrorKind::Data, "cannot write " + p.string());
  return out;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  require(bool(in), ErrorKind::Data, "cannot read " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Data, p.string() + ": " + e.what());
  }
}

// Reads the numeric columns of a CSV with the expected header.
std::vector<std::vector<double>> read_csv(const fs::path& p, const std::string& header, std::size_t columns) {
  std::ifstream in(p);
  require(bool(in), ErrorKind::Data, "cannot read " + p.string());
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  require(line == header, ErrorKind::Data, p.string() + ": expected header '" + header + "'");
  std::vector<std::vector<double>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        require(used == cell.size(), ErrorKind::Data, "");
      } catch (const std::exception&) {
        throw Error(ErrorKind::Data, p.string() + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    require(row.size() == columns, ErrorKind::Data,
            p.string() + ":" + std::to_string(lineno) + ": expected " + std::to_string(columns) + " fields");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void save_density(const GridDensity& d, const fs::path& base) {
  {
    auto out = open_out(with_ext(base, ".csv"));
    out << "u,v,density\n";
    const int n = d.spec.resolution;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        out << format_real(d.spec.node_u(i)) << ',' << format_real(d.spec.node_v(j)) << ','
            << format_real(d.at(i, j)) << '\n';
  }
  json meta;
  meta["center"] = {d.spec.center.real(), d.spec.center.imag()};
  meta["half_width"] = d.spec.half_width;
  meta["resolution"] = d.spec.resolution;
  meta["measure"] = "(2pi)^-1 du dv";
  meta["mass"] = d.mass();
  meta["method"] = d.method;
  meta["seed"] = d.seed ? json(*d.seed) : json(nullptr);
  meta["diagnostics"] = d.diagnostics;
  open_out(with_ext(base, ".json")) << meta.dump(2) << '\n';
}

GridDensity load_density(const fs::path& base) {
  const json meta = read_json(with_ext(base, ".json"));
  GridSpec spec;
  try {
    spec.center = {meta.at("center").at(0).get<double>(), meta.at("center").at(1).get<double>()};
    spec.half_width = meta.at("half_width").get<double>();
    spec.resolution = meta.at("resolution").get<int>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Data, "density sidecar: " + std::string(e.what()));
  }
  spec.validate();
  GridDensity d(spec);
  const auto rows = read_csv(with_ext(base, ".csv"), "u,v,density", 3);
  require(rows.size() == spec.size(), ErrorKind::Data, "density CSV has the wrong number of rows");
  for (std::size_t k = 0; k < rows.size(); ++k) d.values[k] = rows[k][2];
  d.method = meta.value("method", "");
  if (meta.contains("seed") && !meta["seed"].is_null()) d.seed = meta["seed"].get<std::uint64_t>();
  if (meta.contains("diagnostics")) d.diagnostics = meta["diagnostics"].get<std::map<std::string, double>>();
  return d;
}

void save_char_function(const CharFunctionGrid& c, const fs::path& base) {
  {
    auto out = open_out(with_ext(base, ".csv"));
    out << "a,b,re,im\n";
    const int n = c.spec.resolution;
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k)
        out << format_real(c.spec.node_a(k)) << ',' << format_real(c.spec.node_a(l)) << ','
            << format_real(c.at(k, l).real()) << ',' << format_real(c.at(k, l).imag()) << '\n';
  }
  json meta;
  meta["center"] = {0.0, 0.0};
  meta["half_width"] = c.spec.half_width;
  meta["resolution"] = c.spec.resolution;
  meta["source"] = c.source;
  meta["decay"] = {{"tail_tolerance", c.decay.tail_tolerance},
                   {"fitted_exponent", c.decay.fitted_exponent},
                   {"max_radius_above_tolerance", c.decay.max_radius_above_tolerance},
                   {"edge_max", c.decay.edge_max}};
  open_out(with_ext(base, ".json")) << meta.dump(2) << '\n';
}

CharFunctionGrid load_char_function(const fs::path& base) {
  const json meta = read_json(with_ext(base, ".json"));
  CharGridSpec spec;
  try {
    spec.half_width = meta.at("half_width").get<double>();
    spec.resolution = meta.at("resolution").get<int>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Data, "char-function sidecar: " + std::string(e.what()));
  }
  spec.validate();
  CharFunctionGrid c(spec);
  const auto rows = read_csv(with_ext(base, ".csv"), "a,b,re,im", 4);
  require(rows.size() == spec.size(), ErrorKind::Data, "char-function CSV has the wrong number of rows");
  for (std::size_t k = 0; k < rows.size(); ++k) c.values[k] = {rows[k][2], rows[k][3]};
  c.source = meta.value("source", "");
  update_decay_info(c, meta.contains("decay") ? meta["decay"].value("tail_tolerance", 1e-8) : 1e-8);
  return c;
}

}  // namespace mfunc
