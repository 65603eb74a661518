#include "ntnsim/results_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "ntnsim/kernels.hpp"

#ifndef NTNSIM_VERSION
#define NTNSIM_VERSION "unknown"
#endif

namespace ntnsim {

std::string library_version() { return NTNSIM_VERSION; }

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const double v = std::get<double>(cell);
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

// Strings with separators or quotes are quoted, with quotes doubled.
std::string csv_field(const Cell& cell) {
  std::string text = format_cell(cell);
  if (!std::holds_alternative<std::string>(cell) || text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

}  // namespace

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + table.columns[i];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const double v = std::get<double>(cell);
  // JSON has no infinities; keep them readable as strings.
  if (!std::isfinite(v)) return format_cell(cell);
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace

std::string to_json(const ResultTable& table) {
  nlohmann::ordered_json j;
  j["name"] = table.name;
  j["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_results(const std::vector<ResultTable>& tables,
                                                 const std::filesystem::path& dir, OutputFormat format) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const ResultTable& t : tables) {
    const auto path = dir / (t.name + (format == OutputFormat::csv ? ".csv" : ".json"));
    write_file(path, format == OutputFormat::csv ? to_csv(t) : to_json(t));
    paths.push_back(path);
  }
  return paths;
}

std::string manifest_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["tool"] = "ntnsim";
  j["version"] = library_version();
  j["scenario"] = std::string(scenario_kind_name(m.config.kind));
  j["seed"] = m.seed;
  j["trials"] = m.config.trials;
  j["workers"] = m.workers;
  j["kernel_backend"] = std::string(kernels::backend_name(kernels::active_backend()));
  j["wall_time_s"] = m.wall_time_s;
  j["estimator_counts"] = {{"estimates", m.estimates}, {"trials_drawn", m.trials}};
  if (!m.sweep_param.empty()) j["sweep"] = {{"param", m.sweep_param}, {"values", m.sweep_values}};
  nlohmann::ordered_json config;
  for (const auto& [k, v] : flatten_config(m.config)) config[k] = v;
  j["config"] = std::move(config);
  j["outputs"] = m.outputs;
  return j.dump(2) + "\n";
}

std::filesystem::path write_manifest(const RunManifest& m, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto path = dir / "manifest.json";
  write_file(path, manifest_json(m));
  return path;
}

}  // namespace ntnsim
