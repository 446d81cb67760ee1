#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "swe/analysis.hpp"
#include "swe/cases.hpp"
#include "swe/errors.hpp"
#include "swe/grid.hpp"
#include "swe/state.hpp"
#include "swe/stepper.hpp"

namespace swe {

// All CSV output uses %.17g so cell averages round-trip exactly through text.
namespace detail {
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
inline std::string fmt_time(double t) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}
}  // namespace detail

inline void write_solution_csv(const std::string& path, const Grid1D& grid,
                               const Bathymetry1D& bath, const State1D& s) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << "x,b,h,hu,H\n";
  for (int i = 0; i < grid.n_cells; ++i) {
    const double b = bath.b_bar(i);
    const double H = s.H_bar[static_cast<size_t>(i)];
    out << detail::fmt17(grid.center(i)) << ',' << detail::fmt17(b) << ','
        << detail::fmt17(H - b) << ','
        << detail::fmt17(s.hu_bar[static_cast<size_t>(i)]) << ','
        << detail::fmt17(H) << '\n';
  }
}

inline void write_solution_csv(const std::string& path, const Grid2D& grid,
                               const Bathymetry2D& bath, const State2D& s) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << "x,y,b,h,hu,hv,H\n";
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const size_t q = static_cast<size_t>(j) * grid.nx + i;
      const double b = bath.b_bar(i, j);
      const double H = s.H_bar[q];
      out << detail::fmt17(grid.xc(i)) << ',' << detail::fmt17(grid.yc(j))
          << ',' << detail::fmt17(b) << ',' << detail::fmt17(H - b) << ','
          << detail::fmt17(s.hu_bar[q]) << ',' << detail::fmt17(s.hv_bar[q])
          << ',' << detail::fmt17(H) << '\n';
    }
  }
}

// Parses a solution CSV back into columns, keyed by header name.
inline std::map<std::string, std::vector<double>> read_csv_columns(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty csv '" + path + "'");
  std::vector<std::string> names;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) names.push_back(cell);
  }
  std::map<std::string, std::vector<double>> cols;
  for (const auto& n : names) cols[n] = {};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    size_t k = 0;
    while (std::getline(ss, cell, ',')) {
      if (k >= names.size()) break;
      cols[names[k]].push_back(std::stod(cell));
      ++k;
    }
  }
  return cols;
}

inline void write_run_log_csv(const std::string& path, const RunLog& log) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << "step,t,dt,min_h,total_mass\n";
  for (const auto& r : log.steps)
    out << r.step << ',' << detail::fmt17(r.t) << ',' << detail::fmt17(r.dt)
        << ',' << detail::fmt17(r.min_h) << ',' << detail::fmt17(r.total_mass)
        << '\n';
}

// One row of a convergence table (paper-style layout).
struct ConvergenceRow {
  int n = 0;
  double cfl = 0.0;
  ErrorReport err;
  std::optional<double> l1_h_order, l1_hu_order, l1_hv_order;
  std::optional<double> linf_h_order, linf_hu_order, linf_hv_order;
};

inline void write_convergence_csv(const std::string& path,
                                  const std::vector<ConvergenceRow>& rows,
                                  bool with_hv) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  auto ord = [](const std::optional<double>& o) {
    return o ? detail::fmt17(*o) : std::string();
  };
  out << "n,cfl,l1_h,l1_h_order,l1_hu,l1_hu_order";
  if (with_hv) out << ",l1_hv,l1_hv_order";
  out << ",linf_h,linf_h_order,linf_hu,linf_hu_order";
  if (with_hv) out << ",linf_hv,linf_hv_order";
  out << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << detail::fmt17(r.cfl) << ',' << detail::fmt17(r.err.h.l1)
        << ',' << ord(r.l1_h_order) << ',' << detail::fmt17(r.err.hu.l1) << ','
        << ord(r.l1_hu_order);
    if (with_hv)
      out << ',' << detail::fmt17(r.err.hv.l1) << ',' << ord(r.l1_hv_order);
    out << ',' << detail::fmt17(r.err.h.linf) << ',' << ord(r.linf_h_order)
        << ',' << detail::fmt17(r.err.hu.linf) << ',' << ord(r.linf_hu_order);
    if (with_hv)
      out << ',' << detail::fmt17(r.err.hv.linf) << ',' << ord(r.linf_hv_order);
    out << '\n';
  }
}

// Flat key = value configuration with one [section] per case override, e.g.
//   [ex4.2-accuracy]
//   nx = 400
//   cfl = 0.3
using ConfigSections = std::map<std::string, std::map<std::string, std::string>>;

inline ConfigSections parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  ConfigSections sections;
  std::string line, section;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(path + ":" + std::to_string(lineno) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key = value");
    sections[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return sections;
}

// A resolved run: case plus overrides. Unset fields fall back to the case.
struct RunConfig {
  std::string case_name;
  std::optional<int> nx, ny;
  std::optional<double> cfl, t_final;
  std::optional<bool> pp, strict_pp;
  std::string out_dir = ".";
  std::vector<double> snapshot_times;
  bool snapshots_set = false;
};

namespace detail {
inline bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "off" || v == "no") return false;
  throw ConfigError("config: cannot parse boolean '" + v + "' for " + key);
}
}  // namespace detail

inline void apply_config_section(RunConfig& rc,
                                 const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    try {
      if (key == "nx" || key == "n")
        rc.nx = std::stoi(value);
      else if (key == "ny")
        rc.ny = std::stoi(value);
      else if (key == "cfl")
        rc.cfl = std::stod(value);
      else if (key == "tfinal" || key == "t_final")
        rc.t_final = std::stod(value);
      else if (key == "pp")
        rc.pp = detail::parse_bool(value, key);
      else if (key == "strict_pp")
        rc.strict_pp = detail::parse_bool(value, key);
      else if (key == "out")
        rc.out_dir = value;
      else if (key == "snapshots") {
        rc.snapshot_times.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) rc.snapshot_times.push_back(std::stod(item));
        rc.snapshots_set = true;
      } else {
        throw ConfigError("config: unknown key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("config: cannot parse value '" + value + "' for key '" +
                        key + "'");
    }
  }
}

// Writes a config file section capturing this run (round-trips via
// parse_config_file + apply_config_section).
inline void write_config_file(const std::string& path, const RunConfig& rc) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << "[" << rc.case_name << "]\n";
  if (rc.nx) out << "nx = " << *rc.nx << '\n';
  if (rc.ny) out << "ny = " << *rc.ny << '\n';
  if (rc.cfl) out << "cfl = " << detail::fmt17(*rc.cfl) << '\n';
  if (rc.t_final) out << "tfinal = " << detail::fmt17(*rc.t_final) << '\n';
  if (rc.pp) out << "pp = " << (*rc.pp ? "true" : "false") << '\n';
  if (rc.strict_pp)
    out << "strict_pp = " << (*rc.strict_pp ? "true" : "false") << '\n';
  if (rc.out_dir != ".") out << "out = " << rc.out_dir << '\n';
  if (rc.snapshots_set) {
    out << "snapshots = ";
    for (size_t i = 0; i < rc.snapshot_times.size(); ++i)
      out << (i ? "," : "") << detail::fmt_time(rc.snapshot_times[i]);
    out << '\n';
  }
}

inline std::string snapshot_filename(double t) {
  return "solution_t" + detail::fmt_time(t) + ".csv";
}

}  // namespace swe
