#pragma once
//! \file runner.hpp
//! \brief Batch runs over scheme x grid matrices with CSV reports.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "advection1d.hpp"
#include "euler2d.hpp"
#include "metrics.hpp"
#include "scheme.hpp"

namespace mopweno {

struct RunConfig {
  std::string problem = "sin";
  std::vector<std::string> schemes;
  std::vector<int> cells;
  double t_end = std::numeric_limits<double>::quiet_NaN();  // NaN: problem default
  double cfl = std::numeric_limits<double>::quiet_NaN();    // NaN: problem default
  std::string dt_form = "sum";
  std::string out_dir = "out";
  std::string baseline;
  bool slow = false;
};

inline bool is_2d_problem(const std::string& p) { return p == "shock_vortex" || p == "riemann4"; }

namespace detail {
inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument("expected a boolean, got '" + v + "'");
}
}  // namespace detail

//! Flat "key = value" lines; '#' starts a comment. List keys (scheme, cells) accept commas and
//! may repeat.
inline RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": missing '='");
    const std::string key = detail::trim(line.substr(0, eq)), val = detail::trim(line.substr(eq + 1));
    try {
      if (key == "problem") cfg.problem = val;
      else if (key == "scheme" || key == "schemes") {
        for (auto& s : detail::split_list(val)) cfg.schemes.push_back(s);
      } else if (key == "cells") {
        for (auto& s : detail::split_list(val)) cfg.cells.push_back(std::stoi(s));
      } else if (key == "tfinal") cfg.t_end = std::stod(val);
      else if (key == "cfl") cfg.cfl = std::stod(val);
      else if (key == "dt_form") cfg.dt_form = val;
      else if (key == "out") cfg.out_dir = val;
      else if (key == "baseline") cfg.baseline = val;
      else if (key == "slow") cfg.slow = detail::parse_bool(val);
      else throw std::invalid_argument("unknown key '" + key + "'");
    } catch (const std::logic_error& e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  return parse_config(in);
}

//! Throws on unknown problem or scheme names and nonpositive sizes.
inline void validate_config(const RunConfig& c) {
  if (!is_2d_problem(c.problem)) initial_condition_from_name(c.problem);
  for (const auto& s : c.schemes) parse_scheme(s);
  for (int n : c.cells)
    if (n <= 0) throw std::invalid_argument("grid sizes must be positive");
  if (c.dt_form != "sum" && c.dt_form != "min") throw std::invalid_argument("dt_form must be 'sum' or 'min'");
  if (!std::isnan(c.t_end) && !(c.t_end >= 0.0)) throw std::invalid_argument("tfinal must be >= 0");
}

inline double effective_t_end(const RunConfig& c) {
  if (!std::isnan(c.t_end)) return c.t_end;
  if (is_2d_problem(c.problem)) return default_t_end(euler_problem_from_name(c.problem));
  return 2.0;
}

//! Long runs (t >= 2000 in 1D, 400^2 and finer in 2D) need the slow opt-in.
inline bool requires_slow(const RunConfig& c, int n) {
  return is_2d_problem(c.problem) ? n >= 400 : effective_t_end(c) >= 2000.0;
}

struct RunReport {
  std::string scheme;
  int n = 0;
  std::string status = "ok";  // ok | failed | skipped
  std::string message;
  ErrorTriple errors{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN()};
  ErrorTriple orders{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN()};
  std::uint64_t non_op_count = 0;
  std::uint64_t weight_evaluations = 0;
  long steps = 0;
  double slice_tv = std::numeric_limits<double>::quiet_NaN();
  double min_density = std::numeric_limits<double>::quiet_NaN();
  double wall_seconds = 0.0;
  std::string solution_path;
  std::string slice_path;
};

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

//! Writes to a temporary sibling and renames it over \p path.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

namespace detail {

inline void run_1d(const RunConfig& c, const Scheme& scheme, int n, RunReport& r) {
  AdvectionProblem p;
  p.ic = initial_condition_from_name(c.problem);
  p.n_cells = n;
  p.t_end = effective_t_end(c);
  p.cfl_rule = default_cfl_rule(p.ic);
  if (!std::isnan(c.cfl)) {
    p.cfl_rule = CflRule::fixed;
    p.fixed_cfl = c.cfl;
  }
  const AdvectionResult res = solve_advection(p, scheme);
  r.errors = res.errors;
  r.non_op_count = res.non_op.flagged;
  r.weight_evaluations = res.non_op.points;
  r.steps = res.steps;

  const Grid1D grid(-1.0, 1.0, n);
  std::string csv = "x_center,u,u_exact\n";
  for (int j = 0; j < n; ++j)
    csv += fmt17(grid.center(j)) + "," + fmt17(res.numeric[static_cast<std::size_t>(j)]) + "," +
           fmt17(res.exact[static_cast<std::size_t>(j)]) + "\n";
  const auto path = std::filesystem::path(c.out_dir) / (c.problem + "_" + r.scheme + "_N" + std::to_string(n) + ".csv");
  write_atomic(path, csv);
  r.solution_path = path.string();
}

inline void run_2d(const RunConfig& c, const Scheme& scheme, int n, RunReport& r) {
  EulerRun run;
  run.problem = euler_problem_from_name(c.problem);
  run.n = n;
  run.t_end = effective_t_end(c);
  if (!std::isnan(c.cfl)) run.cfl = c.cfl;
  run.dt_form = c.dt_form == "min" ? DtForm::min : DtForm::sum;
  const EulerResult res = solve_euler(run, scheme);
  r.non_op_count = res.non_op.flagged;
  r.weight_evaluations = res.non_op.points;
  r.steps = res.steps;

  std::string csv = "x,y,rho,u,v,p\n";
  double rho_min = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double rho = euler_primitive(res, i, j, 0);
      rho_min = std::min(rho_min, rho);
      csv += fmt17(res.grid.xc(i)) + "," + fmt17(res.grid.yc(j)) + "," + fmt17(rho) + "," +
             fmt17(euler_primitive(res, i, j, 1)) + "," + fmt17(euler_primitive(res, i, j, 2)) + "," +
             fmt17(euler_primitive(res, i, j, 3)) + "\n";
    }
  }
  r.min_density = rho_min;
  const std::string stem = c.problem + "_" + r.scheme + "_N" + std::to_string(n);
  const auto path = std::filesystem::path(c.out_dir) / (stem + ".csv");
  write_atomic(path, csv);
  r.solution_path = path.string();

  const auto slice = density_slice(res, default_slice(run.problem));
  r.slice_tv = total_variation(std::span<const SliceSample>(slice));
  std::string s = "x,rho\n";
  for (const auto& p : slice) s += fmt17(p.coord) + "," + fmt17(p.value) + "\n";
  const auto spath = std::filesystem::path(c.out_dir) / (stem + "_slice.csv");
  write_atomic(spath, s);
  r.slice_path = spath.string();
}

}  // namespace detail

//! One report per (scheme, N). Solver failures are recorded and the matrix continues.
inline std::vector<RunReport> run_matrix(const RunConfig& c) {
  validate_config(c);
  std::vector<RunReport> reports;
  std::vector<int> cells = c.cells;
  std::sort(cells.begin(), cells.end());
  for (const auto& name : c.schemes) {
    const Scheme scheme = parse_scheme(name);
    std::vector<std::size_t> mine;
    for (int n : cells) {
      RunReport r;
      r.scheme = name;
      r.n = n;
      if (requires_slow(c, n) && !c.slow) {
        r.status = "skipped";
        r.message = "requires --slow";
        reports.push_back(r);
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      try {
        if (is_2d_problem(c.problem)) detail::run_2d(c, scheme, n, r);
        else detail::run_1d(c, scheme, n, r);
      } catch (const std::exception& e) {
        r.status = "failed";
        r.message = e.what();
      }
      r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      mine.push_back(reports.size());
      reports.push_back(r);
    }
    for (std::size_t k = 1; k < mine.size(); ++k) {
      RunReport& cur = reports[mine[k]];
      const RunReport& prev = reports[mine[k - 1]];
      if (cur.status != "ok" || prev.status != "ok") continue;
      const double ratio = static_cast<double>(cur.n) / prev.n;
      cur.orders = {convergence_order(prev.errors.l1, cur.errors.l1, ratio),
                    convergence_order(prev.errors.l2, cur.errors.l2, ratio),
                    convergence_order(prev.errors.linf, cur.errors.linf, ratio)};
    }
  }
  return reports;
}

struct ComparisonRow {
  std::string scheme;
  int n = 0;
  ErrorTriple pct;
};

//! Increased error (percent) of every report relative to \p baseline at the same N.
inline std::vector<ComparisonRow> compare_schemes(const std::vector<RunReport>& reports, const std::string& baseline) {
  std::map<int, const RunReport*> base;
  for (const auto& r : reports)
    if (r.scheme == baseline && r.status == "ok") base[r.n] = &r;
  if (base.empty()) throw std::invalid_argument("baseline scheme '" + baseline + "' has no completed runs");
  std::vector<ComparisonRow> rows;
  for (const auto& r : reports) {
    if (r.status != "ok") continue;
    const auto it = base.find(r.n);
    if (it == base.end()) continue;
    const ErrorTriple& b = it->second->errors;
    rows.push_back({r.scheme, r.n,
                    {increased_error_pct(r.errors.l1, b.l1), increased_error_pct(r.errors.l2, b.l2),
                     increased_error_pct(r.errors.linf, b.linf)}});
  }
  return rows;
}

//! Deterministic summary body (no timings).
inline std::string summary_csv(const std::vector<RunReport>& reports) {
  std::string s = "scheme,N,status,L1,L2,Linf,order_L1,order_L2,order_Linf,non_op_count,weight_evaluations,steps,slice_tv,min_density,solution,message\n";
  for (const auto& r : reports) {
    s += r.scheme + "," + std::to_string(r.n) + "," + r.status + "," + fmt17(r.errors.l1) + "," +
         fmt17(r.errors.l2) + "," + fmt17(r.errors.linf) + "," + fmt17(r.orders.l1) + "," + fmt17(r.orders.l2) +
         "," + fmt17(r.orders.linf) + "," + std::to_string(r.non_op_count) + "," +
         std::to_string(r.weight_evaluations) + "," + std::to_string(r.steps) + "," + fmt17(r.slice_tv) + "," +
         fmt17(r.min_density) + "," + r.solution_path + ",\"" + r.message + "\"\n";
  }
  return s;
}

inline std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string s = "scheme,N,pct_L1,pct_L2,pct_Linf\n";
  for (const auto& r : rows)
    s += r.scheme + "," + std::to_string(r.n) + "," + fmt17(r.pct.l1) + "," + fmt17(r.pct.l2) + "," +
         fmt17(r.pct.linf) + "\n";
  return s;
}

//! Writes summary.csv, comparison.csv (when a baseline is set) and metadata.json into out_dir.
inline void write_reports(const RunConfig& c, const std::vector<RunReport>& reports) {
  const std::filesystem::path dir(c.out_dir);
  write_atomic(dir / "summary.csv", summary_csv(reports));
  if (!c.baseline.empty()) write_atomic(dir / "comparison.csv", comparison_csv(compare_schemes(reports, c.baseline)));

  nlohmann::json meta;
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  meta["finished_utc"] = stamp;
  meta["problem"] = c.problem;
  meta["t_end"] = effective_t_end(c);
  meta["slow"] = c.slow;
  for (const auto& r : reports)
    meta["runs"].push_back({{"scheme", r.scheme}, {"N", r.n}, {"status", r.status}, {"wall_seconds", r.wall_seconds}});
  write_atomic(dir / "metadata.json", meta.dump(2) + "\n");
}

}  // namespace mopweno
