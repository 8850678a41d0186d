#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lqdps/benchmarks.hpp"
#include "lqdps/solver.hpp"

namespace lqdps {

// The 15-row experiment grid: five (mu, beta) schedule blocks, each at
// tolerances 1e-2, 1e-3, 1e-4.
struct ExperimentRow {
  int number = 0;
  double tol = 0.0;
  Schedule mu;
  Schedule beta;
};

inline std::array<ExperimentRow, 15> experiment_grid() {
  const Schedule one_plus{ScheduleKind::OnePlusInvK, 0.0};
  const Schedule k_lin{ScheduleKind::KLinear, 0.0};
  const Schedule two_minus{ScheduleKind::TwoMinusInvK, 0.0};
  const Schedule inv_k{ScheduleKind::InvK, 0.0};
  const Schedule one = Schedule::constant(1.0);
  const std::array<std::pair<Schedule, Schedule>, 5> blocks{{
      {one_plus, one_plus}, {one_plus, k_lin}, {two_minus, inv_k}, {two_minus, k_lin}, {one, one}}};
  const std::array<double, 3> tols{1e-2, 1e-3, 1e-4};

  std::array<ExperimentRow, 15> grid;
  int r = 0;
  for (const auto& [mu, beta] : blocks)
    for (double tol : tols) {
      grid[r] = ExperimentRow{r + 1, tol, mu, beta};
      ++r;
    }
  return grid;
}

struct TableEntry {
  int row = 0;
  double tol = 0.0;
  Schedule mu;
  Schedule beta;
  ScalarizationKind scalarization = ScalarizationKind::SumShifted;
  bool ok = false;
  std::string error;  // per-run failures are recorded, not fatal
  RunResult result;
  double ps_dist = kNaN;
};

struct TableReport {
  int example_id = 0;
  std::string problem_id;
  std::vector<TableEntry> entries;  // 15 rows x 2 scalarizations
};

struct TableOverrides {
  long max_iter = 100;
  InnerSolverConfig inner;
  std::uint64_t seed = 0;  // reserved for sampled diagnostics; runs are deterministic
};

inline std::string scalarization_str(ScalarizationKind k) {
  return k == ScalarizationKind::SumShifted ? "sum_shifted" : "exponential";
}

// Runs the full grid for one example (1 -> fa, 2 -> fb, 3 -> fc) with the
// benchmark quasi-distance and starting points.
inline TableReport run_table(int example_id, const TableOverrides& overrides = {}) {
  static const char* ids[] = {"fa", "fb", "fc"};
  if (example_id < 1 || example_id > 3)
    throw std::invalid_argument("run_table: example must be 1, 2 or 3");

  TableReport report;
  report.example_id = example_id;
  report.problem_id = ids[example_id - 1];
  MultiObjectiveProblem problem = benchmark_problem(report.problem_id);
  QuasiDistanceSpec qspec = benchmark_qd_spec(problem.n);
  Vector x0 = benchmark_x0();
  Vector z0 = benchmark_z0(problem.m);

  for (const ExperimentRow& row : experiment_grid()) {
    for (ScalarizationKind kind : {ScalarizationKind::SumShifted, ScalarizationKind::Exponential}) {
      TableEntry entry;
      entry.row = row.number;
      entry.tol = row.tol;
      entry.mu = row.mu;
      entry.beta = row.beta;
      entry.scalarization = kind;
      try {
        LqdpsConfig config;
        config.mu = row.mu;
        config.beta = row.beta;
        config.tol = row.tol;
        config.max_iter = overrides.max_iter;
        config.inner = overrides.inner;
        ScalarizationModel model{kind, problem.m};
        entry.result = run_lqdps(problem, model, qspec, config, x0, z0);
        entry.ps_dist = pareto_set_distance(problem, entry.result.x_final);
        entry.ok = true;
      } catch (const std::exception& e) {
        entry.error = e.what();
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

inline std::string fmt_e6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

inline std::string fmt_tol(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

inline void write_table_csv(const TableReport& report, std::ostream& os) {
  os << "row,tol,mu,beta,scalarization,iters,ps_dist,stop,descent_violations\n";
  for (const TableEntry& e : report.entries) {
    os << e.row << ',' << fmt_tol(e.tol) << ',' << e.mu.str() << ',' << e.beta.str() << ','
       << scalarization_str(e.scalarization) << ',';
    if (e.ok) {
      os << e.result.iterations << ',' << fmt_e6(e.ps_dist) << ','
         << stop_reason_str(e.result.stop) << ',' << e.result.audit.descent_violations;
    } else {
      os << "-1,nan,error,-1";
    }
    os << '\n';
  }
}

// Paper-style layout: one line per row with both scalarizations side by side.
inline void write_table_md(const TableReport& report, std::ostream& os) {
  os << "# Example " << report.example_id << " (" << report.problem_id << ")\n\n";
  os << "| No. | tol | mu_k | beta_k | k1* | err1 (PS dist) | k2* | err2 (PS dist) |\n";
  os << "|----|-----|------|--------|-----|----------------|-----|----------------|\n";
  for (std::size_t i = 0; i + 1 < report.entries.size(); i += 2) {
    const TableEntry& a = report.entries[i];      // sum_shifted
    const TableEntry& b = report.entries[i + 1];  // exponential
    os << "| " << a.row << " | " << fmt_tol(a.tol) << " | " << a.mu.str() << " | " << a.beta.str()
       << " | ";
    if (a.ok)
      os << a.result.iterations << " | " << fmt_e6(a.ps_dist) << " | ";
    else
      os << "err | err | ";
    if (b.ok)
      os << b.result.iterations << " | " << fmt_e6(b.ps_dist) << " |\n";
    else
      os << "err | err |\n";
  }
}

inline void write_table_csv(const TableReport& report, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_table_csv: cannot open " + path);
  write_table_csv(report, os);
}

inline void write_table_md(const TableReport& report, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_table_md: cannot open " + path);
  write_table_md(report, os);
}

}  // namespace lqdps
