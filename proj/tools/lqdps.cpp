// Command-line front end: single runs from a config file, the experiment
// tables, trace re-audits, and the seeded property suites.
//
// Exit codes: 0 success, 1 usage/validation error, 2 audit or property failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lqdps/config.hpp"
#include "lqdps/props.hpp"
#include "lqdps/table.hpp"
#include "lqdps/trace_csv.hpp"

namespace fs = std::filesystem;
using namespace lqdps;

namespace {

void print_run_summary(const RunSpec& spec, const RunResult& result) {
  std::printf("problem          %s\n", spec.problem_id.c_str());
  std::printf("scalarization    %s\n", scalarization_str(spec.scalarization).c_str());
  std::printf("mode             %s\n", spec.config.mode == ProximalMode::QSquared ? "q2" : "q");
  std::printf("mu, beta         %s, %s\n", spec.config.mu.str().c_str(),
              spec.config.beta.str().c_str());
  std::printf("iterations       %ld\n", result.iterations);
  std::printf("stop             %s\n", stop_reason_str(result.stop));
  std::printf("x_final         ");
  for (double v : result.x_final) std::printf(" %.10g", v);
  std::printf("\nz_final         ");
  for (double v : result.z_final) std::printf(" %.10g", v);
  const IterationRecord& last = result.trace.records.back();
  std::printf("\nF(x_final)      ");
  for (double v : last.f_values) std::printf(" %.10g", v);
  std::printf("\nf(x,z)           %.10g\n", last.f);
  try {
    double d = pareto_set_distance(spec.make_problem(), result.x_final);
    std::printf("ps_distance      %.6e\n", d);
  } catch (const std::exception&) {
    // no Pareto-set model for this problem
  }
  std::printf("audit            %ld descent violations, max viol %.3e, max z_res %.3e, "
              "sum q^2 %.6e\n",
              result.audit.descent_violations, result.audit.max_sublevel_violation,
              result.audit.max_z_residual, result.audit.qsq_partial_sum);
}

void print_audit(const AuditSummary& a) {
  std::printf("descent violations       %ld\n", a.descent_violations);
  std::printf("q^2 partial sum          %.10e\n", a.qsq_partial_sum);
  std::printf("q^2 last term            %.10e\n", a.qsq_last_term);
  std::printf("max sublevel violation   %.10e\n", a.max_sublevel_violation);
  std::printf("max z residual           %.10e\n", a.max_z_residual);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximal point scalarization solver for multi-objective problems"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  int example_id = 1;
  std::string trace_path;
  std::uint64_t seed = 0;

  CLI::App* run_cmd = app.add_subcommand("run", "Single run from a config file");
  run_cmd->add_option("--config", config_path, "key=value config file")->required();
  run_cmd->add_option("--out", out_dir, "output directory for the trace CSV");

  CLI::App* table_cmd = app.add_subcommand("table", "Run one experiment table (15 rows x 2)");
  table_cmd->add_option("--example", example_id, "example id: 1 (fa), 2 (fb), 3 (fc)")->required();
  table_cmd->add_option("--out", out_dir, "output directory");
  table_cmd->add_option("--seed", seed, "seed for sampled diagnostics");

  CLI::App* audit_cmd = app.add_subcommand("audit", "Re-run audits on a trace CSV");
  audit_cmd->add_option("--trace", trace_path, "trace CSV produced by `run`")->required();

  CLI::App* props_cmd = app.add_subcommand("props", "Run all property suites");
  props_cmd->add_option("--seed", seed, "property suite seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/help
    return e.get_name() == "CallForHelp" ? 0 : 1;
  }

  try {
    if (*run_cmd) {
      RunSpec spec = load_run_spec(config_path);
      RunResult result = execute_run_spec(spec);
      print_run_summary(spec, result);
      std::string stem = fs::path(config_path).stem().string();
      fs::path out = fs::path(out_dir) / (stem + ".trace.csv");
      write_trace_csv(result.trace, out.string());
      std::printf("trace            %s\n", out.string().c_str());
      return 0;
    }
    if (*table_cmd) {
      TableOverrides overrides;
      overrides.seed = seed;
      TableReport report = run_table(example_id, overrides);
      std::string stem = "example" + std::to_string(example_id);
      fs::path csv = fs::path(out_dir) / (stem + ".table.csv");
      fs::path md = fs::path(out_dir) / (stem + ".table.md");
      write_table_csv(report, csv.string());
      write_table_md(report, md.string());
      long errors = 0;
      for (const TableEntry& e : report.entries)
        if (!e.ok) ++errors;
      std::printf("wrote %s and %s (%zu entries, %ld errors)\n", csv.string().c_str(),
                  md.string().c_str(), report.entries.size(), errors);
      return 0;
    }
    if (*audit_cmd) {
      IterationTrace trace = read_trace_csv(trace_path);
      AuditSummary a = audit_trace(trace);
      print_audit(a);
      bool ok = a.descent_violations == 0 && a.max_sublevel_violation <= 1e-6;
      std::printf("%s\n", ok ? "AUDIT OK" : "AUDIT FAILED");
      return ok ? 0 : 2;
    }
    if (*props_cmd) {
      long violations = run_property_suites(seed, std::cout);
      return violations == 0 ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
