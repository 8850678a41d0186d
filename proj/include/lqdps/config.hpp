#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lqdps/benchmarks.hpp"
#include "lqdps/solver.hpp"

namespace lqdps {

// Everything a single run needs, as read from a key=value config file.
struct RunSpec {
  std::string problem_id = "fa";
  ScalarizationKind scalarization = ScalarizationKind::SumShifted;
  LqdpsConfig config;
  Vector x0;                 // empty means the benchmark default
  Vector z0;                 // empty means all-ones of matching m
  Vector c_plus, c_minus;    // empty means the benchmark 3/2 spec
  std::uint64_t seed = 0;

  MultiObjectiveProblem make_problem() const { return benchmark_problem(problem_id); }

  QuasiDistanceSpec make_qd_spec(std::size_t n) const {
    if (c_plus.empty() && c_minus.empty()) return benchmark_qd_spec(n);
    QuasiDistanceSpec spec{n, c_plus, c_minus};
    spec.validate();
    return spec;
  }

  Vector make_x0() const { return x0.empty() ? benchmark_x0() : x0; }
  Vector make_z0(std::size_t m) const { return z0.empty() ? benchmark_z0(m) : z0; }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline Vector parse_number_list(const std::string& s, const std::string& key) {
  Vector out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) throw std::invalid_argument("config: empty element in list '" + key + "'");
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size())
      throw std::invalid_argument("config: bad number '" + tok + "' in '" + key + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("config: empty list for '" + key + "'");
  return out;
}

inline double parse_number(const std::string& s, const std::string& key) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != trim(s).size() && trim(s).substr(pos).find_first_not_of(" \t") != std::string::npos)
    throw std::invalid_argument("config: bad number '" + s + "' for '" + key + "'");
  return v;
}

}  // namespace detail

// Accepts the table spellings plus "const:<v>" and bare numbers.
inline Schedule parse_schedule(const std::string& raw) {
  std::string s = detail::trim(raw);
  if (s == "1+1/k") return Schedule{ScheduleKind::OnePlusInvK, 0.0};
  if (s == "k") return Schedule{ScheduleKind::KLinear, 0.0};
  if (s == "2-1/k") return Schedule{ScheduleKind::TwoMinusInvK, 0.0};
  if (s == "1/k") return Schedule{ScheduleKind::InvK, 0.0};
  std::string num = s;
  if (s.rfind("const:", 0) == 0) num = s.substr(6);
  try {
    std::size_t pos = 0;
    double v = std::stod(num, &pos);
    if (pos == num.size()) return Schedule::constant(v);
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("config: unknown schedule '" + raw +
                              "' (expected 1+1/k | k | 2-1/k | 1/k | const:<v>)");
}

inline RunSpec parse_run_spec(std::istream& is) {
  RunSpec spec;
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string s = detail::trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = detail::trim(s.substr(0, eq));
    std::string val = detail::trim(s.substr(eq + 1));

    if (key == "problem") {
      spec.problem_id = val;
    } else if (key == "scalarization") {
      if (val == "sum_shifted")
        spec.scalarization = ScalarizationKind::SumShifted;
      else if (val == "exponential")
        spec.scalarization = ScalarizationKind::Exponential;
      else
        throw std::invalid_argument("config: scalarization must be sum_shifted|exponential");
    } else if (key == "mode") {
      if (val == "q2")
        spec.config.mode = ProximalMode::QSquared;
      else if (val == "q")
        spec.config.mode = ProximalMode::QPlain;
      else
        throw std::invalid_argument("config: mode must be q2|q");
    } else if (key == "mu") {
      spec.config.mu = parse_schedule(val);
    } else if (key == "beta") {
      spec.config.beta = parse_schedule(val);
    } else if (key == "tol") {
      spec.config.tol = detail::parse_number(val, key);
    } else if (key == "max_iter") {
      spec.config.max_iter = static_cast<long>(detail::parse_number(val, key));
    } else if (key == "x0") {
      spec.x0 = detail::parse_number_list(val, key);
    } else if (key == "z0") {
      spec.z0 = detail::parse_number_list(val, key);
    } else if (key == "c_plus") {
      spec.c_plus = detail::parse_number_list(val, key);
    } else if (key == "c_minus") {
      spec.c_minus = detail::parse_number_list(val, key);
    } else if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(detail::parse_number(val, key));
    } else if (key == "inner.penalty_weight") {
      spec.config.inner.penalty_weight = detail::parse_number(val, key);
    } else if (key == "inner.sweeps") {
      spec.config.inner.sweeps = static_cast<int>(detail::parse_number(val, key));
    } else if (key == "inner.step0") {
      spec.config.inner.step0 = detail::parse_number(val, key);
    } else if (key == "inner.min_step") {
      spec.config.inner.min_step = detail::parse_number(val, key);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" +
                                  key + "'");
    }
  }
  return spec;
}

inline RunSpec load_run_spec(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("config: cannot open '" + path + "'");
  return parse_run_spec(is);
}

inline RunResult execute_run_spec(const RunSpec& spec) {
  MultiObjectiveProblem problem = spec.make_problem();
  ScalarizationModel model{spec.scalarization, problem.m};
  QuasiDistanceSpec qspec = spec.make_qd_spec(problem.n);
  return run_lqdps(problem, model, qspec, spec.config, spec.make_x0(), spec.make_z0(problem.m));
}

}  // namespace lqdps
