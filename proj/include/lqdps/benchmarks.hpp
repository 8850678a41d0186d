#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lqdps/problem.hpp"
#include "lqdps/quasi_distance.hpp"

namespace lqdps {

// Benchmark triple from Li & Zhang's test set (their F1, F4, F6), with the
// analytic Pareto-set parameterizations used to measure solution error.
//
//   fa: F1 = x1 + 2(x3 - x1^2)^2
//       F2 = 1 - sqrt(x1) + 2(x2 - sqrt(x1))^2          on [0,1]^3
//       PS: x2 = sqrt(x1), x3 = x1^2
//
//   fb: F1 = x1 + 2(x3 - 0.8 x1 cos((6 pi x1 + pi)/3))^2
//       F2 = 1 - sqrt(x1) + 2(x2 - 0.8 x1 sin(6 pi x1 + 2 pi/3))^2
//                                                        on [0,1] x [-1,1]^2
//       PS: x2 = 0.8 x1 sin(6 pi x1 + 2 pi/3), x3 = 0.8 x1 cos((6 pi x1 + pi)/3)
//
//   fc: F1 = cos(0.5 x1 pi) cos(0.5 x2 pi)
//       F2 = cos(0.5 x1 pi) sin(0.5 x2 pi)
//       F3 = sin(0.5 x1 pi) + 2(x3 - 2 x2 sin(2 pi x1 + pi))^2
//                                                        on [0,1]^2 x [-2,2]
//       PS: x3 = 2 x2 sin(2 pi x1 + pi), (x1, x2) free in [0,1]^2

inline MultiObjectiveProblem make_fa() {
  MultiObjectiveProblem p;
  p.name = "fa";
  p.n = 3;
  p.m = 2;
  p.box = Box::cube(3, 0.0, 1.0);
  p.objectives = [](const Vector& x) {
    double x1 = std::max(x[0], 0.0);  // guards round-off before the square root
    double r1 = x[2] - x1 * x1;
    double r2 = x[1] - std::sqrt(x1);
    return Vector{x1 + 2.0 * r1 * r1, 1.0 - std::sqrt(x1) + 2.0 * r2 * r2};
  };
  ParetoSetModel ps;
  ps.param_box = Box::cube(1, 0.0, 1.0);
  ps.map = [](const Vector& t) {
    double th = std::max(t[0], 0.0);
    return Vector{th, std::sqrt(th), th * th};
  };
  ps.theta_passthrough = true;
  p.pareto_set = ps;
  return p;
}

inline MultiObjectiveProblem make_fb() {
  MultiObjectiveProblem p;
  p.name = "fb";
  p.n = 3;
  p.m = 2;
  p.box = Box{Vector{0.0, -1.0, -1.0}, Vector{1.0, 1.0, 1.0}};
  p.objectives = [](const Vector& x) {
    const double pi = std::numbers::pi;
    double x1 = std::max(x[0], 0.0);
    double r1 = x[2] - 0.8 * x1 * std::cos((6.0 * pi * x1 + pi) / 3.0);
    double r2 = x[1] - 0.8 * x1 * std::sin(6.0 * pi * x1 + 2.0 * pi / 3.0);
    return Vector{x1 + 2.0 * r1 * r1, 1.0 - std::sqrt(x1) + 2.0 * r2 * r2};
  };
  ParetoSetModel ps;
  ps.param_box = Box::cube(1, 0.0, 1.0);
  ps.map = [](const Vector& t) {
    const double pi = std::numbers::pi;
    double th = t[0];
    return Vector{th, 0.8 * th * std::sin(6.0 * pi * th + 2.0 * pi / 3.0),
                  0.8 * th * std::cos((6.0 * pi * th + pi) / 3.0)};
  };
  ps.theta_passthrough = true;
  p.pareto_set = ps;
  return p;
}

inline MultiObjectiveProblem make_fc() {
  MultiObjectiveProblem p;
  p.name = "fc";
  p.n = 3;
  p.m = 3;
  p.box = Box{Vector{0.0, 0.0, -2.0}, Vector{1.0, 1.0, 2.0}};
  p.objectives = [](const Vector& x) {
    const double pi = std::numbers::pi;
    double r3 = x[2] - 2.0 * x[1] * std::sin(2.0 * pi * x[0] + pi);
    return Vector{std::cos(0.5 * x[0] * pi) * std::cos(0.5 * x[1] * pi),
                  std::cos(0.5 * x[0] * pi) * std::sin(0.5 * x[1] * pi),
                  std::sin(0.5 * x[0] * pi) + 2.0 * r3 * r3};
  };
  ParetoSetModel ps;
  ps.param_box = Box::cube(2, 0.0, 1.0);
  ps.map = [](const Vector& t) {
    const double pi = std::numbers::pi;
    return Vector{t[0], t[1], 2.0 * t[1] * std::sin(2.0 * pi * t[0] + pi)};
  };
  ps.theta_passthrough = true;
  p.pareto_set = ps;
  return p;
}

inline MultiObjectiveProblem benchmark_problem(const std::string& id) {
  if (id == "fa") return make_fa();
  if (id == "fb") return make_fb();
  if (id == "fc") return make_fc();
  throw std::invalid_argument("benchmark_problem: unknown id '" + id + "' (expected fa|fb|fc)");
}

inline Vector benchmark_eval(const std::string& id, const Vector& x) {
  return evaluate_objectives(benchmark_problem(id), x);
}

inline double ps_distance(const std::string& id, const Vector& x) {
  return pareto_set_distance(benchmark_problem(id), x);
}

// Quasi-distance used throughout the experiments: c+ = 3, c- = 2 per coordinate.
inline QuasiDistanceSpec benchmark_qd_spec(std::size_t n = 3) {
  return QuasiDistanceSpec::uniform(n, 3.0, 2.0);
}

inline Vector benchmark_x0() { return Vector{0.5, 0.5, 0.5}; }
inline Vector benchmark_z0(std::size_t m) { return Vector(m, 1.0); }

}  // namespace lqdps
