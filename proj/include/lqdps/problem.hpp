#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "lqdps/rng.hpp"
#include "lqdps/vec.hpp"

namespace lqdps {

// Analytic parameterization of the Pareto set: theta in a parameter box maps
// to a decision vector on the set. theta_passthrough declares that
// map(theta)[j] == theta[j] for j < dim(theta), which enables exact pruning
// in the distance scan.
struct ParetoSetModel {
  Box param_box;
  std::function<Vector(const Vector&)> map;
  bool theta_passthrough = false;
};

struct MultiObjectiveProblem {
  std::string name;
  std::size_t n = 0;  // decision dimension
  std::size_t m = 0;  // objective count
  std::function<Vector(const Vector&)> objectives;
  Box box;
  std::optional<std::size_t> coercive_index;  // hypothesis metadata, not an algorithm input
  std::optional<ParetoSetModel> pareto_set;

  void validate() const {
    require(n > 0 && m > 0, "MultiObjectiveProblem: n and m must be positive");
    require(static_cast<bool>(objectives), "MultiObjectiveProblem: missing evaluator");
    box.validate();
    require(box.dim() == n, "MultiObjectiveProblem: box dimension != n");
    if (coercive_index) require(*coercive_index < m, "MultiObjectiveProblem: bad coercive index");
  }
};

// Sublevel-set anchor Omega = { x : F(x) <= F(x_ref) componentwise }.
struct SublevelRef {
  Vector x_ref;
  Vector f_ref;  // cached F(x_ref)
};

struct ParetoVerdict {
  bool is_weak_pareto_candidate = true;
  std::optional<Vector> witness;  // strictly dominating point, present iff candidate is false
};

inline Vector evaluate_objectives(const MultiObjectiveProblem& problem, const Vector& x,
                                  bool clip_to_box = false) {
  require(x.size() == problem.n, "evaluate_objectives: dimension mismatch");
  Vector xe = x;
  if (clip_to_box) {
    xe = problem.box.clip(x);
  } else if (!problem.box.contains(x)) {
    throw std::invalid_argument("evaluate_objectives: point outside box (no clipping requested)");
  }
  Vector f = problem.objectives(xe);
  if (f.size() != problem.m)
    throw std::runtime_error("evaluate_objectives: evaluator returned wrong arity");
  for (double v : f)
    if (std::isnan(v)) throw std::runtime_error("evaluate_objectives: evaluator produced NaN");
  return f;
}

inline SublevelRef make_sublevel_ref(const MultiObjectiveProblem& problem, const Vector& x_ref) {
  return SublevelRef{x_ref, evaluate_objectives(problem, x_ref, true)};
}

// max_i (F_i(x) - F_i(x_ref))_+ : zero exactly when x is in the sublevel set.
inline double sublevel_violation(const MultiObjectiveProblem& problem, const SublevelRef& omega,
                                 const Vector& x) {
  Vector f = evaluate_objectives(problem, x, true);
  require_same_size(f, omega.f_ref, "sublevel_violation");
  double v = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) v = std::max(v, f[i] - omega.f_ref[i]);
  return std::max(v, 0.0);
}

// Randomized necessary-condition check of weak Pareto optimality: sample the
// box-intersected ball around x and look for a point strictly better in every
// objective. A "true" verdict is evidence, not a certificate.
inline ParetoVerdict weak_pareto_local_check(const MultiObjectiveProblem& problem, const Vector& x,
                                             double radius, long samples, std::uint64_t seed) {
  problem.validate();
  require(radius > 0.0, "weak_pareto_local_check: radius must be > 0");
  require(samples >= 1, "weak_pareto_local_check: samples must be >= 1");
  Vector fx = evaluate_objectives(problem, x, true);
  Rng rng(seed);
  const long max_attempts = 200 * samples;
  long accepted = 0;
  for (long a = 0; a < max_attempts && accepted < samples; ++a) {
    Vector y(problem.n);
    double r2 = 0.0;
    for (std::size_t i = 0; i < problem.n; ++i) {
      double d = rng.uniform(-radius, radius);
      y[i] = x[i] + d;
      r2 += d * d;
    }
    if (r2 > radius * radius) continue;       // keep the Euclidean ball
    if (!problem.box.contains(y)) continue;   // intersect with the box
    ++accepted;
    Vector fy = evaluate_objectives(problem, y);
    bool strictly_better = true;
    for (std::size_t i = 0; i < problem.m; ++i)
      if (!(fy[i] < fx[i] - 1e-12)) {
        strictly_better = false;
        break;
      }
    if (strictly_better) return ParetoVerdict{false, y};
  }
  return ParetoVerdict{true, std::nullopt};
}

namespace detail {

// Scan an axis-aligned parameter grid for min_theta |x - ps(theta)|_inf.
// Cells whose first p coordinates already exceed the incumbent in any
// |x_j - theta_j| term cannot win, so they are skipped before calling the map.
struct PsGridScan {
  const ParetoSetModel& ps;
  const Vector& x;
  double best = kInf;
  Vector best_theta;

  void scan(const Vector& lo, const Vector& hi, long points_per_dim) {
    std::size_t p = ps.param_box.dim();
    Vector theta(p);
    Vector step(p);
    for (std::size_t j = 0; j < p; ++j)
      step[j] = points_per_dim > 1 ? (hi[j] - lo[j]) / static_cast<double>(points_per_dim - 1) : 0.0;
    std::vector<long> idx(p, 0);
    while (true) {
      bool prunable = false;
      for (std::size_t j = 0; j < p; ++j) {
        theta[j] = lo[j] + step[j] * static_cast<double>(idx[j]);
        // Under passthrough, |x_j - theta_j| is a lower bound on the distance
        // at this cell, so cells beyond the incumbent are skipped unevaluated.
        if (ps.theta_passthrough && j < x.size() && std::abs(x[j] - theta[j]) >= best)
          prunable = true;
      }
      if (!prunable) {
        Vector pt = ps.map(theta);
        double d = inf_dist(x, pt);
        if (d < best) {
          best = d;
          best_theta = theta;
        }
      }
      // Odometer increment over the grid.
      std::size_t j = 0;
      for (; j < p; ++j) {
        if (++idx[j] < points_per_dim) break;
        idx[j] = 0;
      }
      if (j == p) break;
    }
  }
};

}  // namespace detail

// Distance (inf-norm) from x to the Pareto-set parameterization: coarse grid
// of 10^4 points per parameter dimension, then two 10x refinement passes
// around the incumbent.
inline double pareto_set_distance(const MultiObjectiveProblem& problem, const Vector& x) {
  if (!problem.pareto_set)
    throw std::runtime_error("pareto_set_distance: problem has no Pareto-set model");
  const ParetoSetModel& ps = *problem.pareto_set;
  std::size_t p = ps.param_box.dim();
  require(p >= 1, "pareto_set_distance: empty parameter box");

  detail::PsGridScan scan{ps, x, kInf, {}};
  // Seed the incumbent at the parameter nearest to x's leading coordinates.
  // The seed is a valid PS point, so it can only tighten the result; under
  // passthrough it also shrinks the pruning window up front.
  if (ps.theta_passthrough) {
    Vector theta0(p);
    for (std::size_t j = 0; j < p; ++j) {
      double t = j < x.size() ? x[j] : ps.param_box.lo[j];
      theta0[j] = std::clamp(t, ps.param_box.lo[j], ps.param_box.hi[j]);
    }
    Vector pt = ps.map(theta0);
    scan.best = inf_dist(x, pt);
    scan.best_theta = theta0;
  }

  const long coarse_points = 10000;
  Vector lo = ps.param_box.lo, hi = ps.param_box.hi;
  scan.scan(lo, hi, coarse_points);

  Vector spacing(p);
  for (std::size_t j = 0; j < p; ++j)
    spacing[j] = (hi[j] - lo[j]) / static_cast<double>(coarse_points - 1);

  for (int pass = 0; pass < 2; ++pass) {
    Vector rlo(p), rhi(p);
    for (std::size_t j = 0; j < p; ++j) {
      rlo[j] = std::max(ps.param_box.lo[j], scan.best_theta[j] - spacing[j]);
      rhi[j] = std::min(ps.param_box.hi[j], scan.best_theta[j] + spacing[j]);
      spacing[j] /= 10.0;
    }
    scan.scan(rlo, rhi, 21);
  }
  return scan.best;
}

// Heuristic probe of the coercivity hypothesis on objective r: F_r must grow
// along random rays between radii 1e2 and 1e3.
inline bool coercivity_probe(const MultiObjectiveProblem& problem, std::size_t r,
                             std::uint64_t seed = 0) {
  problem.validate();
  require(r < problem.m, "coercivity_probe: objective index out of range");
  Rng rng(seed);
  for (int ray = 0; ray < 8; ++ray) {
    Vector d(problem.n);
    double norm = 0.0;
    for (double& di : d) {
      di = rng.uniform(-1.0, 1.0);
      norm += di * di;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    Vector near(problem.n), far(problem.n);
    for (std::size_t i = 0; i < problem.n; ++i) {
      near[i] = d[i] / norm * 1e2;
      far[i] = d[i] / norm * 1e3;
    }
    // Evaluated raw: the hypothesis concerns F on all of R^n, not the box.
    Vector f_near = problem.objectives(near);
    Vector f_far = problem.objectives(far);
    if (!(f_far[r] > f_near[r])) return false;
  }
  return true;
}

}  // namespace lqdps
