#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "lqdps/problem.hpp"
#include "lqdps/quasi_distance.hpp"
#include "lqdps/scalarization.hpp"
#include "lqdps/vec.hpp"

namespace lqdps {

// Regularizer choice: the squared quasi-distance (mu/2) q^2(x, x_k), or the
// plain quasi-distance (mu/2) q(x, x_k).
enum class ProximalMode { QSquared, QPlain };

// One outer iteration's data: minimize
//   phi(x, z) = f(x, z) + beta_k * H(z; z_k) + (mu_k/2) * reg(x, x_k)
// over (Omega_k intersect box) x R^m_{++}.
struct SubproblemInstance {
  const MultiObjectiveProblem* problem = nullptr;
  Vector x_k;
  Vector z_k;
  double mu_k = 0.0;
  double beta_k = 0.0;
  ProximalMode mode = ProximalMode::QSquared;
  ScalarizationModel model;
  QuasiDistanceSpec qspec;
  SublevelRef omega;

  void validate() const {
    require(problem != nullptr, "SubproblemInstance: missing problem");
    problem->validate();
    qspec.validate();
    model.validate();
    require(mu_k > 0.0 && beta_k > 0.0, "SubproblemInstance: mu_k and beta_k must be > 0");
    require(z_k.size() == model.m, "SubproblemInstance: z_k has wrong length");
    require(all_positive(z_k), "SubproblemInstance: z_k must be strictly positive");
    require(problem->box.contains(x_k), "SubproblemInstance: x_k outside box");
    require(qspec.n == problem->n, "SubproblemInstance: quasi-distance dimension mismatch");
  }
};

struct InnerSolverConfig {
  // Quadratic penalty on the sublevel violation. The stationary violation of
  // the penalized subproblem is (multiplier)/(2 rho); benchmark multipliers
  // reach ~20, so 1e8 keeps violations well under the 1e-6 feasibility gate.
  double penalty_weight = 1e8;
  int sweeps = 8;               // alternating x/z rounds
  double step0 = 0.0;           // initial pattern step; <= 0 means 0.1 * box width
  double shrink = 0.5;
  double min_step = 1e-9;
  double z_root_tol = 1e-12;    // residual tolerance of the exponential z root

  void validate() const {
    require(penalty_weight > 0.0, "InnerSolverConfig: penalty_weight must be > 0");
    require(sweeps >= 1, "InnerSolverConfig: sweeps must be >= 1");
    require(shrink > 0.0 && shrink < 1.0, "InnerSolverConfig: shrink must be in (0,1)");
    require(min_step > 0.0, "InnerSolverConfig: min_step must be > 0");
    require(z_root_tol > 0.0, "InnerSolverConfig: z_root_tol must be > 0");
  }
};

// Computable stand-ins for the exact stationarity identities.
struct StationarityCertificate {
  double z_residual = 0.0;
  // Minimum one-sided difference quotient of phi(., z_next) over probed
  // feasible directions at x_next; nonnegative means no sampled descent left.
  double directional_slack = kInf;
  double descent_margin = 0.0;  // phi(x_k, z_k) - phi(x_next, z_next), >= 0
};

inline double proximal_term(const SubproblemInstance& inst, const Vector& x) {
  double q = qd_eval(inst.qspec, x, inst.x_k);
  double reg = inst.mode == ProximalMode::QSquared ? q * q : q;
  return 0.5 * inst.mu_k * reg;
}

inline double phi_eval(const SubproblemInstance& inst, const Vector& x, const Vector& z) {
  Vector f_values = evaluate_objectives(*inst.problem, x, true);
  return f_eval(inst.model, f_values, z) + inst.beta_k * H_eval(z, LogRegularizerRef{inst.z_k}) +
         proximal_term(inst, x);
}

// Penalized x-objective psi(x) = phi(x, z_fixed) + rho * violation(x)^2.
inline double penalized_objective(const SubproblemInstance& inst, const Vector& z_fixed,
                                  const InnerSolverConfig& config, const Vector& x) {
  Vector f_values = evaluate_objectives(*inst.problem, x, true);
  double viol = 0.0;
  for (std::size_t i = 0; i < f_values.size(); ++i)
    viol = std::max(viol, f_values[i] - inst.omega.f_ref[i]);
  viol = std::max(viol, 0.0);
  return f_eval(inst.model, f_values, z_fixed) + proximal_term(inst, x) +
         config.penalty_weight * viol * viol;
}

// Exact z update from the characterization 1/z_i - 1/z_k_i = h_i(x, z)/beta:
// closed form when h is identically one, safeguarded Newton/bisection on the
// strictly monotone scalar equation for the exponential model. The solution
// always lies in (0, z_k_i].
inline Vector solve_z_step(const ScalarizationModel& model, const Vector& f_values,
                           const Vector& z_k, double beta_k, double z_root_tol = 1e-12) {
  model.validate();
  require(f_values.size() == model.m && z_k.size() == model.m, "solve_z_step: length mismatch");
  require(all_positive(z_k), "solve_z_step: z_k must be strictly positive");
  require(beta_k > 0.0, "solve_z_step: beta_k must be > 0");

  Vector z(model.m);
  if (model.kind == ScalarizationKind::SumShifted) {
    for (std::size_t i = 0; i < model.m; ++i) z[i] = beta_k * z_k[i] / (beta_k + z_k[i]);
    return z;
  }

  for (std::size_t i = 0; i < model.m; ++i) {
    // r(z) = 1/z - 1/z_k - exp(z + F)/beta is strictly decreasing with
    // r(0+) = +inf and r(z_k) < 0.
    auto residual = [&](double zi) {
      return 1.0 / zi - 1.0 / z_k[i] - std::exp(zi + f_values[i]) / beta_k;
    };
    double hi = z_k[i];  // r(z_k) = -exp(z_k + F)/beta < 0
    double lo = hi;
    while (residual(lo) < 0.0) {
      lo *= 0.5;
      if (lo < 1e-300) throw std::runtime_error("solve_z_step: bracketing failed");
    }
    double zi = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      double r = residual(zi);
      if (std::abs(r) <= z_root_tol) break;
      if (r > 0.0)
        lo = zi;
      else
        hi = zi;
      double drdz = -1.0 / (zi * zi) - std::exp(zi + f_values[i]) / beta_k;
      double newton = zi - r / drdz;
      zi = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
    }
    z[i] = zi;
  }
  return z;
}

// max_i | 1/z_next_i - 1/z_k_i - h_i(F, z_next)/beta |.
inline double z_residual(const ScalarizationModel& model, const Vector& f_values,
                         const Vector& z_next, const Vector& z_k, double beta_k) {
  require(all_positive(z_next) && all_positive(z_k), "z_residual: z must be strictly positive");
  Vector h = f_partial_z(model, f_values, z_next);
  double r = 0.0;
  for (std::size_t i = 0; i < model.m; ++i)
    r = std::max(r, std::abs(1.0 / z_next[i] - 1.0 / z_k[i] - h[i] / beta_k));
  return r;
}

// Deterministic compass search on the penalized objective, started at x_start
// (the anchor x_k by default). Probes coordinates in ascending index order,
// positive direction first, and takes the first strict improvement; the step
// doubles after a success and shrinks otherwise, down to min_step. All probes
// are clipped to the box. Returns a point with psi(out) <= psi(start).
inline Vector solve_x_step(const SubproblemInstance& inst, const Vector& z_fixed,
                           const InnerSolverConfig& config, const Vector* x_start = nullptr) {
  config.validate();
  require(all_positive(z_fixed), "solve_x_step: z must be strictly positive");
  const Box& box = inst.problem->box;
  Vector x = box.clip(x_start ? *x_start : inst.x_k);
  double fx = penalized_objective(inst, z_fixed, config, x);

  double step0 = config.step0 > 0.0 ? config.step0 : 0.1 * box.max_finite_width();
  double delta = step0;
  const long eval_budget = 200000;
  long evals = 0;

  while (delta >= config.min_step && evals < eval_budget) {
    bool improved = false;
    for (std::size_t i = 0; i < x.size() && !improved; ++i) {
      for (double sign : {+1.0, -1.0}) {
        double moved = std::clamp(x[i] + sign * delta, box.lo[i], box.hi[i]);
        if (moved == x[i]) continue;
        Vector probe = x;
        probe[i] = moved;
        double fp = penalized_objective(inst, z_fixed, config, probe);
        ++evals;
        if (fp < fx) {
          x = std::move(probe);
          fx = fp;
          improved = true;
          break;
        }
      }
    }
    delta = improved ? delta * 2.0 : delta * config.shrink;
  }
  return x;
}

struct SubproblemResult {
  Vector x_next;
  Vector z_next;
  StationarityCertificate certificate;
};

// Alternating solve: exact z-step first (it certifies descent at x = x_k
// unconditionally), then compass x-steps, re-solving z from the new objective
// values each round. The whole chain is monotone in the penalized phi, and
// the penalty vanishes at x_k, so phi(x_next, z_next) <= f(x_k, z_k).
inline SubproblemResult solve_subproblem(const SubproblemInstance& inst,
                                         const InnerSolverConfig& config = {}) {
  inst.validate();
  config.validate();

  Vector f_k = evaluate_objectives(*inst.problem, inst.x_k, true);
  double phi_start = f_eval(inst.model, f_k, inst.z_k);  // H and prox vanish at (x_k, z_k)

  Vector z = solve_z_step(inst.model, f_k, inst.z_k, inst.beta_k, config.z_root_tol);
  Vector x = inst.x_k;
  for (int sweep = 0; sweep < config.sweeps; ++sweep) {
    Vector x_new = solve_x_step(inst, z, config, &x);
    Vector f_new = evaluate_objectives(*inst.problem, x_new, true);
    Vector z_new = solve_z_step(inst.model, f_new, inst.z_k, inst.beta_k, config.z_root_tol);
    if (x_new == x && z_new == z) break;
    x = std::move(x_new);
    z = std::move(z_new);
  }

  SubproblemResult out;
  out.certificate.descent_margin = phi_start - phi_eval(inst, x, z);
  Vector f_end = evaluate_objectives(*inst.problem, x, true);
  out.certificate.z_residual = z_residual(inst.model, f_end, z, inst.z_k, inst.beta_k);

  // One-sided difference quotients of phi(., z) along coordinate directions
  // that stay in the box and (to tolerance) in the sublevel set.
  const double t = 1e-7;
  double phi_at_x = phi_eval(inst, x, z);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (double sign : {+1.0, -1.0}) {
      double moved = std::clamp(x[i] + sign * t, inst.problem->box.lo[i], inst.problem->box.hi[i]);
      if (moved == x[i]) continue;
      Vector probe = x;
      probe[i] = moved;
      if (sublevel_violation(*inst.problem, inst.omega, probe) > 1e-6) continue;
      double quot = (phi_eval(inst, probe, z) - phi_at_x) / std::abs(moved - x[i]);
      out.certificate.directional_slack = std::min(out.certificate.directional_slack, quot);
    }
  }

  out.x_next = std::move(x);
  out.z_next = std::move(z);
  return out;
}

}  // namespace lqdps
