#pragma once

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lqdps/subproblem.hpp"

namespace lqdps {

// Parameter schedules from the experiment tables, evaluated at k >= 1.
enum class ScheduleKind { OnePlusInvK, KLinear, TwoMinusInvK, InvK, Constant };

struct Schedule {
  ScheduleKind kind = ScheduleKind::Constant;
  double value = 1.0;  // only used by Constant

  static Schedule constant(double v) { return Schedule{ScheduleKind::Constant, v}; }

  std::string str() const {
    switch (kind) {
      case ScheduleKind::OnePlusInvK: return "1+1/k";
      case ScheduleKind::KLinear: return "k";
      case ScheduleKind::TwoMinusInvK: return "2-1/k";
      case ScheduleKind::InvK: return "1/k";
      case ScheduleKind::Constant: {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", value);
        return buf;
      }
    }
    return "?";
  }
};

inline double schedule_eval(const Schedule& s, long k) {
  require(k >= 1, "schedule_eval: k must be >= 1");
  double kd = static_cast<double>(k);
  switch (s.kind) {
    case ScheduleKind::OnePlusInvK: return 1.0 + 1.0 / kd;
    case ScheduleKind::KLinear: return kd;
    case ScheduleKind::TwoMinusInvK: return 2.0 - 1.0 / kd;
    case ScheduleKind::InvK: return 1.0 / kd;
    case ScheduleKind::Constant: return s.value;
  }
  throw std::logic_error("schedule_eval: unknown kind");
}

struct LqdpsConfig {
  Schedule mu = Schedule::constant(1.0);
  Schedule beta = Schedule::constant(1.0);
  ProximalMode mode = ProximalMode::QSquared;
  double tol = 1e-3;
  long max_iter = 100;
  InnerSolverConfig inner;
  // Theorem bounds 0 < l < mu_k < L checked in q^2 mode; (0.5, 10) when unset.
  std::optional<std::pair<double, double>> mu_bounds_check;
  // The plain-q variant needs mu_k -> 0; a non-1/k schedule passes validation
  // only if the caller asserts it vanishes.
  bool assume_mu_vanishing = false;

  void validate() const {
    require(tol > 0.0, "LqdpsConfig: tol must be > 0");
    require(max_iter >= 1, "LqdpsConfig: max_iter must be >= 1");
    inner.validate();
    for (long k = 1; k <= max_iter; ++k) {
      require(schedule_eval(mu, k) > 0.0, "LqdpsConfig: mu schedule not positive");
      require(schedule_eval(beta, k) > 0.0, "LqdpsConfig: beta schedule not positive");
    }
    if (mode == ProximalMode::QPlain) {
      require(mu.kind == ScheduleKind::InvK || assume_mu_vanishing,
              "LqdpsConfig: plain-q mode requires a vanishing mu schedule");
    } else {
      auto [l, L] = mu_bounds_check.value_or(std::make_pair(0.5, 10.0));
      require(0.0 < l && l < L, "LqdpsConfig: invalid mu bounds");
      for (long k = 1; k <= max_iter; ++k) {
        double mu_k = schedule_eval(mu, k);
        require(l < mu_k && mu_k < L,
                "LqdpsConfig: mu schedule leaves the (l, L) bounds at k=" + std::to_string(k));
      }
    }
  }
};

enum class StopReason { TolReached, FixedPoint, MaxIter };

inline const char* stop_reason_str(StopReason r) {
  switch (r) {
    case StopReason::TolReached: return "tol_reached";
    case StopReason::FixedPoint: return "fixed_point";
    case StopReason::MaxIter: return "max_iter";
  }
  return "?";
}

// Record k holds iterate k plus the transition k -> k+1; the transition
// fields of the final record are NaN.
struct IterationRecord {
  long k = 0;
  Vector x;
  Vector z;
  Vector f_values;
  double f = kNaN;  // f(x^k, z^k)
  double qsq_step = kNaN;
  double step_inf = kNaN;
  double z_res = kNaN;
  double sublevel_viol = kNaN;
  double descent_margin = kNaN;
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  StopReason stop = StopReason::MaxIter;

  long iterations() const {
    return records.empty() ? 0 : static_cast<long>(records.size()) - 1;
  }
};

struct AuditSummary {
  long descent_violations = 0;     // f(x^k, z^k) increases beyond slack 1e-9
  double qsq_partial_sum = 0.0;    // sum of q^2(x^{k+1}, x^k)
  double qsq_last_term = 0.0;
  double max_sublevel_violation = 0.0;
  double max_z_residual = 0.0;
};

struct RunResult {
  Vector x_final;
  Vector z_final;
  long iterations = 0;
  StopReason stop = StopReason::MaxIter;
  IterationTrace trace;
  AuditSummary audit;
};

// Trace-only audits mirroring the convergence propositions: monotone
// f(x^k, z^k), summable q^2 steps, bounded feasibility and z residuals.
inline AuditSummary audit_trace(const IterationTrace& trace) {
  require(!trace.records.empty(), "audit_trace: empty trace");
  AuditSummary a;
  for (std::size_t k = 0; k + 1 < trace.records.size(); ++k) {
    const IterationRecord& cur = trace.records[k];
    const IterationRecord& next = trace.records[k + 1];
    if (next.f > cur.f + 1e-9) ++a.descent_violations;
    if (std::isfinite(cur.qsq_step)) {
      a.qsq_partial_sum += cur.qsq_step;
      a.qsq_last_term = cur.qsq_step;
    }
    if (std::isfinite(cur.sublevel_viol))
      a.max_sublevel_violation = std::max(a.max_sublevel_violation, cur.sublevel_viol);
    if (std::isfinite(cur.z_res)) a.max_z_residual = std::max(a.max_z_residual, cur.z_res);
  }
  return a;
}

// The LQDPS outer loop. Schedules are evaluated at k+1 for outer iteration k
// (so 1/k is defined from the first step); each subproblem is anchored at the
// current iterate. Stops on exact fixed point, on |x^k - x^{k+1}|_inf <= tol,
// or at max_iter.
inline RunResult run_lqdps(const MultiObjectiveProblem& problem, const ScalarizationModel& model,
                           const QuasiDistanceSpec& qspec, const LqdpsConfig& config,
                           const Vector& x0, const Vector& z0) {
  problem.validate();
  model.validate();
  qspec.validate();
  config.validate();
  require(problem.box.contains(x0), "run_lqdps: x0 outside box");
  require(z0.size() == model.m && all_positive(z0), "run_lqdps: z0 must be strictly positive");
  require(model.m == problem.m, "run_lqdps: scalarization arity != objective count");

  RunResult out;
  Vector x = x0, z = z0;
  Vector f_values = evaluate_objectives(problem, x, true);

  IterationRecord rec;
  rec.k = 0;
  rec.x = x;
  rec.z = z;
  rec.f_values = f_values;
  rec.f = f_eval(model, f_values, z);
  out.trace.records.push_back(rec);

  out.trace.stop = StopReason::MaxIter;
  for (long k = 0; k < config.max_iter; ++k) {
    SubproblemInstance inst;
    inst.problem = &problem;
    inst.x_k = x;
    inst.z_k = z;
    inst.mu_k = schedule_eval(config.mu, k + 1);
    inst.beta_k = schedule_eval(config.beta, k + 1);
    inst.mode = config.mode;
    inst.model = model;
    inst.qspec = qspec;
    inst.omega = SublevelRef{x, f_values};

    SubproblemResult sub = solve_subproblem(inst, config.inner);

    IterationRecord& prev = out.trace.records.back();
    prev.qsq_step = qd_sq_eval(qspec, sub.x_next, x);
    prev.step_inf = inf_dist(sub.x_next, x);
    prev.z_res = sub.certificate.z_residual;
    prev.sublevel_viol = sublevel_violation(problem, inst.omega, sub.x_next);
    prev.descent_margin = sub.certificate.descent_margin;

    bool fixed = (sub.x_next == x) && (sub.z_next == z);
    x = std::move(sub.x_next);
    z = std::move(sub.z_next);
    f_values = evaluate_objectives(problem, x, true);

    IterationRecord next;
    next.k = k + 1;
    next.x = x;
    next.z = z;
    next.f_values = f_values;
    next.f = f_eval(model, f_values, z);
    out.trace.records.push_back(next);

    if (fixed) {
      out.trace.stop = StopReason::FixedPoint;
      break;
    }
    if (out.trace.records[out.trace.records.size() - 2].step_inf <= config.tol) {
      out.trace.stop = StopReason::TolReached;
      break;
    }
  }

  out.x_final = x;
  out.z_final = z;
  out.iterations = out.trace.iterations();
  out.stop = out.trace.stop;
  out.audit = audit_trace(out.trace);
  return out;
}

// Theoretical stop rule follow-up: when a run ended on an exact fixed point,
// probe the final iterate for weak Pareto optimality.
inline ParetoVerdict fixed_point_weak_pareto(const IterationTrace& trace,
                                             const MultiObjectiveProblem& problem,
                                             std::uint64_t seed = 12345) {
  require(!trace.records.empty(), "fixed_point_weak_pareto: empty trace");
  if (trace.stop != StopReason::FixedPoint)
    throw std::invalid_argument("fixed_point_weak_pareto: trace did not end with a fixed point");
  return weak_pareto_local_check(problem, trace.records.back().x, 1e-2, 5000, seed);
}

}  // namespace lqdps
