#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "lqdps/rng.hpp"
#include "lqdps/vec.hpp"

namespace lqdps {

// Scalarization functions f(x, z) used by the proximal scalarization method.
// Both are evaluated on precomputed objective values, which keeps the
// monotonicity contract (a strict scalar representation of F) directly
// testable and avoids re-evaluating F.
//
// SUM_SHIFTED:  f = sum_i [ z_i + h(F_i) ]   with h piecewise 1/(2-t), t^2
// EXPONENTIAL:  f = sum_i exp(z_i + F_i)
//
// Both are positive, jointly convex when composed with convex F, strictly
// monotone in the objective values, and have a continuous nonnegative
// z-gradient h(x, z).
enum class ScalarizationKind { SumShifted, Exponential };

struct ScalarizationModel {
  ScalarizationKind kind = ScalarizationKind::SumShifted;
  std::size_t m = 0;

  void validate() const { require(m > 0, "ScalarizationModel: m must be positive"); }
};

// Reference point for the logarithmic regularizer H; strictly positive.
struct LogRegularizerRef {
  Vector z_ref;

  void validate() const {
    require(!z_ref.empty(), "LogRegularizerRef: empty reference");
    for (double z : z_ref)
      require(z > 1e-300, "LogRegularizerRef: components must be strictly positive");
  }
};

// Positive, convex, strictly increasing scalar transform. Continuous at the
// branch junction t = 1 (both branches give 1); the pole of 1/(2-t) at t = 2
// lies in the t > 1 branch and is never evaluated.
inline double h_scalar(double t) { return t <= 1.0 ? 1.0 / (2.0 - t) : t * t; }

inline void check_f_inputs(const ScalarizationModel& model, const Vector& f_values,
                           const Vector& z) {
  model.validate();
  require(f_values.size() == model.m, "f_eval: F_values has wrong length");
  require(z.size() == model.m, "f_eval: z has wrong length");
  for (double zi : z) require(zi >= 0.0, "f_eval: z components must be nonnegative");
}

inline double f_eval(const ScalarizationModel& model, const Vector& f_values, const Vector& z) {
  check_f_inputs(model, f_values, z);
  double s = 0.0;
  switch (model.kind) {
    case ScalarizationKind::SumShifted:
      for (std::size_t i = 0; i < model.m; ++i) s += z[i] + h_scalar(f_values[i]);
      break;
    case ScalarizationKind::Exponential:
      for (std::size_t i = 0; i < model.m; ++i) {
        double a = z[i] + f_values[i];
        if (a > 700.0)
          throw std::overflow_error("f_eval: exponential scalarization saturated (z_i + F_i > 700)");
        s += std::exp(a);
      }
      break;
  }
  return s;
}

// dF/dz map h(x, z): all-ones for SUM_SHIFTED, exp(z_i + F_i) for EXPONENTIAL.
inline Vector f_partial_z(const ScalarizationModel& model, const Vector& f_values,
                          const Vector& z) {
  check_f_inputs(model, f_values, z);
  Vector h(model.m);
  switch (model.kind) {
    case ScalarizationKind::SumShifted:
      for (double& hi : h) hi = 1.0;
      break;
    case ScalarizationKind::Exponential:
      for (std::size_t i = 0; i < model.m; ++i) {
        double a = z[i] + f_values[i];
        if (a > 700.0)
          throw std::overflow_error("f_partial_z: exponential scalarization saturated");
        h[i] = std::exp(a);
      }
      break;
  }
  return h;
}

// H(z) = sum_i (z_i/ref_i - ln(z_i/ref_i) - 1): strictly convex, nonnegative,
// coercive on the positive orthant, zero exactly at z = ref.
inline double H_eval(const Vector& z, const LogRegularizerRef& ref) {
  ref.validate();
  require_same_size(z, ref.z_ref, "H_eval");
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    require(z[i] > 1e-300, "H_eval: z components must be strictly positive");
    double t = z[i] / ref.z_ref[i];
    s += t - std::log(t) - 1.0;
  }
  return s;
}

struct ScalarRepAuditReport {
  long trials = 0;
  long violations = 0;
};

// Monotonicity audit: whenever F <= F' componentwise, f(F, z) <= f(F', z),
// strictly when strict in every component.
inline ScalarRepAuditReport scalar_rep_audit(const ScalarizationModel& model, long trials,
                                             std::uint64_t seed) {
  model.validate();
  require(trials >= 1, "scalar_rep_audit: trials must be >= 1");
  Rng rng(seed);
  ScalarRepAuditReport rep;
  rep.trials = trials;
  for (long t = 0; t < trials; ++t) {
    Vector fv = rng.uniform_vector(model.m, -2.0, 3.0);
    Vector z = rng.uniform_vector(model.m, 0.0, 3.0);
    Vector fw(model.m);
    bool strict = true;
    for (std::size_t i = 0; i < model.m; ++i) {
      // Mix equal and strictly larger components.
      double bump = (rng.unit() < 0.25) ? 0.0 : rng.uniform(1e-6, 1.5);
      if (bump == 0.0) strict = false;
      fw[i] = fv[i] + bump;
    }
    double a = f_eval(model, fv, z);
    double b = f_eval(model, fw, z);
    if (a > b) ++rep.violations;
    if (strict && !(a < b)) ++rep.violations;
  }
  return rep;
}

}  // namespace lqdps
