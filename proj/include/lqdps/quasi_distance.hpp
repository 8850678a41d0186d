#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>

#include "lqdps/rng.hpp"
#include "lqdps/vec.hpp"

namespace lqdps {

// Weighted asymmetric coordinate-wise quasi-distance family:
//   q(x, y) = sum_i max(c_plus[i] * (y_i - x_i), c_minus[i] * (x_i - y_i)).
// Asymmetric (q(x,y) != q(y,x) in general) but satisfies the identity and
// triangle axioms, and is sandwiched between multiples of the Euclidean norm.
struct QuasiDistanceSpec {
  std::size_t n = 0;
  Vector c_plus;
  Vector c_minus;

  void validate() const {
    require(n > 0, "QuasiDistanceSpec: dimension must be positive");
    require(c_plus.size() == n && c_minus.size() == n,
            "QuasiDistanceSpec: coefficient vectors must have length n");
    require(all_positive(c_plus) && all_positive(c_minus),
            "QuasiDistanceSpec: all coefficients must be > 0");
  }

  static QuasiDistanceSpec uniform(std::size_t n, double cp, double cm) {
    return QuasiDistanceSpec{n, Vector(n, cp), Vector(n, cm)};
  }
};

// Two-sided norm-equivalence constants: alpha*|x-y|_2 <= q(x,y) <= beta*|x-y|_2.
struct NormEquivalenceBounds {
  double alpha = 0.0;
  double beta = 0.0;
};

// Per-coordinate interval representation of the subdifferential of q(., y) at x.
struct SubgradientBox {
  Vector lo;
  Vector hi;
};

inline double qd_eval(const QuasiDistanceSpec& spec, const Vector& x, const Vector& y) {
  require(x.size() == spec.n && y.size() == spec.n, "qd_eval: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < spec.n; ++i)
    s += std::max(spec.c_plus[i] * (y[i] - x[i]), spec.c_minus[i] * (x[i] - y[i]));
  return s;
}

inline double qd_sq_eval(const QuasiDistanceSpec& spec, const Vector& x, const Vector& y) {
  double q = qd_eval(spec, x, y);
  return q * q;
}

// Valid (not tight) constants for the Euclidean norm:
//   q >= min-coef * |d|_1 >= min-coef * |d|_2, and
//   q <= max-coef * |d|_1 <= max-coef * sqrt(n) * |d|_2.
inline NormEquivalenceBounds qd_norm_bounds(const QuasiDistanceSpec& spec) {
  spec.validate();
  double cmin = kInf, cmax = 0.0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    cmin = std::min({cmin, spec.c_plus[i], spec.c_minus[i]});
    cmax = std::max({cmax, spec.c_plus[i], spec.c_minus[i]});
  }
  return {cmin, std::sqrt(static_cast<double>(spec.n)) * cmax};
}

// Subdifferential of x -> q(x, y_ref), coordinate-wise. On the linear pieces
// it is a single slope; at the kink x_i == y_i it is the interval between the
// two one-sided slopes.
inline SubgradientBox qd_subgradient_first(const QuasiDistanceSpec& spec, const Vector& x,
                                           const Vector& y_ref) {
  require(x.size() == spec.n && y_ref.size() == spec.n,
          "qd_subgradient_first: dimension mismatch");
  SubgradientBox g{Vector(spec.n), Vector(spec.n)};
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (x[i] < y_ref[i]) {
      g.lo[i] = g.hi[i] = -spec.c_plus[i];
    } else if (x[i] > y_ref[i]) {
      g.lo[i] = g.hi[i] = spec.c_minus[i];
    } else {
      g.lo[i] = -spec.c_plus[i];
      g.hi[i] = spec.c_minus[i];
    }
  }
  return g;
}

struct AxiomAuditReport {
  long samples = 0;
  long violations = 0;
  // Most negative slack seen across all checks (>= 0 means everything held).
  double worst_margin = kInf;
};

// Brute-force check of the identity and triangle axioms on seeded random
// triples in [-10, 10]^n. Any valid spec yields zero violations.
inline AxiomAuditReport qd_axiom_audit(const QuasiDistanceSpec& spec, long sample_count,
                                       std::uint64_t seed) {
  spec.validate();
  require(sample_count >= 1, "qd_axiom_audit: sample_count must be >= 1");
  Rng rng(seed);
  AxiomAuditReport rep;
  rep.samples = sample_count;
  auto note = [&rep](double margin, double slack) {
    rep.worst_margin = std::min(rep.worst_margin, margin);
    if (margin < -slack) ++rep.violations;
  };
  const double eps = std::numeric_limits<double>::epsilon();
  for (long s = 0; s < sample_count; ++s) {
    Vector x = rng.uniform_vector(spec.n, -10.0, 10.0);
    Vector y = rng.uniform_vector(spec.n, -10.0, 10.0);
    Vector z = rng.uniform_vector(spec.n, -10.0, 10.0);
    // Identity axiom: q(x,x) = 0 exactly, q(x,y) > 0 for x != y.
    note(qd_eval(spec, x, x) == 0.0 ? 0.0 : -1.0, 0.0);
    if (x != y) note(qd_eval(spec, x, y) > 0.0 ? 0.0 : -1.0, 0.0);
    // Triangle inequality. Exact in real arithmetic for this family; the
    // slack covers evaluation round-off only, far below any true violation.
    double q_xy = qd_eval(spec, x, y);
    double q_yz = qd_eval(spec, y, z);
    double q_xz = qd_eval(spec, x, z);
    note(q_xy + q_yz - q_xz, 32.0 * eps * std::max(1.0, q_xy + q_yz + q_xz));
  }
  return rep;
}

// Extension seam: alternative quasi-distance families plug in behind this
// interface. The solver needs exactly these four queries.
class QuasiDistance {
 public:
  virtual ~QuasiDistance() = default;
  virtual std::size_t dimension() const = 0;
  virtual double eval(const Vector& x, const Vector& y) const = 0;
  virtual NormEquivalenceBounds norm_bounds() const = 0;
  virtual SubgradientBox subgradient_first(const Vector& x, const Vector& y_ref) const = 0;

  double squared(const Vector& x, const Vector& y) const {
    double q = eval(x, y);
    return q * q;
  }
};

class WeightedQuasiDistance final : public QuasiDistance {
 public:
  explicit WeightedQuasiDistance(QuasiDistanceSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
  }

  std::size_t dimension() const override { return spec_.n; }
  double eval(const Vector& x, const Vector& y) const override { return qd_eval(spec_, x, y); }
  NormEquivalenceBounds norm_bounds() const override { return qd_norm_bounds(spec_); }
  SubgradientBox subgradient_first(const Vector& x, const Vector& y_ref) const override {
    return qd_subgradient_first(spec_, x, y_ref);
  }

  const QuasiDistanceSpec& spec() const { return spec_; }

 private:
  QuasiDistanceSpec spec_;
};

}  // namespace lqdps
