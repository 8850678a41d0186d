#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "lqdps/benchmarks.hpp"
#include "lqdps/quasi_distance.hpp"
#include "lqdps/scalarization.hpp"
#include "lqdps/subproblem.hpp"

namespace lqdps {

inline std::string scalarization_str_short(ScalarizationKind k) {
  return k == ScalarizationKind::SumShifted ? "sum" : "exp";
}

// Seeded property suites behind the `props` CLI subcommand. Output is fully
// determined by the seed. Returns the total violation count.
inline long run_property_suites(std::uint64_t seed, std::ostream& os) {
  long total = 0;
  auto report = [&](const std::string& name, long violations, long count) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "prop %-34s %8ld checks, %ld violations\n", name.c_str(),
                  count, violations);
    os << buf;
    total += violations;
  };

  const QuasiDistanceSpec qspec = benchmark_qd_spec(3);
  const NormEquivalenceBounds bounds = qd_norm_bounds(qspec);

  {
    AxiomAuditReport rep = qd_axiom_audit(qspec, 10000, seed);
    report("qd.axioms", rep.violations, rep.samples);
  }
  {
    Rng rng(seed + 1);
    long bad = 0;
    const long count = 10000;
    for (long i = 0; i < count; ++i) {
      Vector x = rng.uniform_vector(3, -10.0, 10.0);
      Vector y = rng.uniform_vector(3, -10.0, 10.0);
      double q = qd_eval(qspec, x, y);
      double d = l2_dist(x, y);
      if (!(bounds.alpha * d <= q * (1 + 1e-12) && q <= bounds.beta * d * (1 + 1e-12))) ++bad;
    }
    report("qd.norm_sandwich", bad, count);
  }
  {
    // Convexity of q(., y): first-order inequality for both corner
    // subgradients along random directions.
    Rng rng(seed + 2);
    long bad = 0;
    const long count = 2000;
    for (long i = 0; i < count; ++i) {
      Vector x = rng.uniform_vector(3, -5.0, 5.0);
      Vector y = rng.uniform_vector(3, -5.0, 5.0);
      if (rng.unit() < 0.2) x[1] = y[1];  // exercise the kink interval
      Vector d = rng.uniform_vector(3, -1.0, 1.0);
      SubgradientBox g = qd_subgradient_first(qspec, x, y);
      double q0 = qd_eval(qspec, x, y);
      for (double t : {1e-6, 1e-3, 0.1}) {
        Vector xt = x;
        for (int j = 0; j < 3; ++j) xt[j] += t * d[j];
        double qt = qd_eval(qspec, xt, y);
        for (const Vector* corner : {&g.lo, &g.hi}) {
          double lin = 0.0;
          for (int j = 0; j < 3; ++j) lin += (*corner)[j] * d[j];
          if (qt + 1e-9 < q0 + t * lin) ++bad;
        }
      }
    }
    report("qd.subgradient_inequality", bad, count * 6);
  }
  {
    Rng rng(seed + 3);
    long bad = 0;
    const long count = 5000;
    for (long i = 0; i < count; ++i) {
      Vector x = rng.uniform_vector(3, -10.0, 10.0);
      Vector xp = rng.uniform_vector(3, -10.0, 10.0);
      Vector y = rng.uniform_vector(3, -10.0, 10.0);
      double lhs = std::abs(qd_eval(qspec, x, y) - qd_eval(qspec, xp, y));
      if (lhs > bounds.beta * l2_dist(x, xp) * (1 + 1e-12)) ++bad;
    }
    report("qd.lipschitz", bad, count);
  }
  for (ScalarizationKind kind : {ScalarizationKind::SumShifted, ScalarizationKind::Exponential}) {
    ScalarizationModel model{kind, 2};
    ScalarRepAuditReport rep = scalar_rep_audit(model, 10000, seed + 4);
    report("f.scalar_representation." + scalarization_str_short(kind), rep.violations, rep.trials);
  }
  {
    Rng rng(seed + 5);
    long bad = 0;
    const long count = 1000;
    for (long i = 0; i < count; ++i) {
      LogRegularizerRef ref{rng.uniform_vector(2, 0.1, 3.0)};
      Vector z = rng.uniform_vector(2, 0.1, 3.0);
      Vector w = rng.uniform_vector(2, 0.1, 3.0);
      if (H_eval(ref.z_ref, ref) != 0.0) ++bad;
      if (z != ref.z_ref && !(H_eval(z, ref) > 0.0)) ++bad;
      if (z != w) {
        Vector mid(2);
        for (int j = 0; j < 2; ++j) mid[j] = 0.5 * (z[j] + w[j]);
        if (!(H_eval(mid, ref) < 0.5 * (H_eval(z, ref) + H_eval(w, ref)))) ++bad;
      }
    }
    report("H.nonneg_strict_convex", bad, count * 3);
  }
  for (ScalarizationKind kind : {ScalarizationKind::SumShifted, ScalarizationKind::Exponential}) {
    ScalarizationModel model{kind, 3};
    Rng rng(seed + 6);
    long bad = 0;
    const long count = 1000;
    const double h = 1e-6;
    for (long i = 0; i < count; ++i) {
      Vector fv = rng.uniform_vector(3, -1.0, 2.0);
      Vector z = rng.uniform_vector(3, 0.1, 2.0);
      Vector grad = f_partial_z(model, fv, z);
      for (int j = 0; j < 3; ++j) {
        Vector zp = z, zm = z;
        zp[j] += h;
        zm[j] -= h;
        double fd = (f_eval(model, fv, zp) - f_eval(model, fv, zm)) / (2.0 * h);
        if (std::abs(fd - grad[j]) > 1e-5 * std::max(1.0, std::abs(grad[j]))) ++bad;
      }
    }
    report("f.partial_z_fd." + scalarization_str_short(kind), bad, count * 3);
  }
  {
    Rng rng(seed + 7);
    long bad = 0;
    const long count = 1000;
    for (long i = 0; i < count; ++i) {
      Vector z_k = rng.uniform_vector(2, 0.1, 5.0);
      double beta = rng.uniform(0.1, 5.0);
      Vector fv = rng.uniform_vector(2, -1.0, 1.0);
      ScalarizationModel ss{ScalarizationKind::SumShifted, 2};
      Vector z1 = solve_z_step(ss, fv, z_k, beta);
      if (z_residual(ss, fv, z1, z_k, beta) > 1e-12) ++bad;
      ScalarizationModel ex{ScalarizationKind::Exponential, 2};
      Vector z2 = solve_z_step(ex, fv, z_k, beta);
      if (z_residual(ex, fv, z2, z_k, beta) > 1e-11) ++bad;
      for (int j = 0; j < 2; ++j)
        if (!(z1[j] > 0.0 && z1[j] < z_k[j] && z2[j] > 0.0 && z2[j] <= z_k[j])) ++bad;
    }
    report("zstep.characterization", bad, count * 4);
  }
  {
    long bad = 0;
    const long count = 2001;
    double prev = h_scalar(-2.0);
    for (long i = 1; i < count; ++i) {
      double t = -2.0 + 5.0 * static_cast<double>(i) / static_cast<double>(count - 1);
      double v = h_scalar(t);
      if (!(v > prev) || !(v > 0.0)) ++bad;
      prev = v;
    }
    if (std::abs(h_scalar(1.0) - 1.0) != 0.0) ++bad;
    if (std::abs(h_scalar(1.0 + 1e-12) - 1.0) > 1e-8) ++bad;
    report("h_scalar.monotone_continuous", bad, count + 1);
  }

  os << (total == 0 ? "PROPS OK\n" : "PROPS FAILED\n");
  return total;
}

}  // namespace lqdps
