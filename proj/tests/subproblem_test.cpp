#include "lqdps/subproblem.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "lqdps/benchmarks.hpp"
#include "test_problems.hpp"

using namespace lqdps;

namespace {

// Symmetric unit quasi-distance, anchor at 0.5, on the 1-D synthetic problem.
struct Synth1dFixture {
  MultiObjectiveProblem problem = lqdps::testutil::synth_1d();
  SubproblemInstance inst;

  Synth1dFixture() {
    inst.problem = &problem;
    inst.x_k = {0.5};
    inst.z_k = {1.0};
    inst.mu_k = 1.0;
    inst.beta_k = 1.0;
    inst.mode = ProximalMode::QSquared;
    inst.model = ScalarizationModel{ScalarizationKind::SumShifted, 1};
    inst.qspec = QuasiDistanceSpec::uniform(1, 1.0, 1.0);
    inst.omega = make_sublevel_ref(problem, inst.x_k);
  }
};

SubproblemInstance fa_instance(const MultiObjectiveProblem& fa, ScalarizationKind kind,
                               double mu, double beta, ProximalMode mode) {
  SubproblemInstance inst;
  inst.problem = &fa;
  inst.x_k = benchmark_x0();
  inst.z_k = benchmark_z0(fa.m);
  inst.mu_k = mu;
  inst.beta_k = beta;
  inst.mode = mode;
  inst.model = ScalarizationModel{kind, fa.m};
  inst.qspec = benchmark_qd_spec(fa.n);
  inst.omega = make_sublevel_ref(fa, inst.x_k);
  return inst;
}

TEST(PhiEval, RegularizersVanishAtAnchor) {
  MultiObjectiveProblem fa = make_fa();
  SubproblemInstance inst = fa_instance(fa, ScalarizationKind::SumShifted, 1.0, 1.0,
                                        ProximalMode::QSquared);
  Vector f_k = evaluate_objectives(fa, inst.x_k);
  EXPECT_DOUBLE_EQ(phi_eval(inst, inst.x_k, inst.z_k), f_eval(inst.model, f_k, inst.z_k));
}

TEST(PhiEval, HandValueAtShiftedZ) {
  MultiObjectiveProblem fa = make_fa();
  SubproblemInstance inst = fa_instance(fa, ScalarizationKind::SumShifted, 1.0, 1.0,
                                        ProximalMode::QSquared);
  Vector z{0.5, 0.5};
  double phi = phi_eval(inst, inst.x_k, z);
  // f = 0.5 + 0.5 + h(0.625) + h(0.37868); H term = 2 (0.5 - ln 0.5 - 1).
  Vector f_k = evaluate_objectives(fa, inst.x_k);
  double expected = 1.0 + h_scalar(f_k[0]) + h_scalar(f_k[1]) +
                    2.0 * (0.5 - std::log(0.5) - 1.0);
  EXPECT_NEAR(phi, expected, 1e-14);
  EXPECT_NEAR(phi, 2.7304, 1e-4);
}

TEST(PhiEval, PlainVersusSquaredRegularizer) {
  MultiObjectiveProblem fa = make_fa();
  SubproblemInstance sq = fa_instance(fa, ScalarizationKind::SumShifted, 2.0, 1.0,
                                      ProximalMode::QSquared);
  SubproblemInstance pl = sq;
  pl.mode = ProximalMode::QPlain;
  // q((0,0,0), (1,1,1)) = 9 with c+ = 3: anchor at the ones vector.
  sq.x_k = pl.x_k = Vector{1.0, 1.0, 1.0};
  sq.omega = pl.omega = make_sublevel_ref(fa, sq.x_k);
  Vector x{0.0, 0.0, 0.0};
  EXPECT_DOUBLE_EQ(qd_eval(sq.qspec, x, sq.x_k), 9.0);
  double base = f_eval(sq.model, evaluate_objectives(fa, x), sq.z_k);
  EXPECT_NEAR(phi_eval(sq, x, sq.z_k) - base, (2.0 / 2.0) * 81.0, 1e-12);
  EXPECT_NEAR(phi_eval(pl, x, pl.z_k) - base, (2.0 / 2.0) * 9.0, 1e-12);
}

TEST(SolveZStep, SumShiftedClosedForm) {
  ScalarizationModel model{ScalarizationKind::SumShifted, 2};
  Vector z = solve_z_step(model, {0.0, 0.0}, {1.0, 1.0}, 1.0);
  EXPECT_DOUBLE_EQ(z[0], 0.5);
  EXPECT_DOUBLE_EQ(z[1], 0.5);

  ScalarizationModel m1{ScalarizationKind::SumShifted, 1};
  Vector frozen = solve_z_step(m1, {0.0}, {1.0}, 1e6);
  EXPECT_NEAR(frozen[0], 1e6 / (1e6 + 1.0), 1e-12);

  // 1/z - 1/z_k = 1/beta holds to round-off.
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    Vector z_k = rng.uniform_vector(2, 0.1, 10.0);
    double beta = rng.uniform(0.1, 10.0);
    Vector zn = solve_z_step(model, {0.0, 0.0}, z_k, beta);
    EXPECT_LE(z_residual(model, {0.0, 0.0}, zn, z_k, beta), 1e-12);
    EXPECT_LT(zn[0], z_k[0]);
    EXPECT_LT(zn[1], z_k[1]);
    EXPECT_GT(zn[0], 0.0);
  }
}

TEST(SolveZStep, ExponentialRootMatchesGridOracle) {
  ScalarizationModel model{ScalarizationKind::Exponential, 1};
  Vector z = solve_z_step(model, {0.0}, {1.0}, 1.0);
  EXPECT_NEAR(z[0], 0.4012, 2e-3);
  EXPECT_LE(z_residual(model, {0.0}, z, {1.0}, 1.0), 1e-11);
  EXPECT_LE(z[0], 1.0);

  // Brute-force the per-component objective exp(z + F) + beta (z/z_k - ln(z/z_k) - 1).
  auto oracle = [](double f, double z_k, double beta) {
    double best = kInf, arg = z_k;
    const long n = 1000000;
    for (long i = 1; i <= n; ++i) {
      double zz = z_k * static_cast<double>(i) / static_cast<double>(n);
      double v = std::exp(zz + f) + beta * (zz / z_k - std::log(zz / z_k) - 1.0);
      if (v < best) {
        best = v;
        arg = zz;
      }
    }
    return arg;
  };
  EXPECT_NEAR(z[0], oracle(0.0, 1.0, 1.0), 1e-5);

  Vector z2 = solve_z_step(model, {1.5}, {2.5}, 0.7);
  EXPECT_NEAR(z2[0], oracle(1.5, 2.5, 0.7), 1e-5);
  EXPECT_LE(z_residual(model, {1.5}, z2, {2.5}, 0.7), 1e-11);
}

TEST(ZResidual, DetectsStaleZ) {
  ScalarizationModel model{ScalarizationKind::SumShifted, 2};
  // Plugging z = z_k leaves exactly max_i h_i / beta.
  EXPECT_NEAR(z_residual(model, {0.0, 0.0}, {1.0, 1.0}, {1.0, 1.0}, 2.0), 0.5, 1e-15);
  EXPECT_THROW(z_residual(model, {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, 2.0),
               std::invalid_argument);
}

TEST(SolveXStep, MatchesBruteForceGridOnSynthetic1d) {
  Synth1dFixture fx;
  InnerSolverConfig config;
  Vector z{0.5};  // the exact z-step for z_k = 1, beta = 1

  Vector x_out = solve_x_step(fx.inst, z, config);
  double psi_out = penalized_objective(fx.inst, z, config, x_out);
  double psi_start = penalized_objective(fx.inst, z, config, fx.inst.x_k);
  EXPECT_LE(psi_out, psi_start);
  EXPECT_LE(sublevel_violation(fx.problem, fx.inst.omega, x_out), 1e-6);

  double best = kInf;
  for (long i = 0; i <= 20000; ++i) {
    double x = -1.0 + 1e-4 * static_cast<double>(i);
    if (x * x > 0.25) continue;  // outside the sublevel set
    double v = phi_eval(fx.inst, {x}, z);
    best = std::min(best, v);
  }
  EXPECT_NEAR(phi_eval(fx.inst, x_out, z), best, 1e-3);
}

TEST(SolveXStep, DescentOrStayAtOptimum) {
  Synth1dFixture fx;
  InnerSolverConfig config;
  Vector z{0.5};
  // Start from the solver's own answer: no probe can improve, point stays put.
  Vector x_star = solve_x_step(fx.inst, z, config);
  Vector x_again = solve_x_step(fx.inst, z, config, &x_star);
  EXPECT_LE(penalized_objective(fx.inst, z, config, x_again),
            penalized_objective(fx.inst, z, config, x_star));
}

TEST(PenalizedObjective, PenaltyActivation) {
  Synth1dFixture fx;
  InnerSolverConfig config;
  config.penalty_weight = 1e6;
  Vector z{0.5};
  // F(x) = x^2 = 0.35 overshoots F_ref = 0.25 by 0.1 -> adds rho * 0.01 = 1e4.
  Vector x_bad{std::sqrt(0.35)};
  double with_penalty = penalized_objective(fx.inst, z, config, x_bad);
  double without = f_eval(fx.inst.model, evaluate_objectives(fx.problem, x_bad), z) +
                   proximal_term(fx.inst, x_bad);
  EXPECT_NEAR(with_penalty - without, 1e6 * 0.1 * 0.1, 1e-6);
}

TEST(SolveSubproblem, HugeMuFreezesX) {
  MultiObjectiveProblem fa = make_fa();
  SubproblemInstance inst = fa_instance(fa, ScalarizationKind::SumShifted, 1e12, 1.0,
                                        ProximalMode::QSquared);
  InnerSolverConfig config;
  SubproblemResult res = solve_subproblem(inst, config);
  EXPECT_LE(inf_dist(res.x_next, inst.x_k), config.min_step);
  Vector expected_z = solve_z_step(inst.model, evaluate_objectives(fa, inst.x_k), inst.z_k, 1.0);
  EXPECT_EQ(res.z_next, expected_z);
}

TEST(SolveSubproblem, DescentAndCertificates) {
  MultiObjectiveProblem fa = make_fa();
  for (ScalarizationKind kind : {ScalarizationKind::SumShifted, ScalarizationKind::Exponential}) {
    SubproblemInstance inst = fa_instance(fa, kind, 1.0, 1.0, ProximalMode::QSquared);
    SubproblemResult res = solve_subproblem(inst);
    EXPECT_GE(res.certificate.descent_margin, 0.0);
    EXPECT_LE(res.certificate.z_residual,
              kind == ScalarizationKind::SumShifted ? 1e-12 : 1e-11);
    EXPECT_LE(sublevel_violation(fa, inst.omega, res.x_next), 1e-6);
    EXPECT_TRUE(fa.box.contains(res.x_next));
    EXPECT_TRUE(all_positive(res.z_next));
    for (std::size_t i = 0; i < res.z_next.size(); ++i) EXPECT_LE(res.z_next[i], inst.z_k[i]);
    // phi(next) <= f(x_k, z_k): the subproblem never loses ground.
    double f_start = f_eval(inst.model, evaluate_objectives(fa, inst.x_k), inst.z_k);
    EXPECT_LE(phi_eval(inst, res.x_next, res.z_next), f_start);
  }
}

TEST(SolveSubproblem, PlainModeAlsoDescends) {
  MultiObjectiveProblem fa = make_fa();
  SubproblemInstance inst = fa_instance(fa, ScalarizationKind::Exponential, 1.0, 1.0,
                                        ProximalMode::QPlain);
  SubproblemResult res = solve_subproblem(inst);
  EXPECT_GE(res.certificate.descent_margin, 0.0);
  EXPECT_LE(sublevel_violation(fa, inst.omega, res.x_next), 1e-6);
}

TEST(SolveSubproblem, ValidatesInstance) {
  MultiObjectiveProblem fa = make_fa();
  SubproblemInstance inst = fa_instance(fa, ScalarizationKind::SumShifted, 1.0, 1.0,
                                        ProximalMode::QSquared);
  inst.mu_k = 0.0;
  EXPECT_THROW(solve_subproblem(inst), std::invalid_argument);
  inst.mu_k = 1.0;
  inst.z_k = {1.0, 0.0};
  EXPECT_THROW(solve_subproblem(inst), std::invalid_argument);
  inst.z_k = {1.0, 1.0};
  inst.x_k = {2.0, 0.5, 0.5};
  EXPECT_THROW(solve_subproblem(inst), std::invalid_argument);
}

}  // namespace
