#include "lqdps/solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "lqdps/benchmarks.hpp"
#include "lqdps/trace_csv.hpp"
#include "test_problems.hpp"

using namespace lqdps;
using lqdps::testutil::synth_pair;

namespace {

TEST(Schedule, EvalValues) {
  EXPECT_DOUBLE_EQ(schedule_eval({ScheduleKind::OnePlusInvK, 0}, 1), 2.0);
  EXPECT_DOUBLE_EQ(schedule_eval({ScheduleKind::OnePlusInvK, 0}, 4), 1.25);
  EXPECT_DOUBLE_EQ(schedule_eval(Schedule::constant(1.0), 57), 1.0);
  EXPECT_DOUBLE_EQ(schedule_eval({ScheduleKind::TwoMinusInvK, 0}, 2), 1.5);
  EXPECT_DOUBLE_EQ(schedule_eval({ScheduleKind::InvK, 0}, 4), 0.25);
  EXPECT_DOUBLE_EQ(schedule_eval({ScheduleKind::KLinear, 0}, 7), 7.0);
  EXPECT_THROW(schedule_eval(Schedule::constant(1.0), 0), std::invalid_argument);
}

TEST(Schedule, Strings) {
  EXPECT_EQ((Schedule{ScheduleKind::OnePlusInvK, 0}).str(), "1+1/k");
  EXPECT_EQ(Schedule::constant(1.0).str(), "1");
  EXPECT_EQ(Schedule::constant(2.5).str(), "2.5");
}

TEST(LqdpsConfigValidation, PlainModeNeedsVanishingMu) {
  LqdpsConfig config;
  config.mode = ProximalMode::QPlain;
  config.mu = Schedule::constant(1.0);
  EXPECT_THROW(config.validate(), std::invalid_argument);

  config.mu = Schedule{ScheduleKind::InvK, 0};
  EXPECT_NO_THROW(config.validate());

  config.mu = Schedule::constant(1.0);
  config.assume_mu_vanishing = true;  // caller-asserted vanishing sequence
  EXPECT_NO_THROW(config.validate());
}

TEST(LqdpsConfigValidation, MuBoundsChecked) {
  LqdpsConfig config;
  config.mu = Schedule{ScheduleKind::KLinear, 0};  // leaves (0.5, 10) at k = 10
  EXPECT_THROW(config.validate(), std::invalid_argument);

  config.mu = Schedule{ScheduleKind::TwoMinusInvK, 0};
  EXPECT_NO_THROW(config.validate());

  config.mu = Schedule::constant(40.0);
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config.mu_bounds_check = std::make_pair(10.0, 100.0);
  EXPECT_NO_THROW(config.validate());

  config.mu_bounds_check = std::make_pair(50.0, 10.0);
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config.tol = 0.0;
  EXPECT_THROW(config.validate(), std::invalid_argument);
}

TEST(RunLqdps, FaRow13ReachesTheSet) {
  MultiObjectiveProblem fa = make_fa();
  LqdpsConfig config;
  config.mu = Schedule::constant(1.0);
  config.beta = Schedule::constant(1.0);
  config.tol = 1e-2;
  ScalarizationModel model{ScalarizationKind::SumShifted, 2};
  RunResult res = run_lqdps(fa, model, benchmark_qd_spec(), config, benchmark_x0(),
                            benchmark_z0(2));
  EXPECT_EQ(res.stop, StopReason::TolReached);
  EXPECT_LE(res.iterations, 40);
  EXPECT_LE(pareto_set_distance(fa, res.x_final), 5e-2);
  EXPECT_EQ(res.audit.descent_violations, 0);
}

TEST(RunLqdps, HugeMuStopsImmediately) {
  MultiObjectiveProblem fa = make_fa();
  LqdpsConfig config;
  config.mu = Schedule::constant(1e12);
  config.mu_bounds_check = std::make_pair(1.0, 1e13);
  config.beta = Schedule::constant(1.0);
  config.tol = 1e-2;
  ScalarizationModel model{ScalarizationKind::SumShifted, 2};
  RunResult res = run_lqdps(fa, model, benchmark_qd_spec(), config, {0.25, 0.5, 0.0625},
                            benchmark_z0(2));
  EXPECT_EQ(res.iterations, 1);
  EXPECT_EQ(res.stop, StopReason::TolReached);
}

TEST(RunLqdps, SumShiftedZTrajectoryClosedForm) {
  MultiObjectiveProblem p = synth_pair();
  LqdpsConfig config;
  config.mu = Schedule::constant(9.0);
  config.beta = Schedule::constant(1.0);
  config.tol = 1e-12;
  config.max_iter = 20;
  ScalarizationModel model{ScalarizationKind::SumShifted, 2};
  RunResult res = run_lqdps(p, model, QuasiDistanceSpec::uniform(1, 1.0, 1.0), config, {1.0},
                            {1.0, 1.0});
  ASSERT_EQ(res.iterations, 20) << "run stalled before the horizon";
  for (const IterationRecord& r : res.trace.records) {
    double expected = 1.0 / static_cast<double>(r.k + 1);
    EXPECT_NEAR(r.z[0], expected, 1e-12) << "k=" << r.k;
    EXPECT_NEAR(r.z[1], expected, 1e-12) << "k=" << r.k;
  }
  // Successive z differences shrink along the run.
  const auto& recs = res.trace.records;
  double first_dz = inf_dist(recs[1].z, recs[0].z);
  double last_dz = inf_dist(recs.back().z, recs[recs.size() - 2].z);
  EXPECT_LT(last_dz, first_dz);
}

TEST(RunLqdps, TraceInvariants) {
  MultiObjectiveProblem fa = make_fa();
  LqdpsConfig config;
  config.mu = Schedule{ScheduleKind::OnePlusInvK, 0};
  config.beta = Schedule{ScheduleKind::OnePlusInvK, 0};
  config.tol = 1e-3;
  ScalarizationModel model{ScalarizationKind::SumShifted, 2};
  RunResult res = run_lqdps(fa, model, benchmark_qd_spec(), config, benchmark_x0(),
                            benchmark_z0(2));
  const auto& recs = res.trace.records;
  ASSERT_GE(recs.size(), 2u);
  Vector f0 = recs.front().f_values;
  for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
    EXPECT_LE(recs[k + 1].f, recs[k].f + 1e-9);           // monotone f
    EXPECT_LE(recs[k].sublevel_viol, 1e-6);               // Omega nesting
    EXPECT_GE(recs[k].descent_margin, 0.0);
    EXPECT_TRUE(fa.box.contains(recs[k + 1].x));
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_LE(recs[k + 1].f_values[j], f0[j] + 1e-5);   // F never leaves Omega^0
      EXPECT_GT(recs[k + 1].z[j], 0.0);
      EXPECT_LE(recs[k + 1].z[j], recs[k].z[j]);          // z nonincreasing (sum_shifted)
    }
  }
  // Last transition obeys the (prop-q) sandwich given the stop tolerance.
  NormEquivalenceBounds b = qd_norm_bounds(benchmark_qd_spec());
  double bound = b.beta * std::sqrt(3.0) * config.tol;
  EXPECT_LE(res.audit.qsq_last_term, bound * bound);
}

TEST(RunLqdps, InputValidation) {
  MultiObjectiveProblem fa = make_fa();
  LqdpsConfig config;
  ScalarizationModel model{ScalarizationKind::SumShifted, 2};
  EXPECT_THROW(run_lqdps(fa, model, benchmark_qd_spec(), config, {2.0, 0.5, 0.5}, {1.0, 1.0}),
               std::invalid_argument);
  EXPECT_THROW(run_lqdps(fa, model, benchmark_qd_spec(), config, benchmark_x0(), {1.0, 0.0}),
               std::invalid_argument);
  ScalarizationModel wrong_m{ScalarizationKind::SumShifted, 3};
  EXPECT_THROW(run_lqdps(fa, wrong_m, benchmark_qd_spec(), config, benchmark_x0(),
                         {1.0, 1.0, 1.0}),
               std::invalid_argument);
}

TEST(AuditTrace, ConstantTraceHasZeroSums) {
  IterationTrace trace;
  IterationRecord r;
  r.k = 0;
  r.x = {0.5};
  r.z = {1.0};
  r.f_values = {0.25};
  r.f = 2.0;
  r.qsq_step = 0.0;
  r.step_inf = 0.0;
  r.z_res = 0.0;
  r.sublevel_viol = 0.0;
  r.descent_margin = 0.0;
  trace.records.push_back(r);
  IterationRecord r1 = r;
  r1.k = 1;
  r1.qsq_step = kNaN;
  trace.records.push_back(r1);
  AuditSummary a = audit_trace(trace);
  EXPECT_EQ(a.descent_violations, 0);
  EXPECT_DOUBLE_EQ(a.qsq_partial_sum, 0.0);
  EXPECT_DOUBLE_EQ(a.max_sublevel_violation, 0.0);
  EXPECT_THROW(audit_trace(IterationTrace{}), std::invalid_argument);
}

TEST(AuditTrace, FlagsNonmonotoneF) {
  IterationTrace trace;
  for (int k = 0; k < 3; ++k) {
    IterationRecord r;
    r.k = k;
    r.x = {0.0};
    r.z = {1.0};
    r.f_values = {0.0};
    r.f = k == 2 ? 5.0 : 1.0;  // jumps up on the last step
    r.qsq_step = 0.1;
    r.step_inf = 0.1;
    r.z_res = 0.0;
    r.sublevel_viol = 0.0;
    r.descent_margin = 0.0;
    trace.records.push_back(r);
  }
  EXPECT_EQ(audit_trace(trace).descent_violations, 1);
}

TEST(FixedPointWeakPareto, VerdictsAndPrecondition) {
  MultiObjectiveProblem fa = make_fa();
  auto fixed_trace_at = [](const Vector& x) {
    IterationTrace t;
    t.stop = StopReason::FixedPoint;
    for (int k = 0; k < 2; ++k) {
      IterationRecord r;
      r.k = k;
      r.x = x;
      r.z = {1.0, 1.0};
      r.f_values = {0.0, 0.0};
      r.f = 1.0;
      t.records.push_back(r);
    }
    return t;
  };

  ParetoVerdict on_ps = fixed_point_weak_pareto(fixed_trace_at({0.25, 0.5, 0.0625}), fa);
  EXPECT_TRUE(on_ps.is_weak_pareto_candidate);

  ParetoVerdict dominated = fixed_point_weak_pareto(fixed_trace_at({0.5, 0.9, 0.9}), fa);
  EXPECT_FALSE(dominated.is_weak_pareto_candidate);
  EXPECT_TRUE(dominated.witness.has_value());

  IterationTrace tol_trace = fixed_trace_at({0.25, 0.5, 0.0625});
  tol_trace.stop = StopReason::TolReached;
  EXPECT_THROW(fixed_point_weak_pareto(tol_trace, fa), std::invalid_argument);
}

TEST(TraceCsv, RoundTripPreservesAudit) {
  MultiObjectiveProblem fa = make_fa();
  LqdpsConfig config;
  config.tol = 1e-2;
  ScalarizationModel model{ScalarizationKind::SumShifted, 2};
  RunResult res = run_lqdps(fa, model, benchmark_qd_spec(), config, benchmark_x0(),
                            benchmark_z0(2));

  std::ostringstream out;
  write_trace_csv(res.trace, out);
  std::istringstream in(out.str());
  IterationTrace back = read_trace_csv(in);
  ASSERT_EQ(back.records.size(), res.trace.records.size());

  AuditSummary a = audit_trace(res.trace);
  AuditSummary b = audit_trace(back);
  EXPECT_EQ(a.descent_violations, b.descent_violations);
  EXPECT_DOUBLE_EQ(a.qsq_partial_sum, b.qsq_partial_sum);
  EXPECT_DOUBLE_EQ(a.max_sublevel_violation, b.max_sublevel_violation);
  EXPECT_DOUBLE_EQ(a.max_z_residual, b.max_z_residual);

  // Identical runs serialize identically.
  RunResult res2 = run_lqdps(fa, model, benchmark_qd_spec(), config, benchmark_x0(),
                             benchmark_z0(2));
  std::ostringstream out2;
  write_trace_csv(res2.trace, out2);
  EXPECT_EQ(out.str(), out2.str());
}

}  // namespace
