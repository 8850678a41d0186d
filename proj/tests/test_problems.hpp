#pragma once

#include "lqdps/problem.hpp"

namespace lqdps::testutil {

// 1-D convex instance with a hand-checkable landscape: F(x) = x^2 on [-1, 1].
inline MultiObjectiveProblem synth_1d() {
  MultiObjectiveProblem p;
  p.name = "synth1d";
  p.n = 1;
  p.m = 1;
  p.box = Box::cube(1, -1.0, 1.0);
  p.objectives = [](const Vector& x) { return Vector{x[0] * x[0]}; };
  return p;
}

// Two aligned quadratic objectives; with a large constant mu every subproblem
// moves the iterate a little, so runs reach any requested horizon.
inline MultiObjectiveProblem synth_pair() {
  MultiObjectiveProblem p;
  p.name = "synth_pair";
  p.n = 1;
  p.m = 2;
  p.box = Box::cube(1, -1.0, 1.0);
  p.objectives = [](const Vector& x) {
    return Vector{x[0] * x[0], x[0] * x[0] + 1.0};
  };
  return p;
}

}  // namespace lqdps::testutil
