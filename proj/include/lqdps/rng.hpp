#pragma once

#include <cstdint>
#include <random>

#include "lqdps/vec.hpp"

namespace lqdps {

// Seeded generator with a fixed uniform mapping. std::uniform_real_distribution
// is implementation-defined, so the bit-to-double mapping is spelled out here;
// identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Vector uniform_vector(std::size_t n, double lo, double hi) {
    Vector v(n);
    for (double& x : v) x = uniform(lo, hi);
    return v;
  }

  // Uniform over the box (finite bounds only).
  Vector uniform_in_box(const Box& box) {
    Vector v(box.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = uniform(box.lo[i], box.hi[i]);
    return v;
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lqdps
