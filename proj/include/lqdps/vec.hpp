#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lqdps {

using Vector = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

inline void require_same_size(const Vector& a, const Vector& b, const char* where) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

inline double inf_norm(const Vector& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double inf_dist(const Vector& a, const Vector& b) {
  require_same_size(a, b, "inf_dist");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double l2_dist(const Vector& a, const Vector& b) {
  require_same_size(a, b, "l2_dist");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline bool all_positive(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
}

// Per-coordinate closed bounds; components may be +-inf.
struct Box {
  Vector lo;
  Vector hi;

  std::size_t dim() const { return lo.size(); }

  void validate() const {
    require(lo.size() == hi.size(), "Box: lo/hi size mismatch");
    for (std::size_t i = 0; i < lo.size(); ++i)
      require(lo[i] <= hi[i], "Box: lo > hi at coordinate " + std::to_string(i));
  }

  bool contains(const Vector& x) const {
    if (x.size() != lo.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
  }

  Vector clip(const Vector& x) const {
    require(x.size() == lo.size(), "Box::clip: dimension mismatch");
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::clamp(x[i], lo[i], hi[i]);
    return y;
  }

  // Largest finite coordinate width, or fallback when none is finite.
  double max_finite_width(double fallback = 1.0) const {
    double w = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      double d = hi[i] - lo[i];
      if (std::isfinite(d)) {
        w = std::max(w, d);
        any = true;
      }
    }
    return any ? w : fallback;
  }

  static Box cube(std::size_t n, double lo_v, double hi_v) {
    return Box{Vector(n, lo_v), Vector(n, hi_v)};
  }
};

}  // namespace lqdps
