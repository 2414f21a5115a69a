#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace chordiv {

/// A point of a generator's parameter space. Plain value type; the owning
/// generator decides whether the coordinates lie inside its domain.
class ParamPoint {
 public:
  ParamPoint() = default;
  explicit ParamPoint(std::vector<double> coords) : coords_(std::move(coords)) {}
  ParamPoint(std::initializer_list<double> coords) : coords_(coords) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& vec() const noexcept { return coords_; }

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;

 private:
  std::vector<double> coords_;
};

/// (1-lambda)*a + lambda*b, exact at lambda = 0 and lambda = 1.
ParamPoint interpolate(const ParamPoint& a, const ParamPoint& b, double lambda);

/// max_i |a_i - b_i|
double max_abs_diff(const ParamPoint& a, const ParamPoint& b);

/// Below this sup-norm separation two points are treated as identical and
/// every divergence returns exactly zero.
inline constexpr double kCoincidentTolerance = 1e-14;

inline bool coincident(const ParamPoint& a, const ParamPoint& b) {
  return max_abs_diff(a, b) < kCoincidentTolerance;
}

void require_same_dim(const ParamPoint& a, const ParamPoint& b);

}  // namespace chordiv
