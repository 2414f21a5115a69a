#include "chordiv/param_point.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chordiv/error.hpp"

namespace chordiv {

void require_same_dim(const ParamPoint& a, const ParamPoint& b) {
  if (a.dim() != b.dim()) {
    raise(ErrorCode::kShape, "dimension mismatch " + std::to_string(a.dim()) +
                                 " vs " + std::to_string(b.dim()));
  }
}

ParamPoint interpolate(const ParamPoint& a, const ParamPoint& b, double lambda) {
  require_same_dim(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out[i] = (1.0 - lambda) * a[i] + lambda * b[i];
  }
  return ParamPoint(std::move(out));
}

double max_abs_diff(const ParamPoint& a, const ParamPoint& b) {
  require_same_dim(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace chordiv
