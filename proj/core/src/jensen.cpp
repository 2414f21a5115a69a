#include "chordiv/jensen.hpp"

#include <cmath>
#include <string>

#include "chordiv/bregman.hpp"
#include "chordiv/error.hpp"

namespace chordiv {

namespace {

void require_open_unit(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    raise(ErrorCode::kInvalidParameter,
          "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

void require_points(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2) {
  f.require_in_domain(theta1, "theta1");
  f.require_in_domain(theta2, "theta2");
}

}  // namespace

JensenChordParams::JensenChordParams(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  const auto unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!unit(alpha) || !unit(beta) || !unit(gamma)) {
    raise(ErrorCode::kInvalidParameter, "alpha, beta, gamma must lie in [0, 1]");
  }
  if (alpha > beta) raise(ErrorCode::kInvalidParameter, "jensen chord needs alpha <= beta");
  if (gamma < alpha || gamma > beta) {
    raise(ErrorCode::kInvalidParameter, "jensen chord needs gamma in [alpha, beta]");
  }
}

double jensen(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2) {
  require_points(f, theta1, theta2);
  if (coincident(theta1, theta2)) return 0.0;
  const auto mid = interpolate(theta1, theta2, 0.5);
  return 0.5 * (f.eval(theta1) + f.eval(theta2)) - f.eval(mid);
}

double jensen_skewed(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                     double alpha) {
  require_open_unit(alpha);
  require_points(f, theta1, theta2);
  if (coincident(theta1, theta2)) return 0.0;
  return (1.0 - alpha) * f.eval(theta1) + alpha * f.eval(theta2) -
         f.eval(interpolate(theta1, theta2, alpha));
}

std::vector<double> jensen_scaled_limit_check(const Generator& f, const ParamPoint& theta1,
                                              const ParamPoint& theta2,
                                              std::span<const double> alphas) {
  const double reverse = bregman(f, theta2, theta1);
  std::vector<double> out;
  out.reserve(alphas.size());
  for (double a : alphas) {
    out.push_back(std::abs(jensen_skewed(f, theta1, theta2, a) / a - reverse));
  }
  return out;
}

double jensen_bregman(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                      double alpha) {
  require_open_unit(alpha);
  if (!f.has_gradient()) raise(ErrorCode::kGradientRequired, "'" + f.name() + "' has no gradient");
  require_points(f, theta1, theta2);
  if (coincident(theta1, theta2)) return 0.0;
  const auto m = interpolate(theta1, theta2, alpha);
  return (1.0 - alpha) * bregman(f, theta1, m) + alpha * bregman(f, theta2, m);
}

double jensen_chord(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                    const JensenChordParams& jcp) {
  require_points(f, theta1, theta2);
  if (coincident(theta1, theta2)) return 0.0;
  const double g = jcp.gamma();
  const double upper = (1.0 - g) * f.eval(theta1) + g * f.eval(theta2);
  double lower = 0.0;
  if (jcp.degenerate()) {
    lower = f.eval(interpolate(theta1, theta2, g));
  } else {
    const double w = (g - jcp.alpha()) / (jcp.beta() - jcp.alpha());
    const double fa = f.eval(interpolate(theta1, theta2, jcp.alpha()));
    const double fb = f.eval(interpolate(theta1, theta2, jcp.beta()));
    lower = (1.0 - w) * fa + w * fb;
  }
  return upper - lower;
}

}  // namespace chordiv
