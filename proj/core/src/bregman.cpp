#include "chordiv/bregman.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "chordiv/error.hpp"
#include "chordiv/numerics.hpp"

namespace chordiv {

namespace {

std::string fmt(double v) { return std::to_string(v); }

void require_same_space(const Generator& f, const ParamPoint& theta1,
                        const ParamPoint& theta2) {
  f.require_in_domain(theta1, "theta1");
  f.require_in_domain(theta2, "theta2");
}

}  // namespace

ChordParams::ChordParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  const auto in_range = [](double v) { return std::isfinite(v) && v > 0.0 && v <= 1.0; };
  if (!in_range(alpha) || !in_range(beta)) {
    raise(ErrorCode::kInvalidChordParams,
          "alpha and beta must lie in (0, 1], got alpha=" + fmt(alpha) + " beta=" + fmt(beta));
  }
  if (alpha == beta) {
    raise(ErrorCode::kInvalidChordParams, "alpha and beta must differ, got " + fmt(alpha));
  }
}

SkewPair::SkewPair(double gamma, double delta, SkewRange range) : gamma_(gamma), delta_(delta) {
  if (!std::isfinite(gamma) || !std::isfinite(delta)) {
    raise(ErrorCode::kInvalidSkew, "gamma and delta must be finite");
  }
  if (gamma == delta) raise(ErrorCode::kInvalidSkew, "gamma and delta must differ");
  if (range == SkewRange::kUnitInterval &&
      (gamma < 0.0 || gamma > 1.0 || delta < 0.0 || delta > 1.0)) {
    raise(ErrorCode::kInvalidSkew, "gamma and delta must lie in [0, 1] unless the domain is R^D");
  }
}

double bregman(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2) {
  if (!f.has_gradient()) {
    raise(ErrorCode::kGradientRequired,
          "'" + f.name() + "' has no gradient; use bregman_chord_approx instead");
  }
  require_same_space(f, theta1, theta2);
  if (coincident(theta1, theta2)) return 0.0;
  const auto g2 = f.grad(theta2);
  double inner = 0.0;
  for (std::size_t i = 0; i < g2.size(); ++i) inner += (theta1[i] - theta2[i]) * g2[i];
  return f.eval(theta1) - f.eval(theta2) - inner;
}

double bregman_dual(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2) {
  return bregman(f, theta2, theta1);
}

double chord_gap(const LineRestriction& g, const ChordParams& cp) {
  const double a = cp.lower();
  const double b = cp.upper();
  const double ga = g.eval(a);
  const double gb = g.eval(b);
  return g.eval(0.0) - ga + a * (gb - ga) / (b - a);
}

double tangent_gap(const LineRestriction& g, double lambda) {
  return g.eval(0.0) - g.eval(lambda) + lambda * g.derivative(lambda);
}

double bregman_chord(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                     const ChordParams& cp) {
  require_same_space(f, theta1, theta2);
  if (coincident(theta1, theta2)) return 0.0;
  return chord_gap(restrict_to_line(f, theta1, theta2), cp);
}

double bregman_tangent(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                       double alpha) {
  if (!f.has_gradient()) {
    raise(ErrorCode::kGradientRequired, "'" + f.name() + "' has no gradient");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    raise(ErrorCode::kInvalidParameter, "tangent alpha must lie in (0, 1], got " + fmt(alpha));
  }
  require_same_space(f, theta1, theta2);
  if (coincident(theta1, theta2)) return 0.0;
  return tangent_gap(restrict_to_line(f, theta1, theta2), alpha);
}

double chord_slope(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                   const ChordParams& cp) {
  require_same_space(f, theta1, theta2);
  if (coincident(theta1, theta2)) return 0.0;
  const auto g = restrict_to_line(f, theta1, theta2);
  const double a = cp.lower();
  const double b = cp.upper();
  return (g.eval(a) - g.eval(b)) / (a - b);
}

double mean_value_witness(const Generator& f, const ParamPoint& theta1,
                          const ParamPoint& theta2, const ChordParams& cp) {
  if (!f.has_gradient()) {
    raise(ErrorCode::kGradientRequired, "'" + f.name() + "' has no gradient");
  }
  const auto g = restrict_to_line(f, theta1, theta2);
  const double a = cp.lower();
  const double b = cp.upper();
  const double slope = (g.eval(a) - g.eval(b)) / (a - b);
  const auto residual = [&](double lambda) { return g.derivative(lambda) - slope; };
  try {
    // Bisect down to a few ulps; the witness feeds identities checked at 1e-9.
    return bisect_root(residual, a, b, 4.0 * std::numeric_limits<double>::epsilon() * b).x;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBracket) throw;
    raise(ErrorCode::kWitnessNotFound,
          "G' - slope does not change sign on [" + fmt(a) + ", " + fmt(b) +
              "]: residuals " + fmt(residual(a)) + ", " + fmt(residual(b)) +
              " (slope " + fmt(slope) + ")");
  }
}

double bregman_chord_approx(const Generator& f, const ParamPoint& theta1,
                            const ParamPoint& theta2, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    raise(ErrorCode::kInvalidParameter, "epsilon must lie in (0, 1), got " + fmt(epsilon));
  }
  return bregman_chord(f, theta1, theta2, ChordParams(1.0 - epsilon, 1.0));
}

double biskew(const Divergence& d, const ParamPoint& theta1, const ParamPoint& theta2,
              const SkewPair& sp) {
  require_same_dim(theta1, theta2);
  if (coincident(theta1, theta2)) return 0.0;
  return d(interpolate(theta1, theta2, sp.gamma()), interpolate(theta1, theta2, sp.delta()));
}

}  // namespace chordiv
