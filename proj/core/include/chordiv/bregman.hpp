#pragma once

#include "chordiv/divergence.hpp"
#include "chordiv/generators.hpp"
#include "chordiv/param_point.hpp"

namespace chordiv {

/// Chord anchors alpha, beta in (0, 1], alpha != beta. The chord divergence
/// is swap-invariant, so lower()/upper() give the canonical ordering.
class ChordParams {
 public:
  ChordParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double lower() const noexcept { return alpha_ < beta_ ? alpha_ : beta_; }
  double upper() const noexcept { return alpha_ < beta_ ? beta_ : alpha_; }

 private:
  double alpha_;
  double beta_;
};

enum class SkewRange {
  kUnitInterval,  // gamma, delta in [0, 1]
  kUnbounded,     // any reals; only sound when the domain is all of R^D
};

class SkewPair {
 public:
  SkewPair(double gamma, double delta, SkewRange range = SkewRange::kUnitInterval);

  double gamma() const noexcept { return gamma_; }
  double delta() const noexcept { return delta_; }

 private:
  double gamma_;
  double delta_;
};

/// F(theta1) - F(theta2) - <theta1 - theta2, grad F(theta2)>
double bregman(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2);

/// B_F(theta2 : theta1).
double bregman_dual(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2);

/// Ordinate gap at theta1 between the graph of F and the chord through the
/// interpolants at alpha and beta, measured along the line theta1 -> theta2.
/// Needs no gradient.
double bregman_chord(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                     const ChordParams& cp);

/// Ordinate gap at theta1 against the tangent at the alpha-interpolant.
/// alpha = 1 recovers bregman().
double bregman_tangent(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                       double alpha);

/// (G(alpha) - G(beta)) / (alpha - beta) for the line restriction G.
double chord_slope(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                   const ChordParams& cp);

/// lambda* strictly between alpha and beta with G'(lambda*) equal to the
/// chord slope, found by bisection on G' - slope.
double mean_value_witness(const Generator& f, const ParamPoint& theta1,
                          const ParamPoint& theta2, const ChordParams& cp);

/// bregman_chord with alpha = 1 - epsilon, beta = 1.
double bregman_chord_approx(const Generator& f, const ParamPoint& theta1,
                            const ParamPoint& theta2, double epsilon);

/// D((theta1 theta2)_gamma : (theta1 theta2)_delta)
double biskew(const Divergence& d, const ParamPoint& theta1, const ParamPoint& theta2,
              const SkewPair& sp);

// Univariate forms on a line restriction G, with theta1 at lambda = 0.

/// G(0) - G(a) + a (G(b) - G(a)) / (b - a)
double chord_gap(const LineRestriction& g, const ChordParams& cp);
/// G(0) - G(lambda) + lambda G'(lambda)
double tangent_gap(const LineRestriction& g, double lambda);

}  // namespace chordiv
