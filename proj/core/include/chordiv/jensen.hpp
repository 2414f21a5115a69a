#pragma once

#include <span>
#include <vector>

#include "chordiv/generators.hpp"
#include "chordiv/param_point.hpp"

namespace chordiv {

/// alpha <= gamma <= beta inside [0, 1]. alpha == beta is only accepted
/// together with gamma == alpha (the skewed Jensen special case).
class JensenChordParams {
 public:
  JensenChordParams(double alpha, double beta, double gamma);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }
  bool degenerate() const noexcept { return alpha_ == beta_; }

 private:
  double alpha_;
  double beta_;
  double gamma_;
};

/// (F(theta1) + F(theta2)) / 2 - F((theta1 + theta2) / 2)
double jensen(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2);

/// (1 - alpha) F(theta1) + alpha F(theta2) - F((theta1 theta2)_alpha), alpha in (0, 1)
double jensen_skewed(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                     double alpha);

/// |jensen_skewed(alpha) / alpha - B_F(theta2 : theta1)| for each alpha.
std::vector<double> jensen_scaled_limit_check(const Generator& f, const ParamPoint& theta1,
                                              const ParamPoint& theta2,
                                              std::span<const double> alphas);

/// (1 - alpha) B_F(theta1 : m) + alpha B_F(theta2 : m), m = (theta1 theta2)_alpha.
/// At alpha = 1/2 this equals jensen().
double jensen_bregman(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                      double alpha);

/// Gap at gamma between the chord through the endpoints and the chord
/// through the alpha- and beta-interpolants.
double jensen_chord(const Generator& f, const ParamPoint& theta1, const ParamPoint& theta2,
                    const JensenChordParams& jcp);

}  // namespace chordiv
