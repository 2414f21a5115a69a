#pragma once

#include <functional>
#include <span>
#include <vector>

#include "chordiv/generators.hpp"
#include "chordiv/param_point.hpp"

namespace chordiv {

inline constexpr double kDefaultFiniteDifferenceStep = 1e-5;

/// Central differences per coordinate. If a stencil point leaves the domain
/// the step is shrunk by 10x once before giving up with kDomain.
std::vector<double> central_diff_grad(const Generator& f, const ParamPoint& theta,
                                      double h = kDefaultFiniteDifferenceStep);

struct SearchResult {
  double x = 0.0;
  int iterations = 0;
};

using UnivariateFn = std::function<double(double)>;

/// Bisection on a sign change. Stops once the bracket is narrower than tol
/// or can no longer be split in double precision.
SearchResult bisect_root(const UnivariateFn& g, double lo, double hi, double tol);

/// Golden-section search for a unimodal g on [lo, hi]. The endpoints are
/// compared against the interior estimate, so boundary minimizers are
/// returned exactly.
SearchResult golden_minimize(const UnivariateFn& g, double lo, double hi, double tol);

int bisect_iteration_cap(double lo, double hi, double tol);
int golden_iteration_cap(double lo, double hi, double tol);

struct CoordinateDescentResult {
  std::vector<double> x;
  double value = 0.0;
  int sweeps = 0;
};

/// Round-robin golden-section descent inside a box. Terminates when a full
/// sweep moves no coordinate by more than tol.
CoordinateDescentResult coordinate_descent_minimize(
    const std::function<double(std::span<const double>)>& g, std::vector<double> start,
    std::span<const Interval> box, double tol, int max_sweeps);

}  // namespace chordiv
