#include "chordiv/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chordiv/error.hpp"

namespace chordiv {

namespace {

bool stencil_in_domain(const Generator& f, std::vector<double>& work, std::size_t i,
                       double h) {
  const double centre = work[i];
  work[i] = centre + h;
  const bool up = f.domain().contains(work);
  work[i] = centre - h;
  const bool down = f.domain().contains(work);
  work[i] = centre;
  return up && down;
}

}  // namespace

std::vector<double> central_diff_grad(const Generator& f, const ParamPoint& theta, double h) {
  if (!(h > 0.0)) raise(ErrorCode::kInvalidParameter, "finite-difference step must be > 0");
  f.require_in_domain(theta, "theta");
  std::vector<double> work = theta.vec();
  std::vector<double> grad(theta.dim());
  for (std::size_t i = 0; i < theta.dim(); ++i) {
    double step = h;
    if (!stencil_in_domain(f, work, i, step)) {
      step = h / 10.0;
      if (!stencil_in_domain(f, work, i, step)) {
        raise(ErrorCode::kDomain, "finite-difference stencil leaves the domain at coordinate " +
                                      std::to_string(i));
      }
    }
    const double centre = work[i];
    work[i] = centre + step;
    const double up = f.eval_unchecked(work);
    work[i] = centre - step;
    const double down = f.eval_unchecked(work);
    work[i] = centre;
    grad[i] = (up - down) / (2.0 * step);
  }
  return grad;
}

int bisect_iteration_cap(double lo, double hi, double tol) {
  return static_cast<int>(std::ceil(std::log2((hi - lo) / tol))) + 2;
}

int golden_iteration_cap(double lo, double hi, double tol) {
  return static_cast<int>(std::ceil(std::log((hi - lo) / tol) / std::log(std::numbers::phi))) +
         2;
}

SearchResult bisect_root(const UnivariateFn& g, double lo, double hi, double tol) {
  if (!(tol > 0.0)) raise(ErrorCode::kInvalidParameter, "bisection tolerance must be > 0");
  if (lo > hi) std::swap(lo, hi);
  double glo = g(lo);
  const double ghi = g(hi);
  if (glo == 0.0) return {lo, 0};
  if (ghi == 0.0) return {hi, 0};
  if (std::signbit(glo) == std::signbit(ghi) || std::isnan(glo) || std::isnan(ghi)) {
    raise(ErrorCode::kBracket, "no sign change on [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
  }
  const int cap = std::max(bisect_iteration_cap(lo, hi, tol), 0);
  int it = 0;
  while (hi - lo > tol && it < cap) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    ++it;
    const double gm = g(mid);
    if (gm == 0.0) return {mid, it};
    if (std::signbit(gm) == std::signbit(glo)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return {lo + 0.5 * (hi - lo), it};
}

SearchResult golden_minimize(const UnivariateFn& g, double lo, double hi, double tol) {
  if (!(lo < hi)) raise(ErrorCode::kInvalidParameter, "golden search needs lo < hi");
  if (!(tol > 0.0)) raise(ErrorCode::kInvalidParameter, "golden tolerance must be > 0");
  constexpr double kInvPhi = 1.0 / std::numbers::phi;
  const double a0 = lo;
  const double b0 = hi;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double gc = g(c);
  double gd = g(d);
  const int cap = golden_iteration_cap(lo, hi, tol);
  int it = 0;
  while (b - a > tol && it < cap) {
    ++it;
    if (gc <= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvPhi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvPhi * (b - a);
      gd = g(d);
    }
  }
  double best_x = gc <= gd ? c : d;
  double best_g = std::min(gc, gd);
  for (double edge : {a0, b0}) {
    const double ge = g(edge);
    if (ge < best_g) {
      best_g = ge;
      best_x = edge;
    }
  }
  return {best_x, it};
}

CoordinateDescentResult coordinate_descent_minimize(
    const std::function<double(std::span<const double>)>& g, std::vector<double> start,
    std::span<const Interval> box, double tol, int max_sweeps) {
  if (start.size() != box.size()) raise(ErrorCode::kShape, "start and box dimensions differ");
  CoordinateDescentResult out;
  out.x = std::move(start);
  std::vector<double> work = out.x;
  double current = g(out.x);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    ++out.sweeps;
    double moved = 0.0;
    for (std::size_t i = 0; i < out.x.size(); ++i) {
      work = out.x;
      auto along = [&](double t) {
        work[i] = t;
        return g(work);
      };
      const double candidate = golden_minimize(along, box[i].lo, box[i].hi, tol).x;
      work[i] = candidate;
      const double value = g(work);
      // Only accept strict improvements so the objective never increases.
      if (value < current) {
        moved = std::max(moved, std::abs(candidate - out.x[i]));
        out.x[i] = candidate;
        current = value;
      }
    }
    if (moved <= tol) break;
  }
  out.value = current;
  return out;
}

}  // namespace chordiv
