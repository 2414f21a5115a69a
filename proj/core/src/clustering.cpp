#include "chordiv/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "chordiv/error.hpp"
#include "chordiv/numerics.hpp"

namespace chordiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ParamPoint mean_of(std::span<const ParamPoint> members) {
  std::vector<double> m(members.front().dim(), 0.0);
  for (const auto& p : members) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += p[i];
  }
  for (double& v : m) v /= static_cast<double>(members.size());
  return ParamPoint(std::move(m));
}

double cluster_cost(std::span<const ParamPoint> members, const Divergence& d,
                    const ParamPoint& c) {
  double s = 0.0;
  for (const auto& x : members) s += d(x, c);
  return s;
}

// Cost where candidates outside the divergence's domain count as +inf.
double guarded_cost(std::span<const ParamPoint> members, const Divergence& d,
                    const ParamPoint& c) {
  try {
    return cluster_cost(members, d, c);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDomain) return kInf;
    throw;
  }
}

std::vector<std::size_t> distinct_indices(std::span<const ParamPoint> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].vec() < points[b].vec();
  });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || points[order[i]] != points[order[i - 1]]) out.push_back(order[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double divergence_at(const Divergence& d, std::span<const ParamPoint> points, std::size_t i,
                     const ParamPoint& c) {
  try {
    return d(points[i], c);
  } catch (const Error& e) {
    raise(e.code(), "point " + std::to_string(i) + ": " + e.what());
  }
}

}  // namespace

void ClusterConfig::validate() const {
  if (k < 1) raise(ErrorCode::kInvalidParameter, "k must be >= 1");
  if (max_iters < 1) raise(ErrorCode::kInvalidParameter, "max_iters must be >= 1");
  if (max_centroid_sweeps < 1) raise(ErrorCode::kInvalidParameter, "max_centroid_sweeps must be >= 1");
  if (!(centroid_tol > 0.0) || !(objective_tol > 0.0)) {
    raise(ErrorCode::kInvalidParameter, "tolerances must be > 0");
  }
}

double objective(std::span<const ParamPoint> points, std::span<const std::size_t> assignments,
                 std::span<const ParamPoint> centers, const Divergence& d) {
  if (points.size() != assignments.size()) {
    raise(ErrorCode::kShape, "points and assignments differ in length");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (assignments[i] >= centers.size()) {
      raise(ErrorCode::kShape, "assignment " + std::to_string(i) + " names a missing center");
    }
    s += d(points[i], centers[assignments[i]]);
  }
  return s;
}

ParamPoint solve_centroid(std::span<const ParamPoint> members, const Divergence& d,
                          const ParamPoint& start, double tol, int max_sweeps) {
  if (members.empty()) raise(ErrorCode::kShape, "centroid of an empty cluster");
  const std::size_t dim = members.front().dim();
  if (std::all_of(members.begin(), members.end(),
                  [&](const ParamPoint& p) { return p == members.front(); })) {
    return members.front();
  }
  std::vector<Interval> box(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    double lo = members.front()[i];
    double hi = lo;
    for (const auto& p : members) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    double pad = 0.1 * (hi - lo);
    if (pad == 0.0) pad = 0.1 * std::max(std::abs(lo), tol);
    box[i] = {lo - pad, hi + pad};
  }
  const auto cost = [&](std::span<const double> c) {
    return guarded_cost(members, d, ParamPoint(std::vector<double>(c.begin(), c.end())));
  };
  auto cd = coordinate_descent_minimize(cost, start.vec(), box, tol, max_sweeps);
  return ParamPoint(std::move(cd.x));
}

ClusterResult kmeans(std::span<const ParamPoint> points, const Generator& f,
                     const ClusterConfig& cfg) {
  cfg.validate();
  if (points.empty()) raise(ErrorCode::kInfeasible, "no points to cluster");
  for (std::size_t i = 0; i < points.size(); ++i) {
    f.require_in_domain(points[i], "point " + std::to_string(i));
  }
  const auto distinct = distinct_indices(points);
  if (cfg.k > distinct.size()) {
    raise(ErrorCode::kInfeasible, "k = " + std::to_string(cfg.k) + " exceeds the " +
                                      std::to_string(distinct.size()) + " distinct points");
  }
  const auto d = resolve_divergence(cfg.divergence, f);

  // k distinct points, partial Fisher-Yates over the distinct indices.
  std::mt19937_64 rng(cfg.seed);
  auto pool = distinct;
  ClusterResult out;
  for (std::size_t j = 0; j < cfg.k; ++j) {
    std::uniform_int_distribution<std::size_t> pick(j, pool.size() - 1);
    std::swap(pool[j], pool[pick(rng)]);
    out.centers.push_back(points[pool[j]]);
  }

  const std::size_t n = points.size();
  out.assignments.assign(n, 0);
  std::vector<double> cost_to_center(n, 0.0);
  std::vector<std::size_t> previous;

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    ++out.iterations;

    for (std::size_t i = 0; i < n; ++i) {
      double best = kInf;
      std::size_t best_j = 0;
      for (std::size_t j = 0; j < cfg.k; ++j) {
        const double v = divergence_at(d, points, i, out.centers[j]);
        if (v < best) {
          best = v;
          best_j = j;
        }
      }
      out.assignments[i] = best_j;
      cost_to_center[i] = best;
    }

    // Empty clusters take the worst-served point of a cluster that can spare one.
    std::vector<std::size_t> sizes(cfg.k, 0);
    for (auto a : out.assignments) ++sizes[a];
    for (std::size_t j = 0; j < cfg.k; ++j) {
      if (sizes[j] != 0) continue;
      std::size_t worst = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (sizes[out.assignments[i]] < 2) continue;
        if (worst == n || cost_to_center[i] > cost_to_center[worst]) worst = i;
      }
      if (worst == n) raise(ErrorCode::kInfeasible, "cannot repair an empty cluster");
      --sizes[out.assignments[worst]];
      ++sizes[j];
      out.assignments[worst] = j;
      out.centers[j] = points[worst];
      cost_to_center[worst] = 0.0;
    }

    bool centers_moved = false;
    for (std::size_t j = 0; j < cfg.k; ++j) {
      std::vector<ParamPoint> members;
      for (std::size_t i = 0; i < n; ++i) {
        if (out.assignments[i] == j) members.push_back(points[i]);
      }
      const auto start = mean_of(members);
      auto candidate = solve_centroid(members, d, start, cfg.centroid_tol, cfg.max_centroid_sweeps);
      // Keep the old center unless the solver found a cost that is no worse.
      if (guarded_cost(members, d, candidate) <= guarded_cost(members, d, out.centers[j])) {
        if (candidate != out.centers[j]) centers_moved = true;
        out.centers[j] = std::move(candidate);
      }
    }

    out.objective_trace.push_back(objective(points, out.assignments, out.centers, d));
    const auto& trace = out.objective_trace;
    if (trace.size() >= 2 && trace[trace.size() - 2] - trace.back() < cfg.objective_tol) break;
    if (!centers_moved && out.assignments == previous) break;
    previous = out.assignments;
  }
  return out;
}

double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) raise(ErrorCode::kShape, "labelings differ in length");
  if (a.size() < 2) return 1.0;  // no pairs to disagree on
  const double n = static_cast<double>(a.size());
  std::map<std::pair<std::size_t, std::size_t>, double> table;
  std::map<std::size_t, double> rows;
  std::map<std::size_t, double> cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    table[{a[i], b[i]}] += 1.0;
    rows[a[i]] += 1.0;
    cols[b[i]] += 1.0;
  }
  const auto pairs = [](double m) { return 0.5 * m * (m - 1.0); };
  double index = 0.0;
  for (const auto& [key, m] : table) index += pairs(m);
  double sum_rows = 0.0;
  for (const auto& [key, m] : rows) sum_rows += pairs(m);
  double sum_cols = 0.0;
  for (const auto& [key, m] : cols) sum_cols += pairs(m);
  const double expected = sum_rows * sum_cols / pairs(n);
  const double max_index = 0.5 * (sum_rows + sum_cols);
  if (max_index == expected) return 1.0;  // both labelings trivial
  return (index - expected) / (max_index - expected);
}

}  // namespace chordiv
