#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chordiv/divergence.hpp"
#include "chordiv/divergence_registry.hpp"
#include "chordiv/generators.hpp"
#include "chordiv/param_point.hpp"

namespace chordiv {

struct ClusterConfig {
  std::size_t k = 2;
  DivergenceSpec divergence{"bregman", {}};
  int max_iters = 100;
  std::uint64_t seed = 0;
  double centroid_tol = 1e-8;
  double objective_tol = 1e-12;
  int max_centroid_sweeps = 100;

  void validate() const;
};

struct ClusterResult {
  std::vector<ParamPoint> centers;
  std::vector<std::size_t> assignments;
  std::vector<double> objective_trace;
  int iterations = 0;
};

/// Lloyd iteration under D(point : center). Centers are right-centroids
/// solved by coordinate-wise golden section, so any divergence of the
/// registry works, gradient-free ones included. Deterministic per seed.
ClusterResult kmeans(std::span<const ParamPoint> points, const Generator& f,
                     const ClusterConfig& cfg);

/// sum_i D(points[i] : centers[assignments[i]])
double objective(std::span<const ParamPoint> points, std::span<const std::size_t> assignments,
                 std::span<const ParamPoint> centers, const Divergence& d);

/// argmin_c sum_i D(members[i] : c), started at `start` and searched over
/// the members' bounding box widened by 10% per side.
ParamPoint solve_centroid(std::span<const ParamPoint> members, const Divergence& d,
                          const ParamPoint& start, double tol, int max_sweeps);

double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace chordiv
