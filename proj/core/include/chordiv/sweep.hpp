#pragma once

#include <vector>

#include "chordiv/divergence_registry.hpp"
#include "chordiv/generators.hpp"
#include "chordiv/param_point.hpp"

namespace chordiv {

/// Axis values in (0, 1], strictly increasing.
struct SweepGrid {
  std::vector<double> alpha_values;
  std::vector<double> beta_values;
  bool skip_diagonal = true;

  void validate() const;

  /// Both axes {i / (n + 1) : i = 1..n}; the beta axis additionally gets
  /// beta = 1 so the gradient-free approximation row is always present.
  static SweepGrid uniform(int n, bool append_beta_one = true);
};

struct SweepRow {
  double alpha = 0.0;
  double beta = 0.0;
  double value = 0.0;
};

/// Evaluates the divergence on every non-skipped (alpha, beta) cell. Cell
/// values override spec.params.alpha/beta (gamma/delta for biskew ids).
/// Rows are ordered by alpha, then beta, whatever the thread count;
/// threads = 0 uses the hardware concurrency.
std::vector<SweepRow> sweep(const Generator& f, const ParamPoint& theta1,
                            const ParamPoint& theta2, const SweepGrid& grid,
                            const DivergenceSpec& spec, unsigned threads = 0);

}  // namespace chordiv
