#include "chordiv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "chordiv/error.hpp"

namespace chordiv {

namespace {

void validate_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) raise(ErrorCode::kInvalidParameter, std::string(name) + " axis is empty");
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double v = axis[i];
    if (!std::isfinite(v) || !(v > 0.0) || v > 1.0) {
      raise(ErrorCode::kInvalidParameter, std::string(name) + " values must lie in (0, 1]");
    }
    if (i > 0 && !(axis[i - 1] < v)) {
      raise(ErrorCode::kInvalidParameter, std::string(name) + " values must be increasing");
    }
  }
}

DivergenceSpec cell_spec(const DivergenceSpec& base, double alpha, double beta) {
  DivergenceSpec spec = base;
  if (spec.id.rfind("biskew:", 0) == 0) {
    spec.params.gamma = alpha;
    spec.params.delta = beta;
  } else {
    spec.params.alpha = alpha;
    spec.params.beta = beta;
  }
  return spec;
}

}  // namespace

void SweepGrid::validate() const {
  validate_axis(alpha_values, "alpha");
  validate_axis(beta_values, "beta");
}

SweepGrid SweepGrid::uniform(int n, bool append_beta_one) {
  if (n < 1) raise(ErrorCode::kInvalidParameter, "grid size must be >= 1");
  SweepGrid grid;
  for (int i = 1; i <= n; ++i) {
    const double v = static_cast<double>(i) / static_cast<double>(n + 1);
    grid.alpha_values.push_back(v);
    grid.beta_values.push_back(v);
  }
  if (append_beta_one) grid.beta_values.push_back(1.0);
  return grid;
}

std::vector<SweepRow> sweep(const Generator& f, const ParamPoint& theta1,
                            const ParamPoint& theta2, const SweepGrid& grid,
                            const DivergenceSpec& spec, unsigned threads) {
  grid.validate();
  if (!is_known_divergence(spec.id)) {
    raise(ErrorCode::kUnknownDivergence, "unknown divergence '" + spec.id + "'");
  }

  std::vector<SweepRow> rows;
  for (double a : grid.alpha_values) {
    for (double b : grid.beta_values) {
      if (grid.skip_diagonal && a == b) continue;
      rows.push_back({a, b, 0.0});
    }
  }

  std::vector<std::exception_ptr> errors(rows.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        const auto d = resolve_divergence(cell_spec(spec, rows[i].alpha, rows[i].beta), f);
        rows[i].value = d(theta1, theta2);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace chordiv
