#include "chordiv/f_divergence.hpp"

#include <array>
#include <cmath>

#include "chordiv/error.hpp"

namespace chordiv {

namespace {

constexpr std::array<std::string_view, 3> kFNames = {"kl", "tv", "chi2"};

void require_comparable(const DiscreteDist& p, const DiscreteDist& q) {
  if (p.size() != q.size()) {
    raise(ErrorCode::kShape, "distributions have lengths " + std::to_string(p.size()) +
                                 " and " + std::to_string(q.size()));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0) || !(q[i] > 0.0)) {
      raise(ErrorCode::kDomain,
            "zero mass at coordinate " + std::to_string(i) + "; weights must be > 0");
    }
  }
}

}  // namespace

FGenerator::FGenerator(std::string name, std::function<double(double)> f)
    : name_(std::move(name)), f_(std::move(f)) {
  if (!f_) raise(ErrorCode::kInvalidParameter, "f-generator '" + name_ + "' is empty");
  const double at_one = f_(1.0);
  if (!(std::abs(at_one) <= 1e-12)) {
    raise(ErrorCode::kInvalidParameter,
          "f-generator '" + name_ + "' has f(1) = " + std::to_string(at_one) + ", expected 0");
  }
}

std::span<const std::string_view> f_generator_names() { return kFNames; }

FGenerator make_f_generator(std::string_view name) {
  if (name == "kl") return FGenerator("kl", [](double u) { return -std::log(u); });
  if (name == "tv") return FGenerator("tv", [](double u) { return 0.5 * std::abs(u - 1.0); });
  if (name == "chi2") return FGenerator("chi2", [](double u) { return (u - 1.0) * (u - 1.0); });
  raise(ErrorCode::kUnsupportedGenerator, "unknown f-generator '" + std::string(name) + "'");
}

DiscreteDist::DiscreteDist(std::vector<double> weights, bool normalized)
    : weights_(std::move(weights)), normalized_(normalized) {
  if (weights_.empty()) raise(ErrorCode::kShape, "distribution has no coordinates");
  double total = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      raise(ErrorCode::kDomain, "weights must be finite and non-negative");
    }
    total += w;
  }
  if (normalized_ && std::abs(total - 1.0) > 1e-12) {
    raise(ErrorCode::kDomain, "normalized weights sum to " + std::to_string(total));
  }
}

double scalar_f_div(const FGenerator& f, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    raise(ErrorCode::kDomain, "scalar f-divergence needs a, b > 0");
  }
  return a * f(b / a);
}

double f_div(const FGenerator& f, const DiscreteDist& p, const DiscreteDist& q) {
  require_comparable(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * f(q[i] / p[i]);
  return s;
}

FGenerator dual_generator(const FGenerator& f) {
  return FGenerator(f.name() + "_dual", [f](double u) { return u * f(1.0 / u); });
}

FGenerator j_symmetrize(const FGenerator& f) {
  const auto dual = dual_generator(f);
  return FGenerator(f.name() + "_jsym", [f, dual](double u) { return 0.5 * (f(u) + dual(u)); });
}

FGenerator js_symmetrize(const FGenerator& f) {
  return FGenerator(f.name() + "_jssym", [f](double u) {
    return 0.5 * (f(0.5 * (1.0 + u)) + u * f((1.0 + u) / (2.0 * u)));
  });
}

FGenerator js_symmetrize_mixture_first(const FGenerator& f) {
  return FGenerator(f.name() + "_jssym_mixture_first", [f](double u) {
    return 0.25 * (1.0 + u) * (f(2.0 * u / (1.0 + u)) + f(2.0 / (1.0 + u)));
  });
}

double js_symmetrize_div(const FGenerator& f, const DiscreteDist& p, const DiscreteDist& q) {
  require_comparable(p, q);
  std::vector<double> mix(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mix[i] = 0.5 * (p[i] + q[i]);
  const DiscreteDist m(std::move(mix));
  return 0.5 * (f_div(f, p, m) + f_div(f, q, m));
}

double extended_kl(const DiscreteDist& p, const DiscreteDist& q) {
  require_comparable(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += p[i] * std::log(p[i] / q[i]) + q[i] - p[i];
  }
  return s;
}

}  // namespace chordiv
