#include "chordiv/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "chordiv/error.hpp"
#include "chordiv/numerics.hpp"

namespace chordiv {

namespace {

constexpr std::array<std::string_view, 4> kBuiltinNames = {
    "quadratic", "shannon_negentropy", "burg_negentropy", "log_sum_exp"};

std::string format_point(std::span<const double> theta) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (i) os << ',';
    os << theta[i];
  }
  os << ')';
  return os.str();
}

// log(1 + sum_i exp(theta_i)) without overflow.
double log_one_plus_sum_exp(std::span<const double> theta) {
  double m = 0.0;
  for (double t : theta) m = std::max(m, t);
  double s = std::exp(-m);
  for (double t : theta) s += std::exp(t - m);
  return m + std::log(s);
}

Generator make_quadratic(std::size_t dim) {
  auto conj = std::make_shared<const Generator>(
      "quadratic*", dim, Domain{DomainKind::kReals},
      [](std::span<const double> eta) {
        double s = 0.0;
        for (double e : eta) s += e * e;
        return s / 4.0;
      },
      [](std::span<const double> eta) {
        std::vector<double> g(eta.size());
        for (std::size_t i = 0; i < eta.size(); ++i) g[i] = eta[i] / 2.0;
        return g;
      });
  return Generator(
      "quadratic", dim, Domain{DomainKind::kReals},
      [](std::span<const double> theta) {
        double s = 0.0;
        for (double t : theta) s += t * t;
        return s;
      },
      [](std::span<const double> theta) {
        std::vector<double> g(theta.size());
        for (std::size_t i = 0; i < theta.size(); ++i) g[i] = 2.0 * theta[i];
        return g;
      },
      std::move(conj));
}

Generator make_shannon(std::size_t dim) {
  auto conj = std::make_shared<const Generator>(
      "shannon_negentropy*", dim, Domain{DomainKind::kReals},
      [](std::span<const double> eta) {
        double s = 0.0;
        for (double e : eta) s += std::exp(e - 1.0);
        return s;
      },
      [](std::span<const double> eta) {
        std::vector<double> g(eta.size());
        for (std::size_t i = 0; i < eta.size(); ++i) g[i] = std::exp(eta[i] - 1.0);
        return g;
      });
  return Generator(
      "shannon_negentropy", dim, Domain{DomainKind::kPositiveOrthant},
      [](std::span<const double> theta) {
        double s = 0.0;
        for (double t : theta) s += t * std::log(t);
        return s;
      },
      [](std::span<const double> theta) {
        std::vector<double> g(theta.size());
        for (std::size_t i = 0; i < theta.size(); ++i) g[i] = 1.0 + std::log(theta[i]);
        return g;
      },
      std::move(conj));
}

Generator make_burg(std::size_t dim) {
  return Generator(
      "burg_negentropy", dim, Domain{DomainKind::kPositiveOrthant},
      [](std::span<const double> theta) {
        double s = 0.0;
        for (double t : theta) s -= std::log(t);
        return s;
      },
      [](std::span<const double> theta) {
        std::vector<double> g(theta.size());
        for (std::size_t i = 0; i < theta.size(); ++i) g[i] = -1.0 / theta[i];
        return g;
      });
}

Generator make_log_sum_exp(std::size_t dim) {
  // Legendre dual: negative entropy of the (D+1)-outcome distribution whose
  // first D masses are eta, on the open simplex in corner coordinates.
  auto conj = std::make_shared<const Generator>(
      "log_sum_exp*", dim, Domain{DomainKind::kOpenSimplex},
      [](std::span<const double> eta) {
        double s = 0.0;
        double rest = 1.0;
        for (double e : eta) {
          s += e * std::log(e);
          rest -= e;
        }
        return s + rest * std::log(rest);
      },
      [](std::span<const double> eta) {
        double rest = 1.0;
        for (double e : eta) rest -= e;
        const double log_rest = std::log(rest);
        std::vector<double> g(eta.size());
        for (std::size_t i = 0; i < eta.size(); ++i) g[i] = std::log(eta[i]) - log_rest;
        return g;
      });
  return Generator(
      "log_sum_exp", dim, Domain{DomainKind::kReals},
      [](std::span<const double> theta) { return log_one_plus_sum_exp(theta); },
      [](std::span<const double> theta) {
        const double lse = log_one_plus_sum_exp(theta);
        std::vector<double> g(theta.size());
        for (std::size_t i = 0; i < theta.size(); ++i) g[i] = std::exp(theta[i] - lse);
        return g;
      },
      std::move(conj));
}

}  // namespace

bool Domain::contains(std::span<const double> theta) const {
  for (double t : theta) {
    if (!std::isfinite(t)) return false;
  }
  switch (kind) {
    case DomainKind::kReals:
      return true;
    case DomainKind::kPositiveOrthant:
      return std::all_of(theta.begin(), theta.end(), [&](double t) { return t > margin; });
    case DomainKind::kOpenSimplex: {
      double s = 0.0;
      for (double t : theta) {
        if (!(t > margin)) return false;
        s += t;
      }
      return s < 1.0 - margin;
    }
    case DomainKind::kRealsWithOffset:
      return std::all_of(theta.begin(), theta.end(),
                         [&](double t) { return t + offset > margin; });
  }
  return false;
}

std::string Domain::describe() const {
  switch (kind) {
    case DomainKind::kReals: return "R^D";
    case DomainKind::kPositiveOrthant: return "positive orthant";
    case DomainKind::kOpenSimplex: return "open probability simplex";
    case DomainKind::kRealsWithOffset: {
      std::ostringstream os;
      os << "theta_i > " << -offset;
      return os.str();
    }
  }
  return "?";
}

Generator::Generator(std::string name, std::size_t dim, Domain domain, ScalarField eval,
                     GradientField grad, std::shared_ptr<const Generator> conjugate)
    : name_(std::move(name)),
      dim_(dim),
      domain_(domain),
      eval_(std::move(eval)),
      grad_(std::move(grad)),
      conjugate_(std::move(conjugate)) {
  if (dim_ < 1) raise(ErrorCode::kInvalidDimension, "generator dimension must be >= 1");
  if (!eval_) raise(ErrorCode::kInvalidParameter, "generator '" + name_ + "' has no evaluator");
}

const Generator& Generator::conjugate() const {
  if (!conjugate_) {
    raise(ErrorCode::kUnsupportedGenerator,
          "generator '" + name_ + "' has no closed-form conjugate");
  }
  return *conjugate_;
}

bool Generator::contains(const ParamPoint& theta) const {
  return theta.dim() == dim_ && domain_.contains(theta.coords());
}

void Generator::require_in_domain(const ParamPoint& theta, std::string_view what) const {
  if (theta.dim() != dim_) {
    raise(ErrorCode::kShape, std::string(what) + " has dimension " +
                                 std::to_string(theta.dim()) + ", generator '" + name_ +
                                 "' expects " + std::to_string(dim_));
  }
  if (!domain_.contains(theta.coords())) {
    raise(ErrorCode::kDomain, std::string(what) + " " + format_point(theta.coords()) +
                                  " lies outside the " + domain_.describe() + " of '" +
                                  name_ + "'");
  }
}

double Generator::eval(const ParamPoint& theta) const {
  require_in_domain(theta, "point");
  return eval_(theta.coords());
}

std::vector<double> Generator::grad(const ParamPoint& theta) const {
  if (!grad_) {
    raise(ErrorCode::kGradientRequired, "generator '" + name_ + "' has no gradient");
  }
  require_in_domain(theta, "point");
  return grad_(theta.coords());
}

std::span<const std::string_view> builtin_generator_names() { return kBuiltinNames; }

Generator make_builtin(std::string_view name, std::size_t dim) {
  if (dim < 1) raise(ErrorCode::kInvalidDimension, "dimension must be >= 1");
  if (name == "quadratic") return make_quadratic(dim);
  if (name == "shannon_negentropy") return make_shannon(dim);
  if (name == "burg_negentropy") return make_burg(dim);
  if (name == "log_sum_exp") return make_log_sum_exp(dim);
  raise(ErrorCode::kUnsupportedGenerator, "unknown generator '" + std::string(name) + "'");
}

LineRestriction::LineRestriction(Generator base, ParamPoint theta1, ParamPoint theta2)
    : base_(std::move(base)), theta1_(std::move(theta1)), theta2_(std::move(theta2)) {
  base_.require_in_domain(theta1_, "theta1");
  base_.require_in_domain(theta2_, "theta2");
  if (theta1_ == theta2_) {
    raise(ErrorCode::kDegenerateRestriction, "theta1 and theta2 coincide");
  }
}

ParamPoint LineRestriction::point(double lambda) const {
  return interpolate(theta1_, theta2_, lambda);
}

double LineRestriction::eval(double lambda) const { return base_.eval(point(lambda)); }

double LineRestriction::derivative(double lambda) const {
  const auto g = base_.grad(point(lambda));
  double d = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) d += g[i] * (theta2_[i] - theta1_[i]);
  return d;
}

LineRestriction restrict_to_line(const Generator& f, const ParamPoint& theta1,
                                 const ParamPoint& theta2) {
  return LineRestriction(f, theta1, theta2);
}

ConjugateEstimate legendre_conjugate_numeric(const Generator& f, const ParamPoint& eta,
                                             std::span<const Interval> search_box) {
  if (eta.dim() != f.dim() || search_box.size() != f.dim()) {
    raise(ErrorCode::kShape, "eta and search box must match the generator dimension");
  }
  std::vector<double> start(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    const auto& iv = search_box[i];
    if (!(iv.lo < iv.hi)) raise(ErrorCode::kInvalidParameter, "empty search interval");
    start[i] = 0.5 * (iv.lo + iv.hi);
  }
  if (!f.domain().contains(start)) {
    raise(ErrorCode::kDomain, "search box centre lies outside the generator domain");
  }

  // Minimise F(theta) - <theta, eta>; points outside the domain are +inf.
  const auto objective = [&](std::span<const double> theta) {
    if (!f.domain().contains(theta)) return std::numeric_limits<double>::infinity();
    double dot = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i) dot += theta[i] * eta[i];
    return f.eval_unchecked(theta) - dot;
  };
  constexpr double kTol = 1e-11;
  auto cd = coordinate_descent_minimize(objective, std::move(start), search_box, kTol, 500);

  ConjugateEstimate out;
  out.value = -cd.value;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    const auto& iv = search_box[i];
    const double slack = 1e-7 * (iv.hi - iv.lo);
    if (cd.x[i] - iv.lo <= slack || iv.hi - cd.x[i] <= slack) out.at_boundary = true;
  }
  out.argmax = ParamPoint(std::move(cd.x));
  return out;
}

}  // namespace chordiv
