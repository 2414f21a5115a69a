#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordiv/param_point.hpp"

namespace chordiv {

/// Interior margin used by every domain test. Keeps log(x) and 1/x finite.
inline constexpr double kDomainMargin = 1e-12;

enum class DomainKind {
  kReals,           // R^D
  kPositiveOrthant, // theta_i > 0
  kOpenSimplex,     // theta_i > 0, sum_i theta_i < 1 (corner coordinates)
  kRealsWithOffset, // theta_i + offset > 0
};

struct Domain {
  DomainKind kind = DomainKind::kReals;
  double offset = 0.0;
  double margin = kDomainMargin;

  bool contains(std::span<const double> theta) const;
  bool unbounded() const { return kind == DomainKind::kReals; }
  std::string describe() const;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

using ScalarField = std::function<double(std::span<const double>)>;
using GradientField = std::function<std::vector<double>(std::span<const double>)>;

/// Strictly convex function on an open convex domain. Immutable value type:
/// copies share the (immutable) conjugate.
class Generator {
 public:
  Generator(std::string name, std::size_t dim, Domain domain, ScalarField eval,
            GradientField grad = {},
            std::shared_ptr<const Generator> conjugate = nullptr);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return dim_; }
  const Domain& domain() const noexcept { return domain_; }
  bool has_gradient() const noexcept { return static_cast<bool>(grad_); }
  bool has_conjugate() const noexcept { return conjugate_ != nullptr; }

  /// Throws kUnsupportedGenerator when no closed-form conjugate is attached.
  const Generator& conjugate() const;

  bool contains(const ParamPoint& theta) const;
  /// Throws kShape on dimension mismatch and kDomain outside the domain.
  void require_in_domain(const ParamPoint& theta, std::string_view what) const;

  double eval(const ParamPoint& theta) const;
  std::vector<double> grad(const ParamPoint& theta) const;

  /// Evaluates without domain checks; the caller guarantees membership.
  double eval_unchecked(std::span<const double> theta) const { return eval_(theta); }

 private:
  std::string name_;
  std::size_t dim_;
  Domain domain_;
  ScalarField eval_;
  GradientField grad_;
  std::shared_ptr<const Generator> conjugate_;
};

/// quadratic, shannon_negentropy, burg_negentropy, log_sum_exp
Generator make_builtin(std::string_view name, std::size_t dim);
std::span<const std::string_view> builtin_generator_names();

/// lambda -> F((1-lambda) theta1 + lambda theta2). Captures everything by
/// value, so a restriction outlives the objects it was built from.
class LineRestriction {
 public:
  LineRestriction(Generator base, ParamPoint theta1, ParamPoint theta2);

  const Generator& base() const noexcept { return base_; }
  const ParamPoint& theta1() const noexcept { return theta1_; }
  const ParamPoint& theta2() const noexcept { return theta2_; }

  ParamPoint point(double lambda) const;
  double eval(double lambda) const;
  /// d/dlambda = (theta2 - theta1) . grad F at point(lambda).
  double derivative(double lambda) const;
  bool has_derivative() const noexcept { return base_.has_gradient(); }

 private:
  Generator base_;
  ParamPoint theta1_;
  ParamPoint theta2_;
};

LineRestriction restrict_to_line(const Generator& f, const ParamPoint& theta1,
                                 const ParamPoint& theta2);

struct ConjugateEstimate {
  double value = 0.0;
  ParamPoint argmax;
  /// The maximizer sits on the search box boundary; the true supremum may
  /// lie outside the box.
  bool at_boundary = false;
};

/// sup over the box of <theta, eta> - F(theta), by coordinate-wise golden
/// section search.
ConjugateEstimate legendre_conjugate_numeric(const Generator& f,
                                             const ParamPoint& eta,
                                             std::span<const Interval> search_box);

}  // namespace chordiv
