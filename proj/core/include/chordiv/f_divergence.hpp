#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chordiv {

/// Convex f on (0, inf) with f(1) = 0. The constructor checks f(1) = 0.
class FGenerator {
 public:
  FGenerator(std::string name, std::function<double(double)> f);

  double operator()(double u) const { return f_(u); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  std::function<double(double)> f_;
};

/// kl: -log u, tv: |u - 1| / 2, chi2: (u - 1)^2
FGenerator make_f_generator(std::string_view name);
std::span<const std::string_view> f_generator_names();

/// Finite non-negative weights. With normalized = true the weights must sum
/// to one within 1e-12.
class DiscreteDist {
 public:
  explicit DiscreteDist(std::vector<double> weights, bool normalized = false);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const noexcept { return weights_; }
  bool normalized() const noexcept { return normalized_; }

 private:
  std::vector<double> weights_;
  bool normalized_;
};

/// a f(b / a)
double scalar_f_div(const FGenerator& f, double a, double b);

/// sum_i p_i f(q_i / p_i). With f = kl this is KL[p : q]. Zero weights are
/// rejected with kDomain.
double f_div(const FGenerator& f, const DiscreteDist& p, const DiscreteDist& q);

/// u f(1 / u): f_div(dual(f), p, q) = f_div(f, q, p)
FGenerator dual_generator(const FGenerator& f);

/// (f + dual(f)) / 2
FGenerator j_symmetrize(const FGenerator& f);

/// u -> (f((1+u)/2) + u f((1+u)/(2u))) / 2, the generator whose f-divergence
/// is js_symmetrize_div().
FGenerator js_symmetrize(const FGenerator& f);

/// u -> (1+u)/4 (f(2u/(1+u)) + f(2/(1+u))). Its f-divergence is the
/// mixture-first half-sum (I_f[m : p] + I_f[m : q]) / 2, which differs from
/// js_symmetrize_div() for asymmetric f.
FGenerator js_symmetrize_mixture_first(const FGenerator& f);

/// (f_div(f, p, m) + f_div(f, q, m)) / 2 with m = (p + q) / 2.
double js_symmetrize_div(const FGenerator& f, const DiscreteDist& p, const DiscreteDist& q);

/// sum_i p_i log(p_i / q_i) + q_i - p_i, for unnormalized positive measures.
double extended_kl(const DiscreteDist& p, const DiscreteDist& q);

}  // namespace chordiv
