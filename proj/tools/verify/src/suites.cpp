#include "chordiv/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>

#include "chordiv/bregman.hpp"
#include "chordiv/clustering.hpp"
#include "chordiv/error.hpp"
#include "chordiv/f_divergence.hpp"
#include "chordiv/generators.hpp"
#include "chordiv/jensen.hpp"
#include "chordiv/numerics.hpp"

namespace chordiv::verify {

namespace {

constexpr std::array<std::string_view, 10> kSuites = {
    "sandwich",  "swap_symmetry", "limit_bregman", "limit_tangent", "mean_value",
    "dual_identity", "jensen",    "fdiv",          "gradient",      "clustering"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string ratios_text(const std::vector<double>& r) {
  std::string s = "ratios";
  for (double x : r) s += fmt(" %.3g", x);
  return s;
}

struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  ParamPoint point(const Generator& f) {
    double lo = 0.05, hi = 5.0;
    if (f.name() == "quadratic") lo = -5.0;
    if (f.name() == "log_sum_exp") lo = -3.0, hi = 3.0;
    std::vector<double> c(f.dim());
    for (double& v : c) v = uniform(lo, hi);
    return ParamPoint(std::move(c));
  }

  // alpha != beta, both in (0, 1]
  ChordParams chord() {
    for (;;) {
      const double a = 1.0 - uniform(0.0, 1.0);
      const double b = 1.0 - uniform(0.0, 1.0);
      if (a != b) return ChordParams(a, b);
    }
  }

  std::vector<double> simplex(std::size_t d) {
    std::vector<double> w(d);
    double s = 0.0;
    for (double& v : w) s += (v = uniform(0.05, 1.0));
    for (double& v : w) v /= s;
    return w;
  }

  std::mt19937_64 rng;
};

// quadratic, shannon and burg in dims 1 and 3, log_sum_exp in dim 3
std::vector<Generator> sandwich_generators() {
  std::vector<Generator> out;
  for (std::size_t d : {1u, 3u}) {
    for (auto n : {"quadratic", "shannon_negentropy", "burg_negentropy"}) {
      out.push_back(make_builtin(n, d));
    }
  }
  out.push_back(make_builtin("log_sum_exp", 3));
  return out;
}

// Successive error ratios must lie in [5, 20] with errors decreasing.
void judge_decay(SuiteResult& r, const std::vector<double>& errs, const std::string& label) {
  std::vector<double> ratios;
  for (std::size_t i = 1; i < errs.size(); ++i) {
    const double q = errs[i - 1] / errs[i];
    ratios.push_back(q);
    const bool ok = errs[i] < errs[i - 1] && q >= 5.0 && q <= 20.0;
    if (!ok) r.passed = false;
    // worst holds the ratio farthest from 10 on a log scale
    const auto off = [](double x) { return std::abs(std::log10(x) - 1.0); };
    if (r.worst == 0.0 || off(q) > off(r.worst)) r.worst = q;
  }
  r.detail += (r.detail.empty() ? "" : "; ") + label + " " + ratios_text(ratios);
}

SuiteResult sandwich(const SuiteOptions& o) {
  SuiteResult r{"sandwich", true, 0.0, {}, {}};
  Sampler s(o.seed);
  long checks = 0, bad = 0;
  for (const auto& f : sandwich_generators()) {
    for (int t = 0; t < o.trials; ++t) {
      const auto a = s.point(f), b = s.point(f);
      const double full = bregman(f, a, b);
      for (int k = 0; k < 20; ++k) {
        const double c = bregman_chord(f, a, b, s.chord());
        const double v = std::max(-c, c - full);
        ++checks;
        if (c < 0.0 || c > full + 1e-12) ++bad;
        r.worst = std::max(r.worst, std::max(v, 0.0));
      }
    }
  }
  r.passed = bad == 0;
  r.detail = std::to_string(checks) + " checks, " + std::to_string(bad) + " violations";
  return r;
}

SuiteResult swap_symmetry(const SuiteOptions& o) {
  SuiteResult r{"swap_symmetry", true, 0.0, {}, {}};
  Sampler s(o.seed);
  long checks = 0;
  for (const auto& f : sandwich_generators()) {
    for (int t = 0; t < o.trials; ++t) {
      const auto a = s.point(f), b = s.point(f);
      for (int k = 0; k < 20; ++k) {
        const auto cp = s.chord();
        const double d = std::abs(bregman_chord(f, a, b, cp) -
                                  bregman_chord(f, a, b, ChordParams(cp.beta(), cp.alpha())));
        r.worst = std::max(r.worst, d);
        ++checks;
      }
    }
  }
  r.passed = r.worst <= 1e-12;
  r.detail = std::to_string(checks) + " checks, max |B^{a,b} - B^{b,a}| " + fmt("%.3g", r.worst);
  return r;
}

SuiteResult limit_bregman(const SuiteOptions& o) {
  SuiteResult r{"limit_bregman", true, 0.0, {}, {}};
  Sampler s(o.seed);
  const double eps[] = {1e-1, 1e-2, 1e-3, 1e-4};
  for (const auto& f : sandwich_generators()) {
    std::vector<double> errs(4, 0.0);
    for (int t = 0; t < o.trials; ++t) {
      const auto a = s.point(f), b = s.point(f);
      const double full = bregman(f, a, b);
      for (int i = 0; i < 4; ++i) {
        errs[i] = std::max(errs[i], std::abs(bregman_chord_approx(f, a, b, eps[i]) - full));
      }
    }
    judge_decay(r, errs, f.name() + "/" + std::to_string(f.dim()));
  }
  return r;
}

SuiteResult limit_tangent(const SuiteOptions& o) {
  SuiteResult r{"limit_tangent", true, 0.0, {}, {}};
  Sampler s(o.seed);
  const double alpha = 0.4;
  const double eps[] = {1e-2, 1e-3, 1e-4};
  for (const auto& f : sandwich_generators()) {
    std::vector<double> errs(3, 0.0);
    for (int t = 0; t < o.trials; ++t) {
      const auto a = s.point(f), b = s.point(f);
      const double tangent = bregman_tangent(f, a, b, alpha);
      for (int i = 0; i < 3; ++i) {
        const double c = bregman_chord(f, a, b, ChordParams(alpha, alpha + eps[i]));
        errs[i] = std::max(errs[i], std::abs(c - tangent));
      }
    }
    judge_decay(r, errs, f.name() + "/" + std::to_string(f.dim()));
  }
  return r;
}

// Checks, per univariate instance, that the bisection witness has the chord
// slope and that the tangent gap at the witness equals the chord gap.
SuiteResult mean_value(const SuiteOptions& o) {
  SuiteResult r{"mean_value", true, 0.0, {}, {}};
  Sampler s(o.seed);
  const auto names = builtin_generator_names();
  double worst_slope = 0.0, worst_gap = 0.0, worst_substituted = 0.0;
  int slope_fail = 0, gap_fail = 0;
  for (int t = 0; t < o.trials; ++t) {
    const auto f = make_builtin(names[t % names.size()], 1);
    const auto a = s.point(f), b = s.point(f);
    const auto cp = s.chord();
    const auto g = restrict_to_line(f, a, b);
    const double xi = mean_value_witness(f, a, b, cp);
    const double slope = chord_slope(f, a, b, cp);
    const double chord = bregman_chord(f, a, b, cp);
    const double ds = std::abs(g.derivative(xi) - slope);
    const double dg = std::abs(tangent_gap(g, xi) - chord);
    const double lo = cp.lower();
    const double substituted = g.eval(0.0) - g.eval(lo) + lo * g.derivative(xi);
    worst_slope = std::max(worst_slope, ds);
    worst_gap = std::max(worst_gap, dg);
    worst_substituted = std::max(worst_substituted, std::abs(substituted - chord));
    if (ds > 1e-9) ++slope_fail;
    if (dg > 1e-8) ++gap_fail;
  }
  r.passed = slope_fail == 0 && gap_fail == 0;
  r.worst = std::max(worst_slope, worst_gap);
  r.detail = std::to_string(o.trials) + " instances; slope residual max " +
             fmt("%.3g", worst_slope) + " (" + std::to_string(slope_fail) +
             " over 1e-9); |B^xi - B^{a,b}| max " + fmt("%.3g", worst_gap) + " (" +
             std::to_string(gap_fail) + " over 1e-8)";
  r.notes.push_back("slope-substituted gap G(0) - G(a) + a G'(xi) vs B^{a,b}: max deviation " +
                    fmt("%.3g", worst_substituted) +
                    (worst_substituted <= 1e-8 ? " (within 1e-8)" : " (exceeds 1e-8)"));
  return r;
}

SuiteResult dual_identity(const SuiteOptions& o) {
  SuiteResult r{"dual_identity", true, 0.0, {}, {}};
  Sampler s(o.seed);
  for (auto n : {"quadratic", "shannon_negentropy"}) {
    for (std::size_t d : {1u, 3u}) {
      const auto f = make_builtin(n, d);
      const auto& conj = f.conjugate();
      for (int t = 0; t < o.trials; ++t) {
        const auto a = s.point(f), b = s.point(f);
        const double lhs = bregman(f, b, a);
        const double rhs = bregman(conj, ParamPoint(f.grad(a)), ParamPoint(f.grad(b)));
        r.worst = std::max(r.worst, std::abs(lhs - rhs));
      }
    }
  }
  r.passed = r.worst <= 1e-9;
  r.detail = "max deviation " + fmt("%.3g", r.worst);
  return r;
}

SuiteResult jensen_suite(const SuiteOptions& o) {
  SuiteResult r{"jensen", true, 0.0, {}, {}};
  Sampler s(o.seed);
  double jb = 0.0, reduce = 0.0, most_negative = 0.0;
  const double alphas[] = {1e-1, 1e-2, 1e-3};
  for (const auto& f : sandwich_generators()) {
    std::vector<double> errs(3, 0.0);
    for (int t = 0; t < o.trials; ++t) {
      const auto a = s.point(f), b = s.point(f);
      jb = std::max(jb, std::abs(jensen_bregman(f, a, b, 0.5) - jensen(f, a, b)));
      const auto e = jensen_scaled_limit_check(f, a, b, alphas);
      for (int i = 0; i < 3; ++i) errs[i] = std::max(errs[i], e[i]);
      double al = s.uniform(0.0, 1.0), be = s.uniform(0.0, 1.0);
      if (al > be) std::swap(al, be);
      const double ga = s.uniform(al, be);
      most_negative = std::min(most_negative, jensen_chord(f, a, b, JensenChordParams(al, be, ga)));
      const double g = s.uniform(1e-3, 1.0 - 1e-3);
      reduce = std::max(reduce, std::abs(jensen_chord(f, a, b, JensenChordParams(g, g, g)) -
                                         jensen_skewed(f, a, b, g)));
    }
    judge_decay(r, errs, f.name() + "/" + std::to_string(f.dim()));
  }
  const double ratio_worst = r.worst;
  r.passed = r.passed && jb <= 1e-12 && most_negative >= 0.0 && reduce <= 1e-12;
  r.worst = std::max({jb, -most_negative, reduce});
  r.detail = "|JB - J| max " + fmt("%.3g", jb) + "; min J^{a,b,g} " + fmt("%.3g", most_negative) +
             "; |J^{g,g,g} - J^g| max " + fmt("%.3g", reduce) + "; worst decay ratio " +
             fmt("%.3g", ratio_worst) + "; " + r.detail;
  return r;
}

SuiteResult fdiv(const SuiteOptions& o) {
  SuiteResult r{"fdiv", true, 0.0, {}, {}};
  Sampler s(o.seed);
  double dual = 0.0, ekl = 0.0;
  for (auto n : f_generator_names()) {
    const auto f = make_f_generator(n);
    const auto fd = dual_generator(f);
    for (std::size_t d : {2u, 5u}) {
      for (int t = 0; t < o.trials; ++t) {
        const DiscreteDist p(s.simplex(d), true), q(s.simplex(d), true);
        dual = std::max(dual, std::abs(f_div(fd, p, q) - f_div(f, q, p)));
      }
    }
  }
  for (std::size_t d : {1u, 3u}) {
    const auto shannon = make_builtin("shannon_negentropy", d);
    for (int t = 0; t < o.trials; ++t) {
      const auto a = s.point(shannon), b = s.point(shannon);
      ekl = std::max(ekl, std::abs(extended_kl(DiscreteDist(a.vec()), DiscreteDist(b.vec())) -
                                   bregman(shannon, a, b)));
    }
  }
  const double kl = f_div(make_f_generator("kl"), DiscreteDist({0.5, 0.5}, true),
                          DiscreteDist({0.25, 0.75}, true));
  const double kl_dev = std::abs(kl - 0.143841);
  r.passed = dual <= 1e-12 && ekl <= 1e-12 && kl_dev <= 1e-6;
  r.worst = std::max(dual, ekl);
  r.detail = "duality max " + fmt("%.3g", dual) + "; |ekl - B_shannon| max " + fmt("%.3g", ekl) +
             "; KL example " + fmt("%.12g", kl);
  return r;
}

SuiteResult gradient(const SuiteOptions& o) {
  SuiteResult r{"gradient", true, 0.0, {}, {}};
  Sampler s(o.seed);
  for (auto n : builtin_generator_names()) {
    for (std::size_t d : {1u, 3u}) {
      const auto f = make_builtin(n, d);
      for (int t = 0; t < o.trials; ++t) {
        const auto x = s.point(f);
        const auto g = f.grad(x);
        const auto fd = central_diff_grad(f, x);
        for (std::size_t i = 0; i < d; ++i) {
          r.worst = std::max(r.worst, std::abs(fd[i] - g[i]) / std::max(1.0, std::abs(g[i])));
        }
      }
    }
  }
  r.passed = r.worst <= 1e-6;
  r.detail = "max relative error " + fmt("%.3g", r.worst);
  return r;
}

// Two 1-D groups of 50 points, uniform on width 0.1 around 1 and 2, so the
// centre separation is ten times the spread.
SuiteResult clustering(const SuiteOptions& o) {
  SuiteResult r{"clustering", true, 0.0, {}, {}};
  Sampler s(o.seed);
  std::vector<ParamPoint> pts;
  std::vector<std::size_t> truth;
  for (std::size_t group = 0; group < 2; ++group) {
    for (int i = 0; i < 50; ++i) {
      pts.push_back(ParamPoint{1.0 + group + s.uniform(-0.05, 0.05)});
      truth.push_back(group);
    }
  }
  DivergenceParams chord_params;
  chord_params.alpha = 0.9;
  chord_params.beta = 1.0;
  double worst_rise = 0.0, worst_ari_gap = 0.0;
  for (auto n : {"quadratic", "shannon_negentropy"}) {
    const auto f = make_builtin(n, 1);
    for (const auto& spec :
         {DivergenceSpec{"bregman", {}}, DivergenceSpec{"bregman_chord", chord_params}}) {
      ClusterConfig cfg;
      cfg.k = 2;
      cfg.divergence = spec;
      cfg.seed = o.seed;
      const auto res = kmeans(pts, f, cfg);
      const double ari = adjusted_rand_index(res.assignments, truth);
      worst_ari_gap = std::max(worst_ari_gap, 1.0 - ari);
      for (std::size_t i = 1; i < res.objective_trace.size(); ++i) {
        worst_rise = std::max(worst_rise, res.objective_trace[i] - res.objective_trace[i - 1]);
      }
      r.detail += std::string(r.detail.empty() ? "" : "; ") + n + "/" + spec.id + " ARI " +
                  fmt("%.6g", ari);
    }
  }
  ClusterConfig one;
  one.k = 1;
  one.seed = o.seed;
  const auto res = kmeans(pts, make_builtin("quadratic", 1), one);
  double mean = 0.0;
  for (const auto& p : pts) mean += p[0];
  mean /= static_cast<double>(pts.size());
  const double centre_dev = std::abs(res.centers[0][0] - mean);
  r.passed = worst_ari_gap == 0.0 && worst_rise <= 1e-8 && centre_dev <= 1e-6;
  r.worst = std::max({worst_ari_gap, worst_rise, centre_dev});
  r.detail += "; max objective rise " + fmt("%.3g", worst_rise) + "; k=1 |centre - mean| " +
              fmt("%.3g", centre_dev);
  return r;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

bool is_suite(std::string_view name) {
  return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& opts) {
  if (opts.trials < 1) raise(ErrorCode::kUsage, "--trials must be >= 1");
  if (name == "sandwich") return sandwich(opts);
  if (name == "swap_symmetry") return swap_symmetry(opts);
  if (name == "limit_bregman") return limit_bregman(opts);
  if (name == "limit_tangent") return limit_tangent(opts);
  if (name == "mean_value") return mean_value(opts);
  if (name == "dual_identity") return dual_identity(opts);
  if (name == "jensen") return jensen_suite(opts);
  if (name == "fdiv") return fdiv(opts);
  if (name == "gradient") return gradient(opts);
  if (name == "clustering") return clustering(opts);
  raise(ErrorCode::kUsage, "unknown suite '" + std::string(name) + "'");
}

}  // namespace chordiv::verify
