#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "chordiv/error.hpp"
#include "chordiv/generators.hpp"
#include "chordiv/numerics.hpp"
#include "support/sampling.hpp"

using namespace chordiv;
using testing_support::PointSampler;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected chordiv::Error";
  return ErrorCode::kUsage;
}

}  // namespace

TEST(MakeBuiltin, QuadraticEval) {
  EXPECT_DOUBLE_EQ(make_builtin("quadratic", 1).eval({3.0}), 9.0);
}

TEST(MakeBuiltin, ShannonAtOnes) {
  EXPECT_DOUBLE_EQ(make_builtin("shannon_negentropy", 2).eval({1.0, 1.0}), 0.0);
}

TEST(MakeBuiltin, BurgGradient) {
  const auto f = make_builtin("burg_negentropy", 1);
  EXPECT_DOUBLE_EQ(f.grad({2.0})[0], -0.5);
  EXPECT_NEAR(central_diff_grad(f, {2.0})[0], -0.5, 1e-8);
}

TEST(MakeBuiltin, Errors) {
  EXPECT_EQ(code_of([] { make_builtin("cubic", 1); }), ErrorCode::kUnsupportedGenerator);
  EXPECT_EQ(code_of([] { make_builtin("quadratic", 0); }), ErrorCode::kInvalidDimension);
}

TEST(MakeBuiltin, ConjugatesWhereKnown) {
  EXPECT_TRUE(make_builtin("quadratic", 2).has_conjugate());
  EXPECT_TRUE(make_builtin("shannon_negentropy", 2).has_conjugate());
  EXPECT_TRUE(make_builtin("log_sum_exp", 2).has_conjugate());
  EXPECT_FALSE(make_builtin("burg_negentropy", 2).has_conjugate());
  EXPECT_EQ(code_of([] { make_builtin("burg_negentropy", 1).conjugate(); }),
            ErrorCode::kUnsupportedGenerator);
  EXPECT_DOUBLE_EQ(make_builtin("quadratic", 1).conjugate().eval({2.0}), 1.0);
  EXPECT_DOUBLE_EQ(make_builtin("shannon_negentropy", 1).conjugate().eval({1.0}), 1.0);
}

TEST(Domain, StrictInteriorWithMargin) {
  const auto f = make_builtin("shannon_negentropy", 2);
  EXPECT_TRUE(f.contains({0.5, 2.0}));
  EXPECT_FALSE(f.contains({0.0, 1.0}));
  EXPECT_FALSE(f.contains({1e-13, 1.0}));
  EXPECT_FALSE(f.contains({-1.0, 1.0}));
  EXPECT_FALSE(f.contains({1.0}));
  EXPECT_EQ(code_of([&] { f.eval({-1.0, 1.0}); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([&] { f.eval({1.0}); }), ErrorCode::kShape);

  Domain simplex{DomainKind::kOpenSimplex};
  const double in[] = {0.2, 0.3};
  const double on_face[] = {0.5, 0.5};
  EXPECT_TRUE(simplex.contains(in));
  EXPECT_FALSE(simplex.contains(on_face));

  Domain shifted{DomainKind::kRealsWithOffset, 2.0};
  const double ok[] = {-1.5};
  const double bad[] = {-2.5};
  EXPECT_TRUE(shifted.contains(ok));
  EXPECT_FALSE(shifted.contains(bad));

  const double inf[] = {INFINITY};
  EXPECT_FALSE(Domain{}.contains(inf));
}

TEST(RestrictToLine, Examples) {
  EXPECT_DOUBLE_EQ(restrict_to_line(make_builtin("quadratic", 1), {0.0}, {1.0}).eval(0.25), 0.0625);
  EXPECT_NEAR(restrict_to_line(make_builtin("log_sum_exp", 2), {0.0, 0.0}, {1.0, 1.0}).eval(0.0),
              1.09861228866810969, 1e-15);
  EXPECT_NEAR(restrict_to_line(make_builtin("shannon_negentropy", 1), {0.2}, {0.8}).eval(1.0),
              -0.178514841051367805, 1e-15);
}

TEST(RestrictToLine, EndpointsAndErrors) {
  const auto f = make_builtin("log_sum_exp", 3);
  const ParamPoint a{0.1, -0.4, 2.0};
  const ParamPoint b{1.0, 0.5, -1.0};
  const auto g = restrict_to_line(f, a, b);
  EXPECT_EQ(g.eval(0.0), f.eval(a));
  EXPECT_EQ(g.eval(1.0), f.eval(b));
  EXPECT_EQ(code_of([&] { restrict_to_line(f, a, a); }), ErrorCode::kDegenerateRestriction);
  const auto s = make_builtin("shannon_negentropy", 1);
  EXPECT_EQ(code_of([&] { restrict_to_line(s, {-1.0}, {1.0}); }), ErrorCode::kDomain);
}

TEST(RestrictToLine, OutlivesItsInputs) {
  auto make = [] {
    auto f = make_builtin("quadratic", 2);
    ParamPoint a{0.0, 0.0};
    ParamPoint b{1.0, 2.0};
    return restrict_to_line(f, a, b);
  };
  const auto g = make();
  EXPECT_DOUBLE_EQ(g.eval(0.5), 0.25 + 1.0);
  EXPECT_DOUBLE_EQ(g.derivative(0.5), 2 * 0.5 * 1.0 + 2 * 1.0 * 2.0);
}

TEST(GeneratorProperties, MidpointStrictConvexity) {
  PointSampler rng(101);
  for (auto name : builtin_generator_names()) {
    for (std::size_t dim : {1u, 3u}) {
      const auto f = make_builtin(name, dim);
      for (int t = 0; t < 100; ++t) {
        const auto a = rng.point(f);
        const auto b = rng.point(f);
        const double mid = f.eval(interpolate(a, b, 0.5));
        EXPECT_LT(mid, 0.5 * (f.eval(a) + f.eval(b))) << name << " trial " << t;
      }
    }
  }
}

TEST(GeneratorProperties, LineRestrictionConvexInLambda) {
  PointSampler rng(202);
  for (auto name : builtin_generator_names()) {
    const auto f = make_builtin(name, 3);
    for (int t = 0; t < 50; ++t) {
      const auto g = restrict_to_line(f, rng.point(f), rng.point(f));
      const double l1 = rng.uniform(0.0, 1.0);
      const double l2 = rng.uniform(0.0, 1.0);
      if (std::abs(l1 - l2) < 1e-3) continue;
      EXPECT_LT(g.eval(0.5 * (l1 + l2)), 0.5 * (g.eval(l1) + g.eval(l2))) << name;
    }
  }
}

TEST(GeneratorProperties, GradientMatchesCentralDifferences) {
  PointSampler rng(303);
  for (auto name : builtin_generator_names()) {
    for (std::size_t dim : {1u, 3u}) {
      const auto f = make_builtin(name, dim);
      for (int t = 0; t < 100; ++t) {
        const auto x = rng.point(f);
        const auto g = f.grad(x);
        const auto fd = central_diff_grad(f, x, 1e-5);
        for (std::size_t i = 0; i < dim; ++i) {
          EXPECT_LE(std::abs(fd[i] - g[i]), 1e-6 * std::max(1.0, std::abs(g[i]))) << name;
        }
      }
    }
  }
}

TEST(LegendreConjugate, Examples) {
  const auto q = make_builtin("quadratic", 1);
  const Interval wide[] = {{-10.0, 10.0}};
  auto est = legendre_conjugate_numeric(q, {2.0}, wide);
  EXPECT_NEAR(est.value, 1.0, 1e-9);
  EXPECT_FALSE(est.at_boundary);

  const Interval unit[] = {{-1.0, 1.0}};
  EXPECT_NEAR(legendre_conjugate_numeric(q, {0.0}, unit).value, 0.0, 1e-12);

  const auto s = make_builtin("shannon_negentropy", 1);
  const Interval pos[] = {{0.001, 10.0}};
  EXPECT_NEAR(legendre_conjugate_numeric(s, {1.0}, pos).value, 1.0, 1e-9);
}

TEST(LegendreConjugate, BoundaryFlag) {
  const auto q = make_builtin("quadratic", 1);
  const Interval box[] = {{-1.0, 1.0}};
  // Unconstrained argmax is eta / 2 = 5, outside the box.
  const auto est = legendre_conjugate_numeric(q, {10.0}, box);
  EXPECT_TRUE(est.at_boundary);
  EXPECT_NEAR(est.argmax[0], 1.0, 1e-9);
  EXPECT_NEAR(est.value, 10.0 - 1.0, 1e-9);
}

TEST(LegendreConjugate, AgreesWithClosedForms) {
  PointSampler rng(404);
  struct Case {
    const char* name;
    std::size_t dim;
    Interval eta;
    Interval box;
  };
  const Case cases[] = {
      {"quadratic", 2, {-5.0, 5.0}, {-10.0, 10.0}},
      {"shannon_negentropy", 2, {-1.0, 2.0}, {1e-3, 10.0}},
      {"log_sum_exp", 2, {0.1, 0.4}, {-8.0, 8.0}},
  };
  for (const auto& c : cases) {
    const auto f = make_builtin(c.name, c.dim);
    const std::vector<Interval> box(c.dim, c.box);
    for (int t = 0; t < 25; ++t) {
      std::vector<double> eta(c.dim);
      for (double& v : eta) v = rng.uniform(c.eta.lo, c.eta.hi);
      const ParamPoint e(eta);
      const auto est = legendre_conjugate_numeric(f, e, box);
      ASSERT_FALSE(est.at_boundary) << c.name;
      EXPECT_NEAR(est.value, f.conjugate().eval(e), 1e-6) << c.name;
    }
  }
}
