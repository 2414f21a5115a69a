#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "chordiv/bregman.hpp"
#include "chordiv/error.hpp"
#include "chordiv/f_divergence.hpp"
#include "chordiv/generators.hpp"
#include "support/oracles.hpp"
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

const Generator kQuad = make_builtin("quadratic", 1);
const Generator kShannon = make_builtin("shannon_negentropy", 1);
const Generator kBurg = make_builtin("burg_negentropy", 1);

oracle::Fn fn_of(const Generator& f) {
  return [f](const std::vector<double>& x) { return f.eval(ParamPoint(x)); };
}
oracle::Grad grad_of(const Generator& f) {
  return [f](const std::vector<double>& x) { return f.grad(ParamPoint(x)); };
}

std::vector<Generator> all_generators(std::size_t dim) {
  std::vector<Generator> out;
  for (auto name : builtin_generator_names()) out.push_back(make_builtin(name, dim));
  return out;
}

}  // namespace

TEST(Interpolate, Examples) {
  EXPECT_EQ(interpolate({0.0}, {1.0}, 0.25), (ParamPoint{0.25}));
  EXPECT_EQ(interpolate({0.3, -2.0}, {0.3, -2.0}, 0.7), (ParamPoint{0.3, -2.0}));
  EXPECT_EQ(interpolate({1.0, 3.0}, {3.0, 1.0}, 0.5), (ParamPoint{2.0, 2.0}));
  EXPECT_EQ(code_of([] { interpolate({1.0}, {1.0, 2.0}, 0.5); }), ErrorCode::kShape);
}

TEST(Bregman, Examples) {
  EXPECT_DOUBLE_EQ(bregman(kQuad, {0.0}, {1.0}), 1.0);
  EXPECT_EQ(bregman(kShannon, {0.4}, {0.4}), 0.0);
  EXPECT_NEAR(bregman(kBurg, {2.0}, {1.0}), 0.306852819440054691, 1e-15);
}

TEST(Bregman, Errors) {
  const Generator no_grad("flat", 1, Domain{}, [](std::span<const double> x) { return x[0] * x[0]; });
  EXPECT_EQ(code_of([&] { bregman(no_grad, {0.0}, {1.0}); }), ErrorCode::kGradientRequired);
  EXPECT_EQ(code_of([] { bregman(kShannon, {-1.0}, {1.0}); }), ErrorCode::kDomain);
  // The chord route needs no gradient.
  EXPECT_NEAR(bregman_chord_approx(no_grad, {0.0}, {1.0}, 1e-3), 1.0, 2e-3);
}

TEST(BregmanDual, Examples) {
  EXPECT_DOUBLE_EQ(bregman_dual(kQuad, {0.0}, {1.0}), 1.0);
  EXPECT_EQ(bregman_dual(kQuad, {2.0}, {2.0}), 0.0);
  const ParamPoint a{1.0};
  const ParamPoint b{2.0};
  const auto& conj = kShannon.conjugate();
  const double via_conjugate =
      bregman(conj, ParamPoint(kShannon.grad(a)), ParamPoint(kShannon.grad(b)));
  EXPECT_NEAR(bregman_dual(kShannon, a, b), via_conjugate, 1e-9);
}

TEST(BregmanDual, ConjugateIdentityOnRandomPairs) {
  PointSampler rng(11);
  for (auto name : {"quadratic", "shannon_negentropy", "log_sum_exp"}) {
    const auto f = make_builtin(name, 3);
    for (int t = 0; t < 100; ++t) {
      const auto a = rng.point(f);
      const auto b = rng.point(f);
      const double lhs = bregman(f, b, a);
      const double rhs = bregman(f.conjugate(), ParamPoint(f.grad(a)), ParamPoint(f.grad(b)));
      EXPECT_NEAR(lhs, rhs, 1e-9) << name;
    }
  }
}

TEST(ChordParams, Validation) {
  EXPECT_EQ(code_of([] { ChordParams(0.5, 0.5); }), ErrorCode::kInvalidChordParams);
  EXPECT_EQ(code_of([] { ChordParams(0.0, 0.5); }), ErrorCode::kInvalidChordParams);
  EXPECT_EQ(code_of([] { ChordParams(0.5, 1.01); }), ErrorCode::kInvalidChordParams);
  EXPECT_EQ(code_of([] { ChordParams(NAN, 0.5); }), ErrorCode::kInvalidChordParams);
  EXPECT_NO_THROW(ChordParams(0.999, 1.0));
}

TEST(BregmanChord, GeometricOracle) {
  const double expected = oracle::chord_gap_1d([](double x) { return x * x; }, 0.0, 1.0, 0.25, 0.75);
  EXPECT_DOUBLE_EQ(expected, 0.1875);
  EXPECT_DOUBLE_EQ(bregman_chord(kQuad, {0.0}, {1.0}, ChordParams(0.25, 0.75)), 0.1875);
}

TEST(BregmanChord, Examples) {
  EXPECT_EQ(bregman_chord(kShannon, {0.7}, {0.7}, ChordParams(0.2, 0.9)), 0.0);
  const double near_one = bregman_chord(kQuad, {0.0}, {1.0}, ChordParams(0.999, 1.0));
  EXPECT_NEAR(near_one, oracle::chord_gap_1d([](double x) { return x * x; }, 0, 1, 0.999, 1.0),
              1e-12);
  EXPECT_NEAR(near_one, 1.0, 2e-3);
}

TEST(BregmanChord, MatchesOracleOnRandomUnivariateInstances) {
  PointSampler rng(12);
  for (const auto& f : all_generators(1)) {
    const auto scalar = [&f](double x) { return f.eval({x}); };
    for (int t = 0; t < 200; ++t) {
      const auto a = rng.point(f);
      const auto b = rng.point(f);
      const auto [al, be] = rng.chord_pair();
      const double want = oracle::chord_gap_1d(scalar, a[0], b[0], al, be);
      const double got = bregman_chord(f, a, b, ChordParams(al, be));
      EXPECT_NEAR(got, want, 1e-9 * std::max(1.0, std::abs(want))) << f.name();
    }
  }
}

TEST(BregmanChord, Sandwich) {
  PointSampler rng(13);
  for (std::size_t dim : {1u, 3u}) {
    for (const auto& f : all_generators(dim)) {
      for (int t = 0; t < 200; ++t) {
        const auto a = rng.point(f);
        const auto b = rng.point(f);
        const auto [al, be] = rng.chord_pair();
        const double c = bregman_chord(f, a, b, ChordParams(al, be));
        EXPECT_GE(c, 0.0) << f.name();
        EXPECT_LE(c, bregman(f, a, b) + 1e-12) << f.name();
      }
    }
  }
}

TEST(BregmanChord, SwapSymmetry) {
  PointSampler rng(14);
  for (const auto& f : all_generators(3)) {
    for (int t = 0; t < 200; ++t) {
      const auto a = rng.point(f);
      const auto b = rng.point(f);
      const auto [al, be] = rng.chord_pair();
      EXPECT_NEAR(bregman_chord(f, a, b, ChordParams(al, be)),
                  bregman_chord(f, a, b, ChordParams(be, al)), 1e-12);
    }
  }
}

TEST(BregmanChord, IdentityOfIndiscernibles) {
  PointSampler rng(15);
  for (const auto& f : all_generators(3)) {
    for (int t = 0; t < 100; ++t) {
      const auto a = rng.point(f);
      const auto b = rng.point(f);
      const auto [al, be] = rng.chord_pair();
      EXPECT_EQ(bregman_chord(f, a, a, ChordParams(al, be)), 0.0);
      EXPECT_GT(bregman_chord(f, a, b, ChordParams(al, be)), 0.0) << f.name();
    }
  }
}

TEST(BregmanChord, NearCoincidentPointsGiveExactZero) {
  EXPECT_EQ(bregman_chord(kQuad, {1.0}, {1.0 + 1e-15}, ChordParams(0.2, 0.4)), 0.0);
  EXPECT_EQ(bregman(kQuad, {1.0}, {1.0 + 1e-15}), 0.0);
}

TEST(BregmanChord, InputsOutsideDomain) {
  EXPECT_EQ(code_of([] { bregman_chord(kBurg, {-0.5}, {1.0}, ChordParams(0.2, 0.4)); }),
            ErrorCode::kDomain);
}

TEST(BregmanChord, LimitToOrdinaryBregmanIsLinearInEpsilon) {
  PointSampler rng(16);
  for (const auto& f : all_generators(3)) {
    const auto a = rng.point(f);
    const auto b = rng.point(f);
    const double exact = bregman(f, a, b);
    double prev = INFINITY;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const double err = std::abs(bregman_chord_approx(f, a, b, eps) - exact);
      EXPECT_LT(err, prev) << f.name();
      if (std::isfinite(prev)) {
        EXPECT_GE(prev / err, 5.0) << f.name();
        EXPECT_LE(prev / err, 20.0) << f.name();
      }
      prev = err;
    }
  }
}

TEST(BregmanChord, LimitToTangentIsLinearInEpsilon) {
  PointSampler rng(17);
  for (const auto& f : all_generators(3)) {
    const auto a = rng.point(f);
    const auto b = rng.point(f);
    const double alpha = 0.4;
    const double tangent = bregman_tangent(f, a, b, alpha);
    double prev = INFINITY;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const double err = std::abs(bregman_chord(f, a, b, ChordParams(alpha, alpha + eps)) - tangent);
      if (std::isfinite(prev)) {
        EXPECT_GE(prev / err, 5.0) << f.name();
        EXPECT_LE(prev / err, 20.0) << f.name();
      }
      prev = err;
    }
  }
}

TEST(BregmanChord, ItakuraSaitoScaleInvariance) {
  PointSampler rng(18);
  const auto f = make_builtin("burg_negentropy", 3);
  for (int t = 0; t < 100; ++t) {
    const auto a = rng.point(f);
    const auto b = rng.point(f);
    const double s = rng.uniform(0.1, 10.0);
    const auto scale = [s](const ParamPoint& p) {
      auto v = p.vec();
      for (double& x : v) x *= s;
      return ParamPoint(v);
    };
    EXPECT_NEAR(bregman(f, scale(a), scale(b)), bregman(f, a, b), 1e-12);
    const auto [al, be] = rng.chord_pair();
    EXPECT_NEAR(bregman_chord(f, scale(a), scale(b), ChordParams(al, be)),
                bregman_chord(f, a, b, ChordParams(al, be)), 1e-12);
  }
}

TEST(BregmanChord, SeparableGeneratorsDecomposePerCoordinate) {
  PointSampler rng(19);
  for (auto name : {"quadratic", "shannon_negentropy", "burg_negentropy"}) {
    const auto f3 = make_builtin(name, 3);
    const auto f1 = make_builtin(name, 1);
    for (int t = 0; t < 50; ++t) {
      const auto a = rng.point(f3);
      const auto b = rng.point(f3);
      const auto [al, be] = rng.chord_pair();
      const ChordParams cp(al, be);
      double sum = 0.0;
      for (std::size_t i = 0; i < 3; ++i) sum += bregman_chord(f1, {a[i]}, {b[i]}, cp);
      EXPECT_NEAR(bregman_chord(f3, a, b, cp), sum, 1e-11 * std::max(1.0, sum)) << name;
    }
  }
}

TEST(BregmanTangent, Examples) {
  EXPECT_DOUBLE_EQ(bregman_tangent(kQuad, {0.0}, {1.0}, 0.5), 0.25);
  EXPECT_NEAR(bregman_tangent(kQuad, {0.0}, {1.0}, 1e-4), 0.0, 1e-3);
  PointSampler rng(20);
  for (const auto& f : all_generators(3)) {
    const auto a = rng.point(f);
    const auto b = rng.point(f);
    EXPECT_NEAR(bregman_tangent(f, a, b, 1.0), bregman(f, a, b),
                1e-12 * std::max(1.0, bregman(f, a, b)));
  }
}

TEST(BregmanTangent, MatchesGradientFormAndIsBounded) {
  PointSampler rng(21);
  for (const auto& f : all_generators(3)) {
    for (int t = 0; t < 100; ++t) {
      const auto a = rng.point(f);
      const auto b = rng.point(f);
      const double alpha = 1.0 - rng.uniform(0.0, 1.0);
      const double got = bregman_tangent(f, a, b, alpha);
      EXPECT_NEAR(got, oracle::tangent_gap(fn_of(f), grad_of(f), a.vec(), b.vec(), alpha),
                  1e-10 * std::max(1.0, std::abs(got)));
      EXPECT_GE(got, 0.0);
      EXPECT_LE(got, bregman(f, a, b) + 1e-12);
    }
  }
}

TEST(BregmanTangent, Errors) {
  EXPECT_EQ(code_of([] { bregman_tangent(kQuad, {0.0}, {1.0}, 0.0); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { bregman_tangent(kQuad, {0.0}, {1.0}, 1.5); }), ErrorCode::kInvalidParameter);
}

TEST(ChordSlope, Examples) {
  EXPECT_DOUBLE_EQ(chord_slope(kQuad, {0.0}, {1.0}, ChordParams(0.25, 0.75)), 1.0);
  EXPECT_EQ(chord_slope(kShannon, {0.2}, {0.9}, ChordParams(0.1, 0.6)),
            chord_slope(kShannon, {0.2}, {0.9}, ChordParams(0.6, 0.1)));
  const auto g = restrict_to_line(kShannon, {0.2}, {0.8});
  const double v = chord_slope(kShannon, {0.2}, {0.8}, ChordParams(0.3, 0.7));
  // G' is increasing, so its extremes on [0.3, 0.7] sit at the ends.
  EXPECT_GT(v, g.derivative(0.3));
  EXPECT_LT(v, g.derivative(0.7));
}

TEST(MeanValueWitness, Examples) {
  EXPECT_NEAR(mean_value_witness(kQuad, {0.0}, {1.0}, ChordParams(0.25, 0.75)), 0.5, 1e-14);
  EXPECT_EQ(mean_value_witness(kShannon, {0.2}, {0.8}, ChordParams(0.3, 0.7)),
            mean_value_witness(kShannon, {0.2}, {0.8}, ChordParams(0.7, 0.3)));

  const auto g = restrict_to_line(kShannon, {0.2}, {0.8});
  const double slope = chord_slope(kShannon, {0.2}, {0.8}, ChordParams(0.3, 0.7));
  const double w = mean_value_witness(kShannon, {0.2}, {0.8}, ChordParams(0.3, 0.7));
  EXPECT_GT(w, 0.3);
  EXPECT_LT(w, 0.7);
  EXPECT_NEAR(g.derivative(w), slope, 1e-10);
  const auto residual = [&](double l) {
    return (1.0 + std::log(0.2 + 0.6 * l)) * 0.6 - slope;
  };
  EXPECT_NEAR(w, oracle::bisect(residual, 0.3, 0.7, 200), 1e-12);
}

TEST(MeanValueWitness, SlopeSubstitutedGapEqualsChord) {
  PointSampler rng(22);
  for (const auto& f : all_generators(1)) {
    for (int t = 0; t < 100; ++t) {
      const auto a = rng.point(f);
      const auto b = rng.point(f);
      const auto [al, be] = rng.chord_pair();
      const ChordParams cp(al, be);
      const double w = mean_value_witness(f, a, b, cp);
      const auto g = restrict_to_line(f, a, b);
      const double lo = cp.lower();
      const double gap = g.eval(0.0) - g.eval(lo) + lo * g.derivative(w);
      EXPECT_NEAR(gap, bregman_chord(f, a, b, cp), 1e-8) << f.name();
    }
  }
}

TEST(MeanValueWitness, TangentAtWitnessLiesBelowChord) {
  // The tangent at the witness is parallel to the chord and, by convexity,
  // strictly below it, so its gap at lambda = 0 is strictly larger.
  const ChordParams cp(0.25, 0.75);
  const auto g = restrict_to_line(kQuad, {0.0}, {1.0});
  const double w = mean_value_witness(kQuad, {0.0}, {1.0}, cp);
  EXPECT_NEAR(tangent_gap(g, w), 0.25, 1e-12);
  EXPECT_DOUBLE_EQ(chord_gap(g, cp), 0.1875);

  PointSampler rng(23);
  for (const auto& f : all_generators(1)) {
    for (int t = 0; t < 50; ++t) {
      const auto a = rng.point(f);
      const auto b = rng.point(f);
      const auto [al, be] = rng.chord_pair();
      const ChordParams p(al, be);
      const auto line = restrict_to_line(f, a, b);
      EXPECT_GT(tangent_gap(line, mean_value_witness(f, a, b, p)), chord_gap(line, p));
    }
  }
}

TEST(BregmanChordApprox, Examples) {
  EXPECT_NEAR(bregman_chord_approx(kQuad, {0.0}, {1.0}, 1e-3), 1.0, 2e-3);
  EXPECT_EQ(bregman_chord_approx(kShannon, {0.3}, {0.3}, 0.1), 0.0);
  const double exact = bregman(kShannon, {0.2}, {0.8});
  EXPECT_NEAR(exact, 0.322741127776021876, 1e-15);
  const double e2 = std::abs(bregman_chord_approx(kShannon, {0.2}, {0.8}, 1e-2) - exact);
  const double e3 = std::abs(bregman_chord_approx(kShannon, {0.2}, {0.8}, 1e-3) - exact);
  EXPECT_GE(e2 / e3, 5.0);
  EXPECT_LE(e2 / e3, 20.0);
  EXPECT_EQ(code_of([] { bregman_chord_approx(kQuad, {0.0}, {1.0}, 1.0); }),
            ErrorCode::kInvalidParameter);
}

TEST(Biskew, Examples) {
  const Divergence d = [](const ParamPoint& a, const ParamPoint& b) { return bregman(kQuad, a, b); };
  EXPECT_DOUBLE_EQ(biskew(d, {0.0}, {1.0}, SkewPair(0.0, 1.0)), 1.0);
  EXPECT_EQ(biskew(d, {0.4}, {0.4}, SkewPair(0.2, 0.7)), 0.0);
  EXPECT_DOUBLE_EQ(biskew(d, {0.0}, {1.0}, SkewPair(0.25, 0.75)), 0.25);
}

TEST(Biskew, SkewPairValidation) {
  EXPECT_EQ(code_of([] { SkewPair(0.3, 0.3); }), ErrorCode::kInvalidSkew);
  EXPECT_EQ(code_of([] { SkewPair(-0.5, 0.3); }), ErrorCode::kInvalidSkew);
  EXPECT_NO_THROW(SkewPair(-0.5, 1.5, SkewRange::kUnbounded));
}

TEST(Biskew, WorksWithFDivergences) {
  const auto f = make_f_generator("kl");
  const Divergence d = [f](const ParamPoint& a, const ParamPoint& b) {
    return f_div(f, DiscreteDist(a.vec()), DiscreteDist(b.vec()));
  };
  const ParamPoint p{0.5, 0.5};
  const ParamPoint q{0.25, 0.75};
  EXPECT_NEAR(biskew(d, p, q, SkewPair(0.0, 1.0)), 0.143841036225890464, 1e-15);
  EXPECT_GT(biskew(d, p, q, SkewPair(0.1, 0.8)), 0.0);
  // Unbounded skews can leave the simplex; the inner divergence reports it.
  EXPECT_EQ(code_of([&] { biskew(d, p, q, SkewPair(0.0, 3.0, SkewRange::kUnbounded)); }),
            ErrorCode::kDomain);
}
