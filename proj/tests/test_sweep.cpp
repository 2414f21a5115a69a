#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "chordiv/bregman.hpp"
#include "chordiv/error.hpp"
#include "chordiv/sweep.hpp"

using namespace chordiv;

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

const DivergenceSpec kChord{"bregman_chord", {}};

}  // namespace

TEST(SweepGrid, UniformAppendsBetaOne) {
  const auto g = SweepGrid::uniform(2);
  EXPECT_EQ(g.alpha_values, (std::vector<double>{1.0 / 3, 2.0 / 3}));
  EXPECT_EQ(g.beta_values, (std::vector<double>{1.0 / 3, 2.0 / 3, 1.0}));
  EXPECT_EQ(SweepGrid::uniform(3, false).beta_values.size(), 3u);
}

TEST(SweepGrid, Validation) {
  EXPECT_EQ(code_of([] { SweepGrid::uniform(0); }), ErrorCode::kInvalidParameter);
  SweepGrid bad{{0.5, 0.2}, {0.3}, true};
  EXPECT_EQ(code_of([&] { bad.validate(); }), ErrorCode::kInvalidParameter);
  SweepGrid zero{{0.0}, {0.3}, true};
  EXPECT_EQ(code_of([&] { zero.validate(); }), ErrorCode::kInvalidParameter);
}

TEST(Sweep, GridTwoOnQuadratic) {
  const auto f = make_builtin("quadratic", 1);
  const auto rows = sweep(f, {0.0}, {1.0}, SweepGrid::uniform(2), kChord, 1);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].alpha, 1.0 / 3);
  EXPECT_EQ(rows[0].beta, 2.0 / 3);
  EXPECT_EQ(rows[1].beta, 1.0);
  EXPECT_EQ(rows[2].alpha, 2.0 / 3);
  EXPECT_EQ(rows[2].beta, 1.0 / 3);
  EXPECT_NEAR(rows[0].value, rows[2].value, 1e-15);
  // Quadratic 0 -> 1: the chord gap is alpha * beta.
  for (const auto& r : rows) EXPECT_NEAR(r.value, r.alpha * r.beta, 1e-15);
}

TEST(Sweep, CoincidentPointsGiveZeros) {
  const auto f = make_builtin("shannon_negentropy", 2);
  const auto rows = sweep(f, {0.3, 0.4}, {0.3, 0.4}, SweepGrid::uniform(7), kChord);
  EXPECT_EQ(rows.size(), 7u * 8u - 7u);
  for (const auto& r : rows) EXPECT_EQ(r.value, 0.0);
}

TEST(Sweep, FiftyGridStaysBelowBregman) {
  const auto f = make_builtin("shannon_negentropy", 1);
  const auto rows = sweep(f, {0.2}, {0.8}, SweepGrid::uniform(50), kChord);
  EXPECT_EQ(rows.size(), 50u * 51u - 50u);
  const double b = bregman(f, {0.2}, {0.8});
  for (const auto& r : rows) {
    EXPECT_GE(r.value, 0.0);
    EXPECT_LE(r.value, b);
  }
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  const auto f = make_builtin("log_sum_exp", 3);
  const ParamPoint a{-1.0, 0.5, 2.0};
  const ParamPoint b{1.5, -0.5, 0.0};
  const auto one = sweep(f, a, b, SweepGrid::uniform(20), kChord, 1);
  const auto four = sweep(f, a, b, SweepGrid::uniform(20), kChord, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].alpha, four[i].alpha);
    EXPECT_EQ(one[i].beta, four[i].beta);
    EXPECT_EQ(one[i].value, four[i].value);
  }
}

TEST(Sweep, BiskewCellsDriveGammaAndDelta) {
  const auto f = make_builtin("quadratic", 1);
  const auto rows = sweep(f, {0.0}, {2.0}, SweepGrid::uniform(3), {"biskew:bregman", {}}, 2);
  for (const auto& r : rows) {
    const double d = 2.0 * (r.alpha - r.beta);
    EXPECT_NEAR(r.value, d * d, 1e-14);
  }
}

TEST(Sweep, Errors) {
  const auto f = make_builtin("quadratic", 1);
  EXPECT_EQ(code_of([&] { sweep(f, {0.0}, {1.0}, SweepGrid::uniform(2), {"nope", {}}); }),
            ErrorCode::kUnknownDivergence);
  EXPECT_EQ(code_of([&] {
              sweep(f, {0.0}, {1.0}, SweepGrid{{0.5}, {0.5}, false}, kChord, 2);
            }),
            ErrorCode::kInvalidChordParams);
}
