#include <gtest/gtest.h>

#include <cmath>

#include "sw1pers/scoring.hpp"
#include "sw1pers/synth.hpp"

using namespace sw1pers;

namespace {

SampledSignal cosine50() { return synth(Shape::Cosine, 0.0, 0.0, 50, 0); }

SampledSignal affine(const SampledSignal& s, double c, double d) {
  std::vector<double> v(s.values().begin(), s.values().end());
  for (double& x : v) x = c * x + d;
  return s.with_values(v);
}

}  // namespace

TEST(Score, PureCosine) {
  const auto s = score(cosine50(), ScoreConfig{});
  EXPECT_GE(s.value, 0.9);
  EXPECT_EQ(s.best_L, 2);
  ASSERT_EQ(s.periods.size(), 3u);

  // Oracle: persistence of the exact embedding of cos(2t) on the same base points.
  const auto p = resonant_params(2, 10);
  const auto T = window_starts(p, 200, false);
  const auto raw = sliding_window([](double t) { return std::cos(2 * t); }, p, T);
  const auto exact = cloud_persistence(normalize(center(raw)), FieldPrime(11), 2.0).h1;
  const auto best = s.best();
  EXPECT_NEAR(best.death, std::sqrt(3.0), 0.01);
  // Consecutive windows advance by about 4pi/200 around the circle.
  EXPECT_LE(best.birth, 0.15);
  EXPECT_NEAR(s.value, max_persistence(exact) / std::sqrt(3.0), 0.02);
}

TEST(Score, ConstantIsZero) {
  const auto s = score(synth(Shape::Constant, 0.0, 0.0, 50, 0), ScoreConfig{});
  EXPECT_EQ(s.value, 0.0);
  for (const auto& p : s.periods) {
    EXPECT_TRUE(p.degenerate);
    EXPECT_FALSE(p.note.empty());
  }
}

TEST(Score, LinearIsLow) {
  for (double phase : {0.0, 1.0, 2.5}) EXPECT_LT(score(synth(Shape::Linear, phase, 0.0, 50, 0), ScoreConfig{}).value, 0.15);
}

TEST(Score, TooShort) {
  try {
    score(SampledSignal({0, 1, 2}, {1, 0, 1}), ScoreConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SignalTooShort);
  }
}

TEST(Score, AmplitudeInvariance) {
  const auto s = synth(Shape::Cosine, 0.4, 0.3, 50, 12);
  for (bool denoise : {false, true}) {
    ScoreConfig c;
    c.denoise = denoise;
    const double base = score(s, c).value;
    for (auto [a, b] : {std::pair{-3.0, 7.0}, {0.01, -2.0}, {250.0, 1e3}})
      EXPECT_NEAR(score(affine(s, a, b), c).value, base, 1e-9) << denoise << " " << a << " " << b;
  }
}

TEST(Score, BoundedAndDeterministic) {
  for (Shape sh : kAllShapes) {
    const auto sig = synth(sh, 0.3, 0.25, 50, 4);
    ScoreConfig c;
    const auto a = score(sig, c), b = score(sig, c, 3);
    EXPECT_GE(a.value, 0.0);
    EXPECT_LE(a.value, 2.0 / std::sqrt(3.0));
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.best_L, b.best_L);
  }
}

TEST(Score, ConfigValidation) {
  ScoreConfig c;
  c.field = 7;  // not above N = 10
  EXPECT_THROW(c.validate(), Error);
  EXPECT_NO_THROW(c.validate(false));
  c = {};
  c.field = 12;
  EXPECT_THROW(c.validate(false), Error);
  c = {};
  c.periods.clear();
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.cloud_size = 41;
  EXPECT_THROW(c.validate(), Error);
  c.cloud_size = 42;
  EXPECT_NO_THROW(c.validate());
}

TEST(Score, PeriodicWindowsOnG1) {
  // g1 sampled on a closed grid; with wrapping windows the pipeline reproduces
  // the analytic diagram over F_3.
  std::vector<double> t = linspace(0, kTwoPi, 401);
  const auto sig = sample([](double x) { return 0.6 * std::cos(x) + 0.8 * std::cos(2 * x); }, t);
  ScoreConfig c;
  c.N = 2;
  c.field = 3;
  c.periods = {1};
  c.cloud_size = 151;
  c.denoise = false;
  c.periodic = true;
  const auto s = score(sig, c);
  EXPECT_GT(s.best().death, std::sqrt(3.0) * 0.8);
}

TEST(Rank, Ordering) {
  std::vector<SampledSignal> sigs{cosine50(), synth(Shape::Cosine, 0.0, 0.75, 50, 3),
                                  synth(Shape::Constant, 0.0, 0.0, 50, 0)};
  const auto r = rank(sigs, ScoreConfig{});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r.front().index, 0u);
  EXPECT_EQ(r.back().index, 2u);
  for (std::size_t i = 1; i < r.size(); ++i) EXPECT_GE(r[i - 1].score.value, r[i].score.value);
}

TEST(Rank, SingletonTiesAndEmpty) {
  const auto one = rank({cosine50()}, ScoreConfig{});
  ASSERT_EQ(one.size(), 1u);
  const auto two = rank({cosine50(), cosine50()}, ScoreConfig{});
  EXPECT_EQ(two[0].index, 0u);
  EXPECT_EQ(two[1].index, 1u);
  EXPECT_THROW(rank({}, ScoreConfig{}), Error);
}
