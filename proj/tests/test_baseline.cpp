#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "sw1pers/baseline.hpp"
#include "sw1pers/roc.hpp"
#include "sw1pers/synth.hpp"

using namespace sw1pers;

namespace {

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (double f = lo; f <= hi + 1e-12; f += step) g.push_back(f);
  return g;
}

std::size_t argmax(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

TEST(LombScargle, PeakOfPureTone) {
  const auto s = synth(Shape::Cosine, 0.0, 0.0, 50, 0);
  const double step = 0.002;
  const auto f = grid(0.02, 1.5, step);
  const auto p = lomb_scargle(s, f);
  const double peak = f[argmax(p)];
  EXPECT_NEAR(peak, 2 / kTwoPi, step);

  // Oracle: direct DFT of the same samples; its peak bin sits at the nearest
  // resolvable frequency to the tone.
  const std::size_t n = s.size();
  const double dt = s.times()[1] - s.times()[0];
  std::size_t best_bin = 0;
  double best_mag = 0;
  for (std::size_t k = 1; k < n / 2; ++k) {
    std::complex<double> acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += s.values()[j] * std::polar(1.0, -kTwoPi * k * j / n);
    if (std::abs(acc) > best_mag) best_mag = std::abs(acc), best_bin = k;
  }
  const double bin_width = 1.0 / (n * dt);
  EXPECT_NEAR(peak, best_bin * bin_width, bin_width);
}

TEST(LombScargle, ConstantHasZeroPower) {
  const auto p = lomb_scargle(synth(Shape::Constant, 0.0, 0.0, 50, 0), grid(0.1, 3, 0.1));
  for (double x : p) EXPECT_EQ(x, 0.0);
}

TEST(LombScargle, WhiteNoiseWellBelowTone) {
  const auto f = default_frequency_grid(synth(Shape::Cosine, 0.0, 0.0, 50, 0));
  const auto tone = lomb_scargle(synth(Shape::Cosine, 0.0, 0.0, 50, 0), f);
  const double peak = *std::max_element(tone.begin(), tone.end());
  auto white_max = [&](std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> noise(50);
    for (double& x : noise) x = rng.gaussian();
    const auto w = lomb_scargle(SampledSignal(linspace(0, kTwoPi, 50), noise), f);
    return *std::max_element(w.begin(), w.end());
  };
  EXPECT_GE(peak, 5 * white_max(1));
  // The white-noise maximum is a random variable; its median must sit well
  // below a fifth of the tone.
  std::vector<double> maxima;
  for (std::uint64_t seed = 100; seed < 151; ++seed) maxima.push_back(white_max(seed));
  std::nth_element(maxima.begin(), maxima.begin() + 25, maxima.end());
  EXPECT_GE(peak, 5 * maxima[25]);
}

TEST(LombScargle, InvariantToOffsetAndScale) {
  const auto s = synth(Shape::PeakedCosine, 0.7, 0.3, 50, 3);
  std::vector<double> v(s.values().begin(), s.values().end());
  for (double& x : v) x = -4.5 * x + 12.0;
  const auto f = grid(0.05, 4, 0.05);
  const auto a = lomb_scargle(s, f), b = lomb_scargle(s.with_values(v), f);
  for (std::size_t k = 0; k < f.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-9);
}

TEST(LombScargle, RejectsBadInput) {
  EXPECT_THROW(lomb_scargle(SampledSignal({0, 1}, {0, 1}), {0.1}), Error);
  EXPECT_THROW(lomb_scargle(synth(Shape::Cosine, 0, 0, 10, 0), {0.0}), Error);
}

TEST(LsScore, Ordering) {
  const double pure = ls_score(synth(Shape::Cosine, 0.0, 0.0, 50, 0));
  const double noisy = ls_score(synth(Shape::Cosine, 0.0, 0.25, 50, 1));
  const double flat = ls_score(synth(Shape::Constant, 0.0, 0.0, 50, 0));
  EXPECT_GT(pure, 50 / 4.0);
  EXPECT_LT(pure, 50.0);
  EXPECT_LT(noisy, pure);
  EXPECT_GT(noisy, flat);
  EXPECT_EQ(flat, 0.0);
}

TEST(Roc, PerfectAndChance) {
  EXPECT_DOUBLE_EQ(auc({0.9, 0.8, 0.3, 0.1}, {true, true, false, false}), 1.0);
  EXPECT_DOUBLE_EQ(auc({0.5, 0.5, 0.5, 0.5}, {true, false, true, false}), 0.5);
  EXPECT_DOUBLE_EQ(auc({0.1, 0.2, 0.8, 0.9}, {true, true, false, false}), 0.0);
}

TEST(Roc, TiesAndCurveShape) {
  // one positive tied with one negative: half credit for that pair
  const auto c = roc_curve({0.9, 0.5, 0.5, 0.1}, {true, true, false, false});
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.front().fpr, 0.0);
  EXPECT_EQ(c.back().tpr, 1.0);
  EXPECT_EQ(c.back().fpr, 1.0);
  EXPECT_DOUBLE_EQ(auc(c), 0.875);
  // equals the Mann-Whitney statistic with ties counted as 1/2
}

TEST(Roc, MissingLabels) {
  try {
    auc({0.1, 0.2}, {true, true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingLabels);
  }
}
