#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sw1pers/denoise.hpp"

using namespace sw1pers;

namespace {

PointCloud unit_rows(std::vector<std::vector<double>> rows) {
  for (auto& r : rows) {
    double s = 0;
    for (double x : r) s += x * x;
    for (double& x : r) x /= std::sqrt(s);
  }
  return PointCloud::from_rows(rows);
}

PointCloud random_sphere(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
  for (auto& r : rows)
    for (double& x : r) x = g(rng);
  return unit_rows(rows);
}

}  // namespace

TEST(MeanShift, IdenticalPointsUnchanged) {
  const auto X = unit_rows({{1, 2, 2}, {1, 2, 2}, {1, 2, 2}});
  const auto Y = mean_shift(X).cloud;
  for (std::size_t k = 0; k < X.coordinates().size(); ++k) EXPECT_NEAR(Y.coordinates()[k], X.coordinates()[k], 1e-15);
}

TEST(MeanShift, SingletonNeighborhoodsAreIdentity) {
  const auto X = random_sphere(25, 4, 1);
  const auto Y = mean_shift(X, 1e-9).cloud;
  for (std::size_t k = 0; k < X.coordinates().size(); ++k) EXPECT_NEAR(Y.coordinates()[k], X.coordinates()[k], 1e-15);
}

TEST(MeanShift, AntipodalClustersContract) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g(0, 0.05);
  std::vector<std::vector<double>> rows;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < 20; ++i) rows.push_back({(c ? -1.0 : 1.0) + g(rng), g(rng), g(rng)});
  const auto X = unit_rows(rows);
  const auto Y = mean_shift(X, 0.5).cloud;
  auto spread = [](const PointCloud& P, std::size_t lo) {
    double s = 0;
    for (std::size_t i = lo; i < lo + 20; ++i)
      for (std::size_t j = lo; j < lo + 20; ++j) s = std::max(s, distance(P.point(i), P.point(j)));
    return s;
  };
  auto gap = [](const PointCloud& P) {
    double s = 1e9;
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = 20; j < 40; ++j) s = std::min(s, distance(P.point(i), P.point(j)));
    return s;
  };
  EXPECT_LT(spread(Y, 0), spread(X, 0));
  EXPECT_LT(spread(Y, 20), spread(X, 20));
  EXPECT_GE(gap(Y), gap(X) - 1e-12);
}

TEST(MeanShift, LargeEpsilonGivesGlobalMean) {
  const auto X = random_sphere(30, 5, 2);
  const auto Y = mean_shift(X, 2.5).cloud;
  std::vector<double> mean(5, 0.0);
  for (std::size_t i = 0; i < X.size(); ++i)
    for (int m = 0; m < 5; ++m) mean[m] += X.point(i)[m];
  const double len = norm(mean);
  for (std::size_t i = 0; i < Y.size(); ++i)
    for (int m = 0; m < 5; ++m) EXPECT_NEAR(Y.point(i)[m], mean[m] / len, 1e-12);
}

TEST(MeanShift, UnitNormOutputAndOrderIndependence) {
  const auto X = random_sphere(40, 6, 3);
  const auto Y = mean_shift(X, kDefaultMeanShiftEpsilon, 2).cloud;
  for (std::size_t i = 0; i < Y.size(); ++i) EXPECT_NEAR(norm(Y.point(i)), 1.0, 1e-12);
  // reversing the input reverses the output
  std::vector<std::vector<double>> rev;
  for (std::size_t i = X.size(); i-- > 0;) rev.emplace_back(X.point(i).begin(), X.point(i).end());
  const auto Z = mean_shift(PointCloud::from_rows(rev), kDefaultMeanShiftEpsilon, 2).cloud;
  for (std::size_t i = 0; i < Y.size(); ++i)
    for (std::size_t m = 0; m < 6; ++m) EXPECT_NEAR(Z.point(Y.size() - 1 - i)[m], Y.point(i)[m], 1e-14);
}

TEST(MeanShift, AngularRuleIsStricter) {
  // an angle of 0.3 rad is within the printed neighborhood but outside the pi/16 cap
  const auto X = unit_rows({{1, 0}, {std::cos(0.3), std::sin(0.3)}});
  const auto printed = mean_shift(X, kDefaultMeanShiftEpsilon, 1, MeanShiftRule::Printed).cloud;
  const auto angular = mean_shift(X, kDefaultMeanShiftEpsilon, 1, MeanShiftRule::Angular).cloud;
  EXPECT_NEAR(printed.point(0)[1], std::sin(0.15), 1e-12);
  EXPECT_NEAR(angular.point(0)[1], 0.0, 1e-15);
  EXPECT_EQ(parse_mean_shift_rule("angular"), MeanShiftRule::Angular);
  EXPECT_THROW(parse_mean_shift_rule("fuzzy"), Error);
}

TEST(MeanShift, ZeroMeanKeepsPointAndFlags) {
  const auto X = unit_rows({{1, 0}, {-1, 0}});
  const auto r = mean_shift(X, 2.5);
  EXPECT_EQ(r.zero_mean_points.size(), 2u);
  EXPECT_EQ(r.cloud.point(0)[0], 1.0);
  EXPECT_EQ(r.cloud.point(1)[0], -1.0);
}

TEST(MeanShift, RejectsNonUnitInput) {
  EXPECT_THROW(mean_shift(PointCloud::from_rows({{2, 0}})), Error);
  EXPECT_THROW(mean_shift(unit_rows({{1, 0}}), -1.0), Error);
}
