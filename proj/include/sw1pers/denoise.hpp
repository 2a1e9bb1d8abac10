#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string_view>
#include <vector>

#include "sw1pers/embedding.hpp"
#include "sw1pers/error.hpp"

namespace sw1pers {

inline const double kDefaultMeanShiftEpsilon = std::cos(std::numbers::pi / 16.0);

enum class MeanShiftRule {
  Printed,  // neighbors: 1 - x.y < eps
  Angular,  // neighbors: x.y > eps
};

inline MeanShiftRule parse_mean_shift_rule(std::string_view name) {
  if (name == "printed") return MeanShiftRule::Printed;
  if (name == "angular") return MeanShiftRule::Angular;
  throw Error(ErrorKind::InvalidArgument, "mean-shift rule must be 'printed' or 'angular'");
}

struct MeanShiftResult {
  PointCloud cloud;
  std::vector<std::size_t> zero_mean_points;  // indices kept as-is because their neighbor mean vanished
};

/// Replaces every unit vector by the renormalized mean of its cosine-similarity
/// neighborhood. Updates are synchronous: each iteration reads only the
/// previous iteration's cloud, so the result does not depend on point order.
inline MeanShiftResult mean_shift(const PointCloud& cloud, double epsilon = kDefaultMeanShiftEpsilon,
                                  int iterations = 1, MeanShiftRule rule = MeanShiftRule::Printed) {
  if (iterations < 0) throw Error(ErrorKind::InvalidArgument, "iterations must be >= 0");
  if (rule == MeanShiftRule::Printed && !(epsilon > 0.0))
    throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
  if (rule == MeanShiftRule::Angular && !(epsilon > -1.0 && epsilon <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "angular epsilon must lie in (-1, 1]");
  for (std::size_t i = 0; i < cloud.size(); ++i)
    if (std::abs(norm(cloud.point(i)) - 1.0) > 1e-9)
      throw Error(ErrorKind::InvalidArgument, "mean_shift expects unit-norm points");

  MeanShiftResult result{cloud, {}};
  const std::size_t n = cloud.size(), dim = cloud.dimension();
  for (int it = 0; it < iterations; ++it) {
    const PointCloud& in = result.cloud;
    std::vector<double> out(n * dim, 0.0);
    result.zero_mean_points.clear();
    for (std::size_t i = 0; i < n; ++i) {
      auto x = in.point(i);
      double* mean = out.data() + i * dim;
      for (std::size_t j = 0; j < n; ++j) {
        auto y = in.point(j);
        const double c = dot(x, y);
        const bool neighbor = (rule == MeanShiftRule::Printed) ? (1.0 - c < epsilon) : (c > epsilon);
        if (!neighbor && j != i) continue;
        for (std::size_t m = 0; m < dim; ++m) mean[m] += y[m];
      }
      const double len = norm({mean, dim});
      if (!(len > 1e-12)) {
        result.zero_mean_points.push_back(i);
        for (std::size_t m = 0; m < dim; ++m) mean[m] = x[m];
      } else {
        for (std::size_t m = 0; m < dim; ++m) mean[m] /= len;
      }
    }
    PointCloud next(dim, std::move(out));
    next.params = cloud.params;
    next.base_points = cloud.base_points;
    result.cloud = std::move(next);
  }
  return result;
}

}  // namespace sw1pers
