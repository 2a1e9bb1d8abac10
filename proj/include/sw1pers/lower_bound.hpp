#pragma once

// Lower bound on the maximum H1 persistence of the centered, normalized
// sliding-window cloud of an L-periodic trigonometric polynomial:
//
//   mp >= sqrt(3) * max_n r^_n - delta * kappa_N,
//   kappa_N = 2 sqrt(2) ||S_N f'||_2 / ||S_N (f - f^(0))||_2,
//
// valid when the base points are delta-dense on the circle, delta is below
// max_n sqrt(3) r^_n / kappa_N, and the field characteristic exceeds N.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "sw1pers/embedding.hpp"
#include "sw1pers/error.hpp"
#include "sw1pers/field.hpp"
#include "sw1pers/persistence.hpp"
#include "sw1pers/rips.hpp"
#include "sw1pers/signal.hpp"

namespace sw1pers {

/// Hausdorff distance from a finite set of angles to the whole circle R/2piZ:
/// half of the widest circular gap.
inline double circle_covering_radius(std::span<const double> angles) {
  if (angles.empty()) throw Error(ErrorKind::EmptySampleSet, "no base points");
  std::vector<double> a(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    double x = std::fmod(angles[i], kTwoPi);
    a[i] = x < 0 ? x + kTwoPi : x;
  }
  std::sort(a.begin(), a.end());
  double gap = a.front() + kTwoPi - a.back();
  for (std::size_t i = 1; i < a.size(); ++i) gap = std::max(gap, a[i] - a[i - 1]);
  return 0.5 * gap;
}

/// kappa_N from the coefficients (Parseval, 1/(2pi) normalization).
inline double lipschitz_constant(const TrigPolynomial& trig) {
  const double centered = trig.l2_norm_squared() - trig.a(0) * trig.a(0);
  if (!(centered > 0.0)) throw Error(ErrorKind::ZeroVector, "constant polynomial has no centered energy");
  return 2.0 * std::sqrt(2.0) * std::sqrt(trig.derivative_l2_norm_squared(1)) / std::sqrt(centered);
}

struct LowerBoundReport {
  WindowParams params;
  double delta = 0.0;            // covering radius of the base points
  double kappa = 0.0;
  double max_radius = 0.0;       // max_n r^_n
  double bound = 0.0;            // sqrt(3) max r^_n - delta kappa
  double max_persistence = 0.0;  // measured mp of the H1 diagram
  bool hypothesis_holds = false; // delta < sqrt(3) max r^_n / kappa
  PersistenceDiagram h1;

  bool bound_holds() const noexcept { return max_persistence >= bound; }
};

inline LowerBoundReport verify_persistence_lower_bound(const TrigPolynomial& trig, int L,
                                                       std::span<const double> base_points, const FieldPrime& field,
                                                       double threshold = 2.0) {
  const int N = trig.degree();
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "polynomial must have degree >= 1");
  if (field.prime() <= static_cast<std::uint32_t>(N))
    throw Error(ErrorKind::InvalidArgument, "field characteristic must exceed N = " + std::to_string(N));
  for (int n = 1; n <= N; ++n)
    if (n % L != 0 && trig.radius(n) > 1e-10)
      throw Error(ErrorKind::NotLPeriodic, "harmonic " + std::to_string(n) + " is off the L lattice");

  LowerBoundReport rep;
  rep.params = resonant_params(L, N);
  rep.delta = circle_covering_radius(base_points);
  rep.kappa = lipschitz_constant(trig);
  const auto radii = normalized_radii(trig);
  rep.max_radius = *std::max_element(radii.begin(), radii.end());
  rep.bound = std::sqrt(3.0) * rep.max_radius - rep.delta * rep.kappa;
  rep.hypothesis_holds = rep.delta < std::sqrt(3.0) * rep.max_radius / rep.kappa;

  const auto raw = sliding_window([&](double t) { return trig(t); }, rep.params, base_points);
  const auto cloud = normalize(center(raw), max_norm(raw));
  auto result = cloud_persistence(cloud, field, threshold);
  rep.h1 = std::move(result.h1);
  rep.max_persistence = max_persistence(rep.h1);
  return rep;
}

}  // namespace sw1pers
