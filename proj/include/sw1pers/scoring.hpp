#pragma once

// signal -> periodicity score: smooth, interpolate, embed, center, normalize,
// denoise, then read the maximum H1 persistence of the Rips filtration.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "sw1pers/denoise.hpp"
#include "sw1pers/embedding.hpp"
#include "sw1pers/error.hpp"
#include "sw1pers/field.hpp"
#include "sw1pers/parallel.hpp"
#include "sw1pers/persistence.hpp"
#include "sw1pers/rips.hpp"
#include "sw1pers/signal.hpp"

namespace sw1pers {

inline const double kSqrt3 = std::sqrt(3.0);

struct ScoreConfig {
  int N = 10;
  std::uint32_t field = 11;
  std::vector<int> periods{2, 3, 4};  // candidate L values
  std::size_t cloud_size = 200;
  int ma_window = 7;
  double meanshift_eps = kDefaultMeanShiftEpsilon;
  int meanshift_iterations = 1;
  MeanShiftRule meanshift_rule = MeanShiftRule::Printed;
  bool denoise = true;  // off skips both the moving average and mean shift
  double threshold = 2.0;
  bool periodic = false;  // wrap windows around [0, 2pi) instead of clipping them

  /// `require_field_above_degree` is relaxed by the diagram command, which may
  /// deliberately compute over a small field.
  void validate(bool require_field_above_degree = true) const {
    if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be >= 1");
    if (!FieldPrime::is_prime(field)) throw Error(ErrorKind::NotPrime, std::to_string(field) + " is not prime");
    if (require_field_above_degree && field <= static_cast<std::uint32_t>(N))
      throw Error(ErrorKind::InvalidArgument, "field characteristic must exceed N");
    if (periods.empty()) throw Error(ErrorKind::InvalidArgument, "no candidate periods");
    for (int L : periods)
      if (L < 1) throw Error(ErrorKind::InvalidArgument, "periods must be >= 1");
    if (cloud_size < static_cast<std::size_t>(2 * (2 * N + 1)))
      throw Error(ErrorKind::InvalidArgument, "cloud size must be at least 2(2N+1)");
    if (denoise && (ma_window < 1 || ma_window % 2 == 0))
      throw Error(ErrorKind::EvenWindow, "moving-average window must be a positive odd integer");
    if (meanshift_iterations < 0) throw Error(ErrorKind::InvalidArgument, "mean-shift iterations must be >= 0");
    if (!(threshold > 0.0)) throw Error(ErrorKind::InvalidArgument, "threshold must be positive");
  }
};

struct PeriodScore {
  int L = 0;
  double score = 0.0;
  double max_persistence = 0.0;
  double birth = 0.0;  // of the most persistent pair
  double death = 0.0;
  bool degenerate = false;
  std::string note;  // why the period was degenerate, or a warning
  PersistenceDiagram h1;
};

struct Score {
  double value = 0.0;
  int best_L = 0;
  std::vector<PeriodScore> periods;

  const PeriodScore& best() const {
    for (const auto& p : periods)
      if (p.L == best_L) return p;
    return periods.front();
  }
};

/// The observed time range mapped affinely onto [0, 2pi].
class RescaledSignal {
 public:
  explicit RescaledSignal(SplineModel spline) : spline_(std::move(spline)) {}

  double operator()(double u) const noexcept {
    return spline_(spline_.t_min() + (spline_.t_max() - spline_.t_min()) * u / kTwoPi);
  }

 private:
  SplineModel spline_;
};

/// Evenly spaced window starts: over [0, 2pi - M tau] when clipped, or
/// 2pi k / n for k < n when wrapping.
inline std::vector<double> window_starts(const WindowParams& params, std::size_t count, bool periodic) {
  if (periodic) {
    std::vector<double> t(count);
    for (std::size_t k = 0; k < count; ++k) t[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(count);
    return t;
  }
  return linspace(0.0, std::max(0.0, kTwoPi - params.window_size()), count);
}

/// Smoothing and interpolation shared by all periods.
inline RescaledSignal prepare_signal(const SampledSignal& signal, const ScoreConfig& config) {
  if (signal.size() < 4) throw Error(ErrorKind::SignalTooShort, "need at least 4 samples, got " + std::to_string(signal.size()));
  if (!config.denoise || config.ma_window == 1) return RescaledSignal(fit_spline(signal));
  const int window = std::min<int>(config.ma_window, static_cast<int>(signal.size()) - (signal.size() % 2 == 0 ? 1 : 0));
  return RescaledSignal(fit_spline(moving_average(signal, window)));
}

/// The centered, normalized and (optionally) denoised cloud for period L.
/// Throws ZeroVector when the centered cloud has a vanishing point.
inline PointCloud score_cloud(const RescaledSignal& f, const ScoreConfig& config, int L) {
  const auto params = resonant_params(L, config.N);
  const auto starts = window_starts(params, config.cloud_size, config.periodic);
  RealFunction eval;
  if (config.periodic)
    eval = [&f](double u) {
      double w = std::fmod(u, kTwoPi);
      return f(w < 0 ? w + kTwoPi : w);
    };
  else
    eval = [&f](double u) { return f(std::clamp(u, 0.0, kTwoPi)); };
  const auto raw = sliding_window(eval, params, starts);
  auto cloud = normalize(center(raw), max_norm(raw));
  if (config.denoise && config.meanshift_iterations > 0)
    cloud = mean_shift(cloud, config.meanshift_eps, config.meanshift_iterations, config.meanshift_rule).cloud;
  return cloud;
}

inline PeriodScore score_period(const RescaledSignal& f, const ScoreConfig& config, int L) {
  PeriodScore out;
  out.L = L;
  out.h1.dim = 1;
  out.h1.field = config.field;
  PointCloud cloud;
  try {
    cloud = score_cloud(f, config, L);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroVector) throw;
    out.degenerate = true;
    out.note = "degenerate cloud: " + std::string(e.what());
    return out;
  }
  auto result = cloud_persistence(cloud, FieldPrime(config.field), config.threshold);
  out.h1 = std::move(result.h1);
  if (!out.h1.censored.empty()) out.note = "classes alive at the threshold; consider raising it";
  if (auto top = most_persistent(out.h1)) {
    out.birth = top->birth;
    out.death = top->death;
  }
  out.max_persistence = max_persistence(out.h1);
  out.score = out.max_persistence / kSqrt3;
  return out;
}

/// Runs the pipeline for every candidate L and keeps the best. `workers` > 1
/// spreads the periods over threads; the result does not depend on it.
inline Score score(const SampledSignal& signal, const ScoreConfig& config, unsigned workers = 1) {
  config.validate();
  const auto f = prepare_signal(signal, config);
  Score s;
  s.periods.resize(config.periods.size());
  parallel_for(
      config.periods.size(), [&](std::size_t i) { s.periods[i] = score_period(f, config, config.periods[i]); }, workers);
  s.best_L = s.periods.front().L;
  for (const auto& p : s.periods)
    if (p.score > s.value) {
      s.value = p.score;
      s.best_L = p.L;
    }
  return s;
}

struct RankEntry {
  std::size_t index;  // position in the input list
  Score score;
};

/// Scores every signal and orders them by descending score; ties keep input order.
inline std::vector<RankEntry> rank(const std::vector<SampledSignal>& signals, const ScoreConfig& config,
                                   unsigned workers = 0) {
  if (signals.empty()) throw Error(ErrorKind::EmptySampleSet, "nothing to rank");
  config.validate();
  std::vector<RankEntry> out(signals.size());
  parallel_for(
      signals.size(), [&](std::size_t i) { out[i] = {i, score(signals[i], config)}; }, workers);
  std::stable_sort(out.begin(), out.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.score.value > b.score.value; });
  return out;
}

}  // namespace sw1pers
