#pragma once

// Lomb-Scargle periodogram, the classical baseline for uneven sampling.

#include <algorithm>
#include <cmath>
#include <vector>

#include "sw1pers/error.hpp"
#include "sw1pers/signal.hpp"

namespace sw1pers {

/// Normalized power at each frequency (cycles per unit time). The series is
/// mean-subtracted, each frequency uses Scargle's phase offset, and power is
/// divided by twice the sample variance. Zero variance gives zero power.
inline std::vector<double> lomb_scargle(const SampledSignal& signal, const std::vector<double>& frequencies) {
  const std::size_t n = signal.size();
  if (n < 3) throw Error(ErrorKind::TooFewSamples, "periodogram needs at least 3 samples");
  for (double f : frequencies)
    if (!(f > 0.0) || !std::isfinite(f)) throw Error(ErrorKind::InvalidArgument, "frequencies must be positive");

  const auto t = signal.times();
  const auto y_raw = signal.values();
  double mean = 0.0, scale = 0.0;
  for (double v : y_raw) {
    mean += v;
    scale = std::max(scale, std::abs(v));
  }
  mean /= static_cast<double>(n);
  std::vector<double> y(n);
  double var = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = y_raw[i] - mean;
    var += y[i] * y[i];
  }
  var /= static_cast<double>(n - 1);

  std::vector<double> power(frequencies.size(), 0.0);
  // Rounding-level variance means a constant series.
  if (!(var > 1e-28 * std::max(scale * scale, 1e-300))) return power;

  for (std::size_t k = 0; k < frequencies.size(); ++k) {
    const double w = kTwoPi * frequencies[k];
    double s2 = 0.0, c2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s2 += std::sin(2.0 * w * t[i]);
      c2 += std::cos(2.0 * w * t[i]);
    }
    const double offset = std::atan2(s2, c2) / (2.0 * w);
    double yc = 0.0, ys = 0.0, cc = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double arg = w * (t[i] - offset);
      const double c = std::cos(arg), s = std::sin(arg);
      yc += y[i] * c;
      ys += y[i] * s;
      cc += c * c;
      ss += s * s;
    }
    double p = 0.0;
    if (cc > 1e-12 * n) p += yc * yc / cc;
    if (ss > 1e-12 * n) p += ys * ys / ss;
    power[k] = p / (2.0 * var);
  }
  return power;
}

/// Default grid: 0.5 to J/4 cycles per record, four points per 1/record step.
inline std::vector<double> default_frequency_grid(const SampledSignal& signal) {
  if (signal.size() < 3) throw Error(ErrorKind::TooFewSamples, "periodogram needs at least 3 samples");
  const double span = signal.times().back() - signal.times().front();
  const double hi = static_cast<double>(signal.size()) / 4.0;
  std::vector<double> grid;
  for (double c = 0.5; c <= hi + 1e-12; c += 0.25) grid.push_back(c / span);
  return grid;
}

/// Largest normalized power over the default grid.
inline double ls_score(const SampledSignal& signal) {
  const auto p = lomb_scargle(signal, default_frequency_grid(signal));
  return p.empty() ? 0.0 : *std::max_element(p.begin(), p.end());
}

}  // namespace sw1pers
