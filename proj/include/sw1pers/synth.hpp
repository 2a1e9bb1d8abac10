#pragma once

// Synthetic test signals on [0, 2pi].
//
// Noise: Gaussian with standard deviation noise_fraction * amplitude, where
// amplitude = (max - min) / 2 of the noiseless samples.
// Random numbers come from std::mt19937_64, whose output sequence is fixed by
// the standard, and Gaussian deviates use the Box-Muller transform so the
// same seed reproduces the same data on every platform.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sw1pers/error.hpp"
#include "sw1pers/signal.hpp"

namespace sw1pers {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (spare_) {
      const double v = *spare_;
      spare_.reset();
      return v;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// splitmix64 finalizer; used to derive independent per-profile seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class Shape {
  Cosine,
  TrendedCosine,
  DampedCosine,
  PeakedCosine,
  Sawtooth,
  Square,
  Chirp,
  RandomTrig,
  Constant,
  Linear,
};

inline constexpr std::array<Shape, 10> kAllShapes = {
    Shape::Cosine, Shape::TrendedCosine, Shape::DampedCosine, Shape::PeakedCosine, Shape::Sawtooth,
    Shape::Square, Shape::Chirp,         Shape::RandomTrig,   Shape::Constant,     Shape::Linear,
};

constexpr std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::Cosine: return "cosine";
    case Shape::TrendedCosine: return "trended_cosine";
    case Shape::DampedCosine: return "damped_cosine";
    case Shape::PeakedCosine: return "peaked_cosine";
    case Shape::Sawtooth: return "sawtooth";
    case Shape::Square: return "square";
    case Shape::Chirp: return "chirp";
    case Shape::RandomTrig: return "random_trig";
    case Shape::Constant: return "constant";
    case Shape::Linear: return "linear";
  }
  return "unknown";
}

inline Shape parse_shape(std::string_view name) {
  for (Shape s : kAllShapes)
    if (shape_name(s) == name) return s;
  throw Error(ErrorKind::UnknownShape, "unknown shape '" + std::string(name) + "'");
}

/// Constant and linear profiles are the non-periodic class.
constexpr bool is_periodic(Shape s) { return s != Shape::Constant && s != Shape::Linear; }

struct SynthOptions {
  int periods = 2;  // full periods across [0, 2pi] for the periodic shapes
};

/// Noiseless profile as a function of t in [0, 2pi]. `seed` only matters for
/// RandomTrig, whose five coefficients are drawn uniformly from the unit disk.
inline RealFunction shape_function(Shape shape, double phase, std::uint64_t seed, SynthOptions options = {}) {
  const double k = options.periods;
  switch (shape) {
    case Shape::Cosine:
      return [=](double t) { return std::cos(k * t - phase); };
    case Shape::TrendedCosine:
      return [=](double t) { return std::cos(k * t - phase) + t / std::numbers::pi; };
    case Shape::DampedCosine:
      return [=](double t) { return std::exp(-t / std::numbers::pi) * std::cos(k * t - phase); };
    case Shape::PeakedCosine:
      // Narrow peaks: raised cosine to the sixth power, rescaled to [-1, 1].
      return [=](double t) { return 2.0 * std::pow(0.5 * (1.0 + std::cos(k * t - phase)), 6) - 1.0; };
    case Shape::Sawtooth:
      return [=](double t) {
        double x = (k * t - phase) / (2.0 * std::numbers::pi);
        return 2.0 * (x - std::floor(x)) - 1.0;
      };
    case Shape::Square:
      return [=](double t) { return std::cos(k * t - phase) >= 0.0 ? 1.0 : -1.0; };
    case Shape::Chirp:
      // cos(e^{a t + b}) with a = 1/2, b = 0: instantaneous frequency grows.
      return [=](double t) { return std::cos(std::exp(0.5 * t) - phase); };
    case Shape::RandomTrig: {
      Rng rng(mix_seed(seed ^ 0x5eed5eedULL));
      std::array<std::complex<double>, 5> c{};
      for (auto& z : c) {
        double x, y;
        do {
          x = 2.0 * rng.uniform() - 1.0;
          y = 2.0 * rng.uniform() - 1.0;
        } while (x * x + y * y > 1.0);
        z = {x, y};
      }
      return [=](double t) {
        double s = 0.0;
        for (int n = 1; n <= 5; ++n) s += std::real(c[n - 1] * std::polar(1.0, n * (k * t - phase)));
        return s;
      };
    }
    case Shape::Constant:
      return [](double) { return 1.0; };
    case Shape::Linear:
      return [=](double t) { return (t - phase) / std::numbers::pi - 1.0; };
  }
  throw Error(ErrorKind::UnknownShape, "unhandled shape");
}

/// n_samples evenly spaced on [0, 2pi] (both ends) plus Gaussian noise.
inline SampledSignal synth(Shape shape, double phase, double noise_std_fraction, int n_samples,
                           std::uint64_t seed, SynthOptions options = {}) {
  if (n_samples < 2) throw Error(ErrorKind::TooFewSamples, "need at least 2 samples");
  if (!(noise_std_fraction >= 0.0)) throw Error(ErrorKind::InvalidArgument, "noise fraction must be >= 0");
  const auto f = shape_function(shape, phase, seed, options);
  auto times = linspace(0.0, kTwoPi, static_cast<std::size_t>(n_samples));
  std::vector<double> values(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) values[i] = f(times[i]);

  if (noise_std_fraction > 0.0) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    // A flat profile has zero amplitude and therefore stays noiseless.
    const double amplitude = 0.5 * (*hi - *lo);
    Rng rng(mix_seed(seed));
    const double sigma = noise_std_fraction * amplitude;
    for (double& v : values) v += sigma * rng.gaussian();
  }
  return SampledSignal(std::move(times), std::move(values));
}

}  // namespace sw1pers
