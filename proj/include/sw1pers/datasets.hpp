#pragma once

// Synthetic benchmark collections: the phase-shifted classification set and
// the ten-shape ranking set.

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "sw1pers/signal.hpp"
#include "sw1pers/synth.hpp"

namespace sw1pers {

struct LabeledSignal {
  std::string id;
  std::string shape;
  bool periodic = false;
  SampledSignal signal;
};

/// Shapes of the classification set: four periodic positives, two negatives.
inline const std::vector<Shape> kRocShapes = {Shape::Cosine,       Shape::TrendedCosine, Shape::DampedCosine,
                                              Shape::PeakedCosine, Shape::Constant,      Shape::Linear};

/// Per-profile seed, independent of how many profiles or shapes are generated.
inline std::uint64_t profile_seed(std::uint64_t seed, Shape shape, int index) {
  return mix_seed(seed ^ mix_seed((static_cast<std::uint64_t>(shape) << 32) | static_cast<std::uint32_t>(index)));
}

/// `profiles` phases j pi / 50 of every shape, each sampled at `samples`
/// points of [0, 2pi] with noise at `noise` times the profile amplitude.
inline std::vector<LabeledSignal> make_roc_dataset(double noise, std::uint64_t seed, int profiles = 100,
                                                   int samples = 50, const std::vector<Shape>& shapes = kRocShapes) {
  std::vector<LabeledSignal> out;
  out.reserve(shapes.size() * static_cast<std::size_t>(profiles));
  for (Shape s : shapes)
    for (int j = 0; j < profiles; ++j) {
      const double phase = j * std::numbers::pi / 50.0;
      out.push_back({std::string(shape_name(s)) + "_" + std::to_string(j), std::string(shape_name(s)), is_periodic(s),
                     synth(s, phase, noise, samples, profile_seed(seed, s, j))});
    }
  return out;
}

/// The ten-signal ranking collection, 50 samples each.
inline std::vector<LabeledSignal> make_ranking_fixture(std::uint64_t seed) {
  struct Spec {
    const char* id;
    Shape shape;
    double noise;
    int periods;
  };
  const Spec specs[] = {
      {"cosine", Shape::Cosine, 0.0, 2},
      {"cosine_noise25", Shape::Cosine, 0.25, 2},
      {"cosine_noise50", Shape::Cosine, 0.50, 2},
      {"cosine_noise75", Shape::Cosine, 0.75, 2},
      {"sawtooth_noise25", Shape::Sawtooth, 0.25, 2},
      {"chirp", Shape::Chirp, 0.0, 2},
      {"damped_noise25", Shape::DampedCosine, 0.25, 3},
      {"spiky", Shape::PeakedCosine, 0.0, 3},
      {"square_noise25", Shape::Square, 0.25, 2},
      {"random_trig", Shape::RandomTrig, 0.0, 2},
  };
  std::vector<LabeledSignal> out;
  int k = 0;
  for (const auto& s : specs) {
    out.push_back({s.id, std::string(shape_name(s.shape)), is_periodic(s.shape),
                   synth(s.shape, 0.0, s.noise, 50, profile_seed(seed, s.shape, 1000 + k), SynthOptions{s.periods})});
    ++k;
  }
  return out;
}

}  // namespace sw1pers
