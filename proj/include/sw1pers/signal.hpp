#pragma once

// Signal ingestion and Fourier tools: sampled series, natural cubic splines,
// moving averages and truncated trigonometric series on [0, 2pi].

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sw1pers/error.hpp"

namespace sw1pers {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Real function of one variable, evaluated by value.
using RealFunction = std::function<double(double)>;

/// A time series with strictly increasing finite timestamps.
class SampledSignal {
 public:
  SampledSignal() = default;

  SampledSignal(std::vector<double> times, std::vector<double> values)
      : times_(std::move(times)), values_(std::move(values)) {
    if (times_.size() != values_.size())
      throw Error(ErrorKind::InvalidArgument, "times and values differ in length");
    for (std::size_t i = 0; i < times_.size(); ++i) {
      if (!std::isfinite(times_[i]) || !std::isfinite(values_[i]))
        throw Error(ErrorKind::InvalidArgument, "non-finite sample at index " + std::to_string(i));
      if (i > 0 && !(times_[i] > times_[i - 1]))
        throw Error(ErrorKind::DuplicateTimes,
                    "times must be strictly increasing (index " + std::to_string(i) + ")");
    }
  }

  std::size_t size() const noexcept { return times_.size(); }
  bool empty() const noexcept { return times_.empty(); }
  std::span<const double> times() const noexcept { return times_; }
  std::span<const double> values() const noexcept { return values_; }

  /// Same timestamps, new values (same length).
  SampledSignal with_values(std::vector<double> values) const {
    return SampledSignal(times_, std::move(values));
  }

 private:
  std::vector<double> times_;
  std::vector<double> values_;
};

// ---------------------------------------------------------------------------
// Natural cubic spline

/// Piecewise cubic interpolant with zero second derivative at both ends.
/// Outside [t_min, t_max] the end cubics are extended.
class SplineModel {
 public:
  explicit SplineModel(const SampledSignal& signal) {
    const std::size_t n = signal.size();
    if (n < 4) throw Error(ErrorKind::TooFewSamples, "spline needs at least 4 samples");
    knots_.assign(signal.times().begin(), signal.times().end());
    values_.assign(signal.values().begin(), signal.values().end());

    // Solve the tridiagonal system for interior second derivatives (Thomas).
    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = knots_[i + 1] - knots_[i];
      if (!(h[i] > 0)) throw Error(ErrorKind::DuplicateTimes, "spline knots must be distinct");
    }
    second_.assign(n, 0.0);
    const std::size_t m = n - 2;
    std::vector<double> diag(m), upper(m), rhs(m);
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t i = k + 1;
      diag[k] = 2.0 * (h[i - 1] + h[i]);
      upper[k] = h[i];
      rhs[k] = 6.0 * ((values_[i + 1] - values_[i]) / h[i] - (values_[i] - values_[i - 1]) / h[i - 1]);
    }
    for (std::size_t k = 1; k < m; ++k) {
      const double w = h[k] / diag[k - 1];  // sub-diagonal entry is h[k]
      diag[k] -= w * upper[k - 1];
      rhs[k] -= w * rhs[k - 1];
    }
    for (std::size_t k = m; k-- > 0;) {
      const double next = (k + 1 < m) ? second_[k + 2] : 0.0;
      second_[k + 1] = (rhs[k] - upper[k] * next) / diag[k];
    }
  }

  double t_min() const noexcept { return knots_.front(); }
  double t_max() const noexcept { return knots_.back(); }
  std::span<const double> knots() const noexcept { return knots_; }

  double operator()(double t) const noexcept { return evaluate(t, 0); }

  /// Value (order 0) or derivative (order 1..3) at t.
  double evaluate(double t, int order = 0) const noexcept { return evaluate_segment(segment(t), t, order); }

  std::size_t segment_count() const noexcept { return knots_.size() - 1; }

  /// Evaluates the cubic of segment i (knots i, i+1) at t, even outside it.
  double evaluate_segment(std::size_t i, double t, int order = 0) const noexcept {
    const double h = knots_[i + 1] - knots_[i];
    const double a = (knots_[i + 1] - t) / h;
    const double b = (t - knots_[i]) / h;
    const double m0 = second_[i], m1 = second_[i + 1];
    const double y0 = values_[i], y1 = values_[i + 1];
    switch (order) {
      case 0:
        return a * y0 + b * y1 + ((a * a * a - a) * m0 + (b * b * b - b) * m1) * h * h / 6.0;
      case 1:
        return (y1 - y0) / h - (3.0 * a * a - 1.0) * h * m0 / 6.0 + (3.0 * b * b - 1.0) * h * m1 / 6.0;
      case 2:
        return a * m0 + b * m1;
      case 3:
        return (m1 - m0) / h;
      default:
        return 0.0;
    }
  }

 private:
  std::size_t segment(double t) const noexcept {
    if (t <= knots_.front()) return 0;
    if (t >= knots_.back()) return knots_.size() - 2;
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    return static_cast<std::size_t>(it - knots_.begin()) - 1;
  }

  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> second_;
};

inline SplineModel fit_spline(const SampledSignal& signal) {
  return SplineModel(signal);
}

// ---------------------------------------------------------------------------
// Smoothing

/// Centered moving average; windows shrink near both ends.
inline SampledSignal moving_average(const SampledSignal& signal, int window_points) {
  if (window_points < 1 || window_points % 2 == 0)
    throw Error(ErrorKind::EvenWindow, "window must be odd and positive, got " + std::to_string(window_points));
  const auto n = static_cast<long>(signal.size());
  if (window_points > n)
    throw Error(ErrorKind::WindowTooLarge, "window " + std::to_string(window_points) +
                                               " exceeds signal length " + std::to_string(n));
  const long half = window_points / 2;
  auto values = signal.values();
  std::vector<double> out(values.size());
  for (long i = 0; i < n; ++i) {
    const long lo = std::max(0L, i - half);
    const long hi = std::min(n - 1, i + half);
    double sum = 0.0;
    for (long j = lo; j <= hi; ++j) sum += values[j];
    out[i] = sum / static_cast<double>(hi - lo + 1);
  }
  return signal.with_values(std::move(out));
}

// ---------------------------------------------------------------------------
// Trigonometric polynomials

/// sum_{n=0}^{N} a_n cos(nt) + b_n sin(nt), with b_0 = 0.
class TrigPolynomial {
 public:
  TrigPolynomial() : a_(1, 0.0), b_(1, 0.0) {}

  TrigPolynomial(std::vector<double> cosines, std::vector<double> sines)
      : a_(std::move(cosines)), b_(std::move(sines)) {
    if (a_.empty()) a_.push_back(0.0);
    // Sines may be given without the b_0 slot.
    if (b_.size() + 1 == a_.size()) b_.insert(b_.begin(), 0.0);
    if (b_.size() != a_.size())
      throw Error(ErrorKind::InvalidArgument, "cosine/sine coefficient counts disagree");
    b_[0] = 0.0;
  }

  int degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
  double a(int n) const noexcept { return n <= degree() ? a_[n] : 0.0; }
  double b(int n) const noexcept { return n <= degree() ? b_[n] : 0.0; }

  /// Harmonic amplitude r_n = sqrt(a_n^2 + b_n^2) = 2|f^(n)| for n > 0.
  double radius(int n) const noexcept { return n == 0 ? std::abs(a(0)) : std::hypot(a(n), b(n)); }

  /// Complex coefficient f^(n) as (re, im); negative n uses conjugate symmetry.
  std::pair<double, double> complex_coefficient(int n) const noexcept {
    if (n == 0) return {a(0), 0.0};
    if (n > 0) return {0.5 * a(n), -0.5 * b(n)};
    return {0.5 * a(-n), 0.5 * b(-n)};
  }

  double operator()(double t) const noexcept { return derivative(t, 0); }

  /// k-th derivative evaluated at t.
  double derivative(double t, int k) const noexcept {
    double sum = 0.0;
    for (int n = 0; n <= degree(); ++n) {
      if (n == 0) {
        if (k == 0) sum += a_[0];
        continue;
      }
      // d^k/dt^k [a cos(nt) + b sin(nt)] rotates the phase by k*pi/2.
      const double scale = std::pow(static_cast<double>(n), k);
      const double phase = n * t + k * std::numbers::pi / 2.0;
      sum += scale * (a_[n] * std::cos(phase) + b_[n] * std::sin(phase));
    }
    return sum;
  }

  /// ||f||_2^2 with the 1/(2pi) normalization (Parseval).
  double l2_norm_squared() const noexcept {
    double s = a_[0] * a_[0];
    for (int n = 1; n <= degree(); ++n) s += 0.5 * (a_[n] * a_[n] + b_[n] * b_[n]);
    return s;
  }

  /// ||f^(k)||_2^2 for k >= 1 (the constant term drops out).
  double derivative_l2_norm_squared(int k) const noexcept {
    if (k == 0) return l2_norm_squared();
    double s = 0.0;
    for (int n = 1; n <= degree(); ++n)
      s += 0.5 * std::pow(static_cast<double>(n), 2 * k) * (a_[n] * a_[n] + b_[n] * b_[n]);
    return s;
  }

  std::span<const double> cosines() const noexcept { return a_; }
  std::span<const double> sines() const noexcept { return b_; }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
};

/// Fourier coefficients up to degree N by the uniform trapezoidal rule on
/// [0, 2pi); exact for trigonometric polynomials of degree < quadrature_points/2.
inline TrigPolynomial fourier_truncate(const RealFunction& f, int degree, int quadrature_points) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "degree must be non-negative");
  if (quadrature_points < 2 * degree + 2)
    throw Error(ErrorKind::InsufficientQuadrature,
                std::to_string(quadrature_points) + " points cannot resolve degree " + std::to_string(degree));
  const int q = quadrature_points;
  std::vector<double> samples(q);
  for (int j = 0; j < q; ++j) samples[j] = f(kTwoPi * j / q);
  std::vector<double> a(degree + 1, 0.0), b(degree + 1, 0.0);
  for (int n = 0; n <= degree; ++n) {
    double sc = 0.0, ss = 0.0;
    for (int j = 0; j < q; ++j) {
      // Reduce n*j mod q so the angle stays small and exact.
      const double angle = kTwoPi * static_cast<double>((static_cast<long long>(n) * j) % q) / q;
      sc += samples[j] * std::cos(angle);
      ss += samples[j] * std::sin(angle);
    }
    const double weight = (n == 0) ? 1.0 / q : 2.0 / q;
    a[n] = weight * sc;
    b[n] = (n == 0) ? 0.0 : weight * ss;
  }
  return TrigPolynomial(std::move(a), std::move(b));
}

/// ||f^(k) - (S_N f)^(k)||_2 on [0, 2pi) with the 1/(2pi) normalization.
/// `f_derivative` must evaluate the k-th derivative of f.
inline double remainder_l2(const RealFunction& f_derivative, const TrigPolynomial& truncation, int k,
                           int quadrature_points = 4096) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "derivative order must be non-negative");
  if (quadrature_points < 2 * truncation.degree() + 2)
    throw Error(ErrorKind::InsufficientQuadrature, "too few quadrature points");
  double sum = 0.0;
  for (int j = 0; j < quadrature_points; ++j) {
    const double t = kTwoPi * j / quadrature_points;
    const double r = f_derivative(t) - truncation.derivative(t, k);
    sum += r * r;
  }
  return std::sqrt(sum / quadrature_points);
}

/// Evenly spaced points on [lo, hi], both ends included.
inline std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return out;
}

/// Samples f at the given times.
inline SampledSignal sample(const RealFunction& f, std::vector<double> times) {
  std::vector<double> values(times.size());
  std::transform(times.begin(), times.end(), values.begin(), f);
  return SampledSignal(std::move(times), std::move(values));
}

}  // namespace sw1pers
