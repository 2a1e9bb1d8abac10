#pragma once

// Sliding-window (time-delay) embeddings and their closed-form geometry for
// trigonometric inputs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sw1pers/error.hpp"
#include "sw1pers/signal.hpp"

namespace sw1pers {

struct WindowParams {
  int M = 1;                 // embedding dimension is M + 1
  double tau = 1.0;          // delay
  std::optional<int> N;      // Fourier degree the window was sized for
  int L = 1;                 // assumed number of periods on [0, 2pi]

  int dimension() const noexcept { return M + 1; }
  double window_size() const noexcept { return M * tau; }

  void validate() const {
    if (M < 1) throw Error(ErrorKind::InvalidArgument, "M must be >= 1");
    if (!(tau > 0.0)) throw Error(ErrorKind::InvalidArgument, "tau must be positive");
    if (L < 1) throw Error(ErrorKind::InvalidArgument, "L must be >= 1");
    if (!(M * tau < kTwoPi)) throw Error(ErrorKind::InvalidArgument, "window size M*tau must be below 2pi");
  }
};

/// M = 2N and tau = 2pi / (L (M + 1)), so the window spans M/(M+1) of one period.
inline WindowParams resonant_params(int L, int N) {
  if (L < 1 || N < 1) throw Error(ErrorKind::InvalidArgument, "resonant_params needs L >= 1 and N >= 1");
  WindowParams p;
  p.M = 2 * N;
  p.tau = kTwoPi / (static_cast<double>(L) * (p.M + 1));
  p.N = N;
  p.L = L;
  return p;
}

/// Points of equal dimension stored row-major.
class PointCloud {
 public:
  PointCloud() = default;
  PointCloud(std::size_t dimension, std::vector<double> coords) : dim_(dimension), coords_(std::move(coords)) {
    if (dim_ == 0) throw Error(ErrorKind::InvalidArgument, "point dimension must be positive");
    if (coords_.size() % dim_ != 0) throw Error(ErrorKind::InvalidArgument, "coordinate count not a multiple of dimension");
    for (double c : coords_)
      if (std::isnan(c)) throw Error(ErrorKind::InvalidArgument, "NaN coordinate in point cloud");
  }

  static PointCloud from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    std::vector<double> flat;
    flat.reserve(rows.size() * rows.front().size());
    for (const auto& r : rows) {
      if (r.size() != rows.front().size()) throw Error(ErrorKind::DimensionMismatch, "rows differ in dimension");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return PointCloud(rows.front().size(), std::move(flat));
  }

  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dimension() const noexcept { return dim_; }
  bool empty() const noexcept { return size() == 0; }

  std::span<const double> point(std::size_t i) const noexcept { return {coords_.data() + i * dim_, dim_}; }
  std::span<const double> coordinates() const noexcept { return coords_; }

  /// Parameters and base points the cloud was embedded from, when known.
  std::optional<WindowParams> params;
  std::vector<double> base_points;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

inline double dot(std::span<const double> x, std::span<const double> y) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm(std::span<const double> x) noexcept { return std::sqrt(dot(x, x)); }

inline double distance(std::span<const double> x, std::span<const double> y) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

/// Point i has coordinates f(t_i + m tau), m = 0..M. Periodicity, when wanted,
/// is the caller's job (trigonometric polynomials are periodic already).
inline PointCloud sliding_window(const RealFunction& f, const WindowParams& params, std::span<const double> base_points) {
  if (base_points.empty()) throw Error(ErrorKind::EmptySampleSet, "no base points");
  params.validate();
  const std::size_t dim = params.dimension();
  std::vector<double> coords(base_points.size() * dim);
  for (std::size_t i = 0; i < base_points.size(); ++i)
    for (std::size_t m = 0; m < dim; ++m) coords[i * dim + m] = f(base_points[i] + static_cast<double>(m) * params.tau);
  PointCloud cloud(dim, std::move(coords));
  cloud.params = params;
  cloud.base_points.assign(base_points.begin(), base_points.end());
  return cloud;
}

/// u_n[m] = cos(n m tau), v_n[m] = sin(n m tau).
inline std::pair<std::vector<double>, std::vector<double>> basis_vectors(int n, const WindowParams& params) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "harmonic index must be >= 0");
  std::vector<double> u(params.dimension()), v(params.dimension());
  for (int m = 0; m <= params.M; ++m) {
    const double angle = static_cast<double>(n) * m * params.tau;
    u[m] = std::cos(angle);
    v[m] = (n == 0) ? 0.0 : std::sin(angle);
  }
  return {std::move(u), std::move(v)};
}

/// Squared semi-axes of the ellipse traced by SW cos(Lt):
/// ((M+1) +- |sin(L(M+1)tau) / sin(L tau)|) / 2.
inline std::pair<double, double> ellipse_eigenvalues(int L, const WindowParams& params) {
  const double s = std::sin(L * params.tau);
  if (std::abs(s) < 1e-12) throw Error(ErrorKind::DegenerateTau, "sin(L tau) vanishes");
  const double spread = std::abs(std::sin(L * (params.M + 1) * params.tau) / s);
  const double total = params.M + 1;
  return {0.5 * (total + spread), 0.5 * (total - spread)};
}

/// Numerical rank: singular values above rel_tol times the largest one.
inline int numerical_rank(const std::vector<std::vector<double>>& columns, double rel_tol = 1e-8) {
  if (columns.empty()) return 0;
  Eigen::MatrixXd A(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < columns[j].size(); ++i) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = columns[j][i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

/// C(x) = x - (<x,1>/(M+1)) 1 applied pointwise.
inline PointCloud center(const PointCloud& cloud) {
  const std::size_t dim = cloud.dimension();
  std::vector<double> coords(cloud.coordinates().begin(), cloud.coordinates().end());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    double* p = coords.data() + i * dim;
    double mean = 0.0;
    for (std::size_t m = 0; m < dim; ++m) mean += p[m];
    mean /= static_cast<double>(dim);
    for (std::size_t m = 0; m < dim; ++m) p[m] -= mean;
  }
  PointCloud out(dim, std::move(coords));
  out.params = cloud.params;
  out.base_points = cloud.base_points;
  return out;
}

/// Scales every point to unit length. A point whose norm is at rounding level
/// relative to `reference_scale` counts as zero and raises ZeroVector.
inline PointCloud normalize(const PointCloud& cloud, double reference_scale = 0.0) {
  const std::size_t dim = cloud.dimension();
  std::vector<double> coords(cloud.coordinates().begin(), cloud.coordinates().end());
  const double floor = 1e-12 * std::max(reference_scale, 1e-300);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    double* p = coords.data() + i * dim;
    const double len = norm({p, dim});
    if (!(len > floor) || len == 0.0)
      throw Error(ErrorKind::ZeroVector, "point " + std::to_string(i) + " has zero norm");
    for (std::size_t m = 0; m < dim; ++m) p[m] /= len;
  }
  PointCloud out(dim, std::move(coords));
  out.params = cloud.params;
  out.base_points = cloud.base_points;
  return out;
}

/// Largest point norm; a natural reference scale for `normalize`.
inline double max_norm(const PointCloud& cloud) noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < cloud.size(); ++i) m = std::max(m, norm(cloud.point(i)));
  return m;
}

/// Point clouds as CSV, one point per row.
inline std::string to_csv(const PointCloud& cloud) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    for (std::size_t m = 0; m < p.size(); ++m) {
      std::snprintf(buf, sizeof buf, "%.17g", p[m]);
      if (m) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure of embeddings of L-periodic trigonometric polynomials

struct StructureReport {
  WindowParams params;
  double orthogonality_residual = 0.0;   // max |<w_i, w_j>| over distinct basis vectors on the L-lattice
  double norm_deviation = 0.0;           // max | ||u_n||, ||v_n|| - sqrt((M+1)/2) |
  double centered_norm_deviation = 0.0;  // max_t | ||C(phi(t))|| - sqrt(M+1) * sqrt(||S_N f||^2 - f^(0)^2) |
  double orthonormality_residual = 0.0;  // max |G - I| for the normalized decomposition basis
  double decomposition_residual = 0.0;   // max_t ||normalized point - sum_n r^_n (cos x^_n + sin y^_n)||
  std::vector<double> normalized_radii;  // r^_n for n = 0..N (zero off the lattice)

  double max_residual() const noexcept {
    return std::max({orthogonality_residual, norm_deviation, centered_norm_deviation, orthonormality_residual,
                     decomposition_residual});
  }
};

/// Normalized harmonic radii r_n / sqrt(sum_k r_k^2), n = 0..N (entry 0 is 0).
/// These are the radii of the circles traced in each harmonic plane by the
/// centered, normalized embedding; they satisfy sum r^_n^2 = 1.
inline std::vector<double> normalized_radii(const TrigPolynomial& trig) {
  std::vector<double> r(trig.degree() + 1, 0.0);
  double total = 0.0;
  for (int n = 1; n <= trig.degree(); ++n) total += trig.radius(n) * trig.radius(n);
  if (total <= 0.0) return r;
  for (int n = 1; n <= trig.degree(); ++n) r[n] = trig.radius(n) / std::sqrt(total);
  return r;
}

/// Checks, numerically, the orthogonal decomposition of the centered and
/// normalized embedding of an L-periodic trigonometric polynomial with
/// M = 2N and tau = 2pi / (L(M+1)).
inline StructureReport verify_structure(const TrigPolynomial& trig, int L, int probe_points = 64) {
  const int N = std::max(trig.degree(), 1);
  for (int n = 1; n <= trig.degree(); ++n)
    if (n % L != 0 && trig.radius(n) > 1e-10)
      throw Error(ErrorKind::NotLPeriodic, "harmonic " + std::to_string(n) + " is off the L = " + std::to_string(L) + " lattice");

  StructureReport rep;
  rep.params = resonant_params(L, N);
  const auto& P = rep.params;
  const double half_dim = 0.5 * (P.M + 1);

  std::vector<std::vector<double>> lattice;  // u_0, then (u_n, v_n) for n on the lattice
  lattice.push_back(basis_vectors(0, P).first);
  std::vector<int> harmonics;
  for (int n = L; n <= N; n += L) {
    auto [u, v] = basis_vectors(n, P);
    rep.norm_deviation = std::max({rep.norm_deviation, std::abs(norm(u) - std::sqrt(half_dim)),
                                   std::abs(norm(v) - std::sqrt(half_dim))});
    lattice.push_back(std::move(u));
    lattice.push_back(std::move(v));
    harmonics.push_back(n);
  }
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = i + 1; j < lattice.size(); ++j)
      rep.orthogonality_residual = std::max(rep.orthogonality_residual, std::abs(dot(lattice[i], lattice[j])));

  // Orthonormal decomposition basis: x_n = cos(a) u_n + sin(a) v_n, y_n = sin(a) u_n - cos(a) v_n,
  // with a_n + i b_n = r_n e^{i a}.
  std::vector<std::vector<double>> xs, ys;
  for (std::size_t h = 0; h < harmonics.size(); ++h) {
    const int n = harmonics[h];
    const double alpha = std::atan2(trig.b(n), trig.a(n));
    const auto& u = lattice[1 + 2 * h];
    const auto& v = lattice[2 + 2 * h];
    std::vector<double> x(u.size()), y(u.size());
    for (std::size_t m = 0; m < u.size(); ++m) {
      x[m] = std::cos(alpha) * u[m] + std::sin(alpha) * v[m];
      y[m] = std::sin(alpha) * u[m] - std::cos(alpha) * v[m];
    }
    const double nx = norm(x), ny = norm(y);
    for (auto& c : x) c /= nx;
    for (auto& c : y) c /= ny;
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }
  {
    std::vector<const std::vector<double>*> basis;
    for (std::size_t h = 0; h < xs.size(); ++h) {
      basis.push_back(&xs[h]);
      basis.push_back(&ys[h]);
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) {
        const double g = dot(*basis[i], *basis[j]);
        rep.orthonormality_residual = std::max(rep.orthonormality_residual, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
  }

  rep.normalized_radii = normalized_radii(trig);
  const double centered_energy = trig.l2_norm_squared() - trig.a(0) * trig.a(0);
  const double expected_centered_norm = std::sqrt(P.M + 1.0) * std::sqrt(std::max(centered_energy, 0.0));

  std::vector<double> base(probe_points);
  for (int i = 0; i < probe_points; ++i) base[i] = kTwoPi * i / probe_points;
  const auto cloud = center(sliding_window([&](double t) { return trig(t); }, P, base));
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    const double len = norm(p);
    rep.centered_norm_deviation = std::max(rep.centered_norm_deviation, std::abs(len - expected_centered_norm));
    if (len == 0.0) continue;
    const double t = base[i];
    double residual = 0.0;
    for (std::size_t m = 0; m < p.size(); ++m) {
      double model = 0.0;
      for (std::size_t h = 0; h < harmonics.size(); ++h) {
        const int n = harmonics[h];
        model += rep.normalized_radii[n] * (std::cos(n * t) * xs[h][m] + std::sin(n * t) * ys[h][m]);
      }
      const double d = p[m] / len - model;
      residual += d * d;
    }
    rep.decomposition_residual = std::max(rep.decomposition_residual, std::sqrt(residual));
  }
  return rep;
}

/// Hausdorff distance between two finite clouds of equal dimension.
inline double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorKind::DimensionMismatch, "clouds differ in dimension");
  auto directed = [](const PointCloud& x, const PointCloud& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < y.size(); ++j) best = std::min(best, distance(x.point(i), y.point(j)));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace sw1pers
