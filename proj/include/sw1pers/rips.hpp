#pragma once

// Vietoris-Rips filtrations up to dimension 2.
//
// Simplices are ordered by (entry time, dimension, lexicographic vertex tuple).
// Edges are kept explicitly; triangles are determined by the edges (flag
// complex) and are enumerated on demand.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "sw1pers/embedding.hpp"
#include "sw1pers/error.hpp"

namespace sw1pers {

using vertex_t = std::uint32_t;

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  DistanceMatrix(std::size_t n, std::vector<double> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n) throw Error(ErrorKind::InvalidArgument, "distance data is not n x n");
  }

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

  double max_entry() const noexcept {
    return data_.empty() ? 0.0 : *std::max_element(data_.begin(), data_.end());
  }

  bool is_symmetric(double rel_tol = 1e-12) const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*this)(i, i) != 0.0) return false;
      for (std::size_t j = i + 1; j < n_; ++j) {
        const double a = (*this)(i, j), b = (*this)(j, i);
        if (std::abs(a - b) > rel_tol * std::max({1.0, std::abs(a), std::abs(b)})) return false;
      }
    }
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

inline DistanceMatrix pairwise_distances(const PointCloud& cloud) {
  if (cloud.empty()) throw Error(ErrorKind::EmptySampleSet, "empty point cloud");
  const std::size_t n = cloud.size();
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i) = distance(cloud.point(i), cloud.point(j));
  return d;
}

struct Edge {
  double time;
  vertex_t a, b;  // a < b
};

struct Triangle {
  double time;
  vertex_t a, b, c;  // a < b < c
};

/// One simplex of any dimension; unused vertex slots hold kNoVertex.
struct Simplex {
  static constexpr vertex_t kNoVertex = std::numeric_limits<vertex_t>::max();
  int dim;
  double time;
  std::array<vertex_t, 3> vertices;
};

inline bool filtration_less(const Edge& x, const Edge& y) noexcept {
  return std::tie(x.time, x.a, x.b) < std::tie(y.time, y.a, y.b);
}

inline bool filtration_less(const Triangle& x, const Triangle& y) noexcept {
  return std::tie(x.time, x.a, x.b, x.c) < std::tie(y.time, y.a, y.b, y.c);
}

inline bool filtration_less(const Simplex& x, const Simplex& y) noexcept {
  return std::tie(x.time, x.dim, x.vertices) < std::tie(y.time, y.dim, y.vertices);
}

class FilteredComplex {
 public:
  FilteredComplex() = default;

  /// Takes an explicit edge list; it must be the Rips edge set in filtration order.
  FilteredComplex(DistanceMatrix distances, std::vector<Edge> edges, double threshold, int max_dim)
      : distances_(std::move(distances)), edges_(std::move(edges)), threshold_(threshold), max_dim_(max_dim) {
    validate();
  }

  std::size_t vertex_count() const noexcept { return distances_.size(); }
  const DistanceMatrix& distances() const noexcept { return distances_; }
  double threshold() const noexcept { return threshold_; }
  int max_dim() const noexcept { return max_dim_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Entry time of the triangle {a, b, c}, or +inf when it is not in the complex.
  double triangle_time(vertex_t a, vertex_t b, vertex_t c) const noexcept {
    if (max_dim_ < 2) return std::numeric_limits<double>::infinity();
    const double t = std::max({distances_(a, b), distances_(a, c), distances_(b, c)});
    return t <= threshold_ ? t : std::numeric_limits<double>::infinity();
  }

  /// All triangles in filtration order. Each triangle is found from the edge
  /// that completes it: scanning edges in order, (a, b, c) is emitted when
  /// both other edges precede (a, b).
  std::vector<Triangle> triangles() const {
    std::vector<Triangle> out;
    if (max_dim_ < 2) return out;
    const std::size_t n = vertex_count();
    constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> order(n * n, kAbsent);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      order[edges_[k].a * n + edges_[k].b] = static_cast<std::uint32_t>(k);
      order[edges_[k].b * n + edges_[k].a] = static_cast<std::uint32_t>(k);
    }
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const auto [t, a, b] = edges_[k];
      for (vertex_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        const auto ka = order[a * n + c], kb = order[b * n + c];
        if (ka >= k || kb >= k) continue;  // also rejects kAbsent
        std::array<vertex_t, 3> v{a, b, c};
        std::sort(v.begin(), v.end());
        out.push_back({t, v[0], v[1], v[2]});
      }
    }
    std::sort(out.begin(), out.end(), [](const Triangle& x, const Triangle& y) { return filtration_less(x, y); });
    return out;
  }

  /// Every simplex (vertices, edges, triangles) in filtration order.
  std::vector<Simplex> simplices() const {
    std::vector<Simplex> out;
    constexpr vertex_t none = Simplex::kNoVertex;
    for (vertex_t v = 0; v < vertex_count(); ++v) out.push_back({0, 0.0, {v, none, none}});
    for (const auto& e : edges_) out.push_back({1, e.time, {e.a, e.b, none}});
    for (const auto& t : triangles()) out.push_back({2, t.time, {t.a, t.b, t.c}});
    std::stable_sort(out.begin(), out.end(), [](const Simplex& x, const Simplex& y) { return filtration_less(x, y); });
    return out;
  }

  /// Debug dump: one `dim t v0 [v1 [v2]]` line per simplex, in filtration order.
  std::string dump() const {
    std::string out;
    char buf[96];
    for (const auto& s : simplices()) {
      std::snprintf(buf, sizeof buf, "%d %.17g", s.dim, s.time);
      out += buf;
      for (int i = 0; i <= s.dim; ++i) out += ' ' + std::to_string(s.vertices[i]);
      out += '\n';
    }
    return out;
  }

  void validate() const {
    if (max_dim_ != 1 && max_dim_ != 2) throw Error(ErrorKind::InvalidArgument, "max_dim must be 1 or 2");
    const std::size_t n = vertex_count();
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const auto& e = edges_[k];
      if (e.a >= e.b || e.b >= n) throw Error(ErrorKind::InvalidFiltrationOrder, "malformed edge " + std::to_string(k));
      if (e.time != distances_(e.a, e.b) || e.time > threshold_)
        throw Error(ErrorKind::InvalidFiltrationOrder, "edge " + std::to_string(k) + " entry time is not its length");
      if (k > 0 && !filtration_less(edges_[k - 1], e))
        throw Error(ErrorKind::InvalidFiltrationOrder, "edges out of filtration order at " + std::to_string(k));
    }
  }

 private:
  DistanceMatrix distances_;
  std::vector<Edge> edges_;
  double threshold_ = 0.0;
  int max_dim_ = 2;
};

/// Rips filtration of all edges of length <= threshold and the triangles they span.
inline FilteredComplex build_rips(const DistanceMatrix& distances, double threshold, int max_dim = 2) {
  if (!(threshold > 0.0)) throw Error(ErrorKind::InvalidArgument, "threshold must be positive");
  if (max_dim != 1 && max_dim != 2) throw Error(ErrorKind::InvalidArgument, "max_dim must be 1 or 2");
  if (!distances.is_symmetric()) throw Error(ErrorKind::MatrixNotSymmetric, "distance matrix is not symmetric");
  const std::size_t n = distances.size();
  // Symmetrize exactly so that edge times are reproducible from either side.
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i) = distances(i, j);
  std::vector<Edge> edges;
  for (vertex_t i = 0; i < n; ++i)
    for (vertex_t j = i + 1; j < n; ++j)
      if (d(i, j) <= threshold) edges.push_back({d(i, j), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return filtration_less(x, y); });
  return FilteredComplex(std::move(d), std::move(edges), threshold, max_dim);
}

}  // namespace sw1pers
