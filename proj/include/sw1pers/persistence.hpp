#pragma once

// Persistent homology in dimensions 0 and 1 of a Rips filtration over F_p,
// plus the diagram metrics used to compare results.
//
// H0 comes from union-find over the edges (elder rule). H1 is computed by
// reducing the coboundary matrix of the edges, columns in reverse filtration
// order; pairs coincide with those of the boundary-matrix reduction. Edges
// already paired in H0 are skipped (clearing), and a column whose smallest
// coface is not yet claimed is paired without being reduced.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <queue>
#include <unordered_map>
#include <vector>

#include "sw1pers/embedding.hpp"
#include "sw1pers/error.hpp"
#include "sw1pers/field.hpp"
#include "sw1pers/rips.hpp"

namespace sw1pers {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePair {
  double birth;
  double death;  // +inf for essential H0 classes

  double persistence() const noexcept { return death - birth; }
  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
  friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

struct PersistenceDiagram {
  int dim = 1;
  std::uint32_t field = 2;
  std::vector<PersistencePair> pairs;
  /// Classes still alive at the filtration threshold; death is the threshold.
  std::vector<PersistencePair> censored;
  std::optional<WindowParams> provenance;

  bool empty() const noexcept { return pairs.empty() && censored.empty(); }

  std::vector<PersistencePair> all_pairs() const {
    std::vector<PersistencePair> out = pairs;
    out.insert(out.end(), censored.begin(), censored.end());
    return out;
  }

  bool has_infinite() const noexcept {
    return std::any_of(pairs.begin(), pairs.end(), [](const auto& p) { return std::isinf(p.death); });
  }

  void sort() {
    std::sort(pairs.begin(), pairs.end());
    std::sort(censored.begin(), censored.end());
  }

  /// Copy with every coordinate multiplied by s >= 0.
  PersistenceDiagram scaled(double s) const {
    PersistenceDiagram out = *this;
    for (auto& p : out.pairs) p = {p.birth * s, p.death * s};
    for (auto& p : out.censored) p = {p.birth * s, p.death * s};
    return out;
  }
};

struct ReductionCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t h0_deaths = 0;   // edges merging two components, zero persistence included
  std::size_t h1_births = 0;   // edges closing a cycle
  std::size_t h1_deaths = 0;   // triangles killing a cycle, zero persistence included
  std::size_t columns_reduced = 0;  // coboundary columns that needed column additions
};

struct PersistenceResult {
  PersistenceDiagram h0;
  PersistenceDiagram h1;
  ReductionCounts counts;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0), min_vertex_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::iota(min_vertex_.begin(), min_vertex_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }

  /// Joins the sets of two roots; returns false if they were already joined.
  bool unite(std::size_t ra, std::size_t rb) {
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    min_vertex_[ra] = std::min(min_vertex_[ra], min_vertex_[rb]);
    return true;
  }

  std::size_t min_vertex(std::size_t root) const { return min_vertex_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
  std::vector<std::size_t> min_vertex_;
};

struct CofaceEntry {
  double time;
  vertex_t a, b, c;
  coeff_t coeff;

  bool same_simplex(const CofaceEntry& o) const noexcept { return a == o.a && b == o.b && c == o.c; }
};

// Min-heap on filtration order.
struct CofaceAfter {
  bool operator()(const CofaceEntry& x, const CofaceEntry& y) const noexcept {
    return std::tie(x.time, x.a, x.b, x.c) > std::tie(y.time, y.a, y.b, y.c);
  }
};

inline std::uint64_t triangle_key(const CofaceEntry& e, std::size_t n) noexcept {
  return (static_cast<std::uint64_t>(e.a) * n + e.b) * n + e.c;
}

// Cofaces of edge (a, b) with their incidence signs: the boundary of
// [v0, v1, v2] is [v1, v2] - [v0, v2] + [v0, v1].
template <typename Visit>
void for_each_coface(const FilteredComplex& complex, const Edge& e, const FieldPrime& field, Visit&& visit) {
  const auto& d = complex.distances();
  const double limit = complex.threshold();
  const std::size_t n = complex.vertex_count();
  const coeff_t plus = 1, minus = field.neg(1);
  for (vertex_t c = 0; c < n; ++c) {
    if (c == e.a || c == e.b) continue;
    const double t = std::max({e.time, d(e.a, c), d(e.b, c)});
    if (t > limit) continue;
    if (c < e.a)
      visit(CofaceEntry{t, c, e.a, e.b, plus});
    else if (c < e.b)
      visit(CofaceEntry{t, e.a, c, e.b, minus});
    else
      visit(CofaceEntry{t, e.a, e.b, c, plus});
  }
}

using CofaceHeap = std::priority_queue<CofaceEntry, std::vector<CofaceEntry>, CofaceAfter>;

// Pops the smallest simplex with a non-zero total coefficient and pushes it
// back; returns nullopt once the column is zero.
inline std::optional<CofaceEntry> heap_pivot(CofaceHeap& heap, const FieldPrime& field) {
  while (!heap.empty()) {
    CofaceEntry top = heap.top();
    heap.pop();
    while (!heap.empty() && heap.top().same_simplex(top)) {
      top.coeff = field.add(top.coeff, heap.top().coeff);
      heap.pop();
    }
    if (top.coeff != 0) {
      heap.push(top);
      return top;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline PersistenceResult compute_persistence(const FilteredComplex& complex, const FieldPrime& field) {
  complex.validate();
  const std::size_t n = complex.vertex_count();
  const auto& edges = complex.edges();
  PersistenceResult result;
  result.h0.dim = 0;
  result.h1.dim = 1;
  result.h0.field = result.h1.field = field.prime();
  result.counts.vertices = n;
  result.counts.edges = edges.size();

  // H0: elder rule, the component containing the smaller vertex index survives.
  std::vector<bool> negative(edges.size(), false);
  detail::UnionFind uf(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto ra = uf.find(edges[k].a), rb = uf.find(edges[k].b);
    if (ra == rb) continue;
    uf.unite(ra, rb);
    negative[k] = true;
    ++result.counts.h0_deaths;
    if (edges[k].time > 0.0) result.h0.pairs.push_back({0.0, edges[k].time});
  }
  for (std::size_t v = 0; v < n; ++v)
    if (uf.find(v) == v) result.h0.pairs.push_back({0.0, kInfinity});
  result.counts.h1_births = edges.size() - result.counts.h0_deaths;

  if (complex.max_dim() < 2) {
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (!negative[k]) result.h1.censored.push_back({edges[k].time, complex.threshold()});
    result.h0.sort();
    result.h1.sort();
    return result;
  }

  // H1: coboundary columns of the remaining edges, youngest first.
  struct ReducedColumn {
    std::vector<std::pair<std::uint32_t, coeff_t>> combination;  // edges and coefficients
    coeff_t pivot_coeff;
  };
  std::vector<ReducedColumn> columns;
  std::unordered_map<std::uint64_t, std::uint32_t> pivot_owner;  // triangle -> column slot
  pivot_owner.reserve(edges.size());

  detail::CofaceHeap heap;
  auto push_column = [&](std::uint32_t edge_index, coeff_t factor) {
    detail::for_each_coface(complex, edges[edge_index], field, [&](detail::CofaceEntry e) {
      e.coeff = field.mul(e.coeff, factor);
      heap.push(e);
    });
  };

  for (std::size_t k = edges.size(); k-- > 0;) {
    if (negative[k]) continue;
    const auto edge_index = static_cast<std::uint32_t>(k);

    // Smallest coface of the unreduced column; cofaces of one edge are distinct.
    std::optional<detail::CofaceEntry> pivot;
    detail::for_each_coface(complex, edges[k], field, [&](const detail::CofaceEntry& e) {
      if (!pivot || detail::CofaceAfter{}(*pivot, e)) pivot = e;
    });

    ReducedColumn column{{{edge_index, 1}}, 0};
    auto owner = pivot ? pivot_owner.find(detail::triangle_key(*pivot, n)) : pivot_owner.end();
    if (pivot && owner != pivot_owner.end()) {
      ++result.counts.columns_reduced;
      heap = {};
      push_column(edge_index, 1);
      pivot = detail::heap_pivot(heap, field);
      while (pivot) {
        owner = pivot_owner.find(detail::triangle_key(*pivot, n));
        if (owner == pivot_owner.end()) break;
        const ReducedColumn& other = columns[owner->second];
        const coeff_t factor = field.neg(field.mul(pivot->coeff, field.inv(other.pivot_coeff)));
        for (const auto& [j, c] : other.combination) {
          push_column(j, field.mul(c, factor));
          column.combination.emplace_back(j, field.mul(c, factor));
        }
        pivot = detail::heap_pivot(heap, field);
      }
      // Merge repeated edges in the combination.
      std::sort(column.combination.begin(), column.combination.end());
      std::vector<std::pair<std::uint32_t, coeff_t>> merged;
      for (const auto& [j, c] : column.combination) {
        if (!merged.empty() && merged.back().first == j)
          merged.back().second = field.add(merged.back().second, c);
        else
          merged.emplace_back(j, c);
      }
      std::erase_if(merged, [](const auto& jc) { return jc.second == 0; });
      column.combination = std::move(merged);
    }

    if (!pivot) {
      result.h1.censored.push_back({edges[k].time, complex.threshold()});
      continue;
    }
    ++result.counts.h1_deaths;
    column.pivot_coeff = pivot->coeff;
    pivot_owner.emplace(detail::triangle_key(*pivot, n), static_cast<std::uint32_t>(columns.size()));
    columns.push_back(std::move(column));
    if (pivot->time > edges[k].time) result.h1.pairs.push_back({edges[k].time, pivot->time});
  }

  result.h0.sort();
  result.h1.sort();
  return result;
}

// ---------------------------------------------------------------------------
// Diagram summaries and metrics

/// Largest death - birth; 0 for an empty diagram, +inf with an essential pair.
inline double max_persistence(const PersistenceDiagram& dgm) noexcept {
  double best = 0.0;
  for (const auto& p : dgm.pairs) best = std::max(best, p.persistence());
  for (const auto& p : dgm.censored) best = std::max(best, p.persistence());
  return best;
}

/// Pair attaining max_persistence, if any.
inline std::optional<PersistencePair> most_persistent(const PersistenceDiagram& dgm) {
  std::optional<PersistencePair> best;
  for (const auto& p : dgm.all_pairs())
    if (!best || p.persistence() > best->persistence()) best = p;
  return best;
}

/// 1/2 (sum (death - birth)^q)^(1/q).
inline double wasserstein_to_diagonal(const PersistenceDiagram& dgm, double q) {
  if (!(q >= 1.0)) throw Error(ErrorKind::InvalidArgument, "q must be >= 1");
  const auto pairs = dgm.all_pairs();
  double top = 0.0;
  for (const auto& p : pairs) {
    if (std::isinf(p.death)) throw Error(ErrorKind::InvalidArgument, "diagram has an infinite pair");
    top = std::max(top, p.persistence());
  }
  if (top == 0.0) return 0.0;
  double sum = 0.0;  // scaled by the top persistence to avoid overflow
  for (const auto& p : pairs) sum += std::pow(p.persistence() / top, q);
  return 0.5 * top * std::pow(sum, 1.0 / q);
}

namespace detail {

// Hopcroft-Karp on a dense bipartite graph given by an adjacency predicate.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(std::vector<std::vector<int>> adjacency, int right_size)
      : adj_(std::move(adjacency)), match_left_(adj_.size(), -1), match_right_(right_size, -1), dist_(adj_.size()) {}

  int max_matching() {
    int matched = 0;
    while (bfs())
      for (int u = 0; u < static_cast<int>(adj_.size()); ++u)
        if (match_left_[u] == -1 && dfs(u)) ++matched;
    return matched;
  }

 private:
  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
      dist_[u] = match_left_[u] == -1 ? 0 : -1;
      if (dist_[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        const int w = match_right_[v];
        if (w == -1)
          found = true;
        else if (dist_[w] == -1) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj_[u]) {
      const int w = match_right_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = -1;
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_, match_right_, dist_;
};

inline double linf(const PersistencePair& x, const PersistencePair& y) noexcept {
  return std::max(std::abs(x.birth - y.birth), std::abs(x.death - y.death));
}

}  // namespace detail

/// Exact bottleneck distance between finite diagrams, with the diagonal
/// available to both sides at half-persistence cost.
inline double bottleneck(const PersistenceDiagram& dgm1, const PersistenceDiagram& dgm2) {
  if (dgm1.dim != dgm2.dim) throw Error(ErrorKind::DimensionMismatch, "diagrams of different homology dimension");
  const auto A = dgm1.all_pairs(), B = dgm2.all_pairs();
  for (const auto* side : {&A, &B})
    for (const auto& p : *side)
      if (!std::isfinite(p.death) || !std::isfinite(p.birth))
        throw Error(ErrorKind::InvalidArgument, "bottleneck needs finite pairs");
  const int n = static_cast<int>(A.size()), m = static_cast<int>(B.size());
  if (n + m == 0) return 0.0;

  std::vector<double> candidates{0.0};
  for (const auto& a : A) candidates.push_back(0.5 * a.persistence());
  for (const auto& b : B) candidates.push_back(0.5 * b.persistence());
  for (const auto& a : A)
    for (const auto& b : B) candidates.push_back(detail::linf(a, b));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Left: A then diagonal copies of B. Right: B then diagonal copies of A.
  auto feasible = [&](double delta) {
    std::vector<std::vector<int>> adj(n + m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j)
        if (detail::linf(A[i], B[j]) <= delta) adj[i].push_back(j);
      if (0.5 * A[i].persistence() <= delta) adj[i].push_back(m + i);
    }
    for (int j = 0; j < m; ++j) {
      if (0.5 * B[j].persistence() <= delta) adj[n + j].push_back(j);
      for (int i = 0; i < n; ++i) adj[n + j].push_back(m + i);
    }
    return detail::BipartiteMatcher(std::move(adj), n + m).max_matching() == n + m;
  };

  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

/// Persistence diagram of the Rips filtration of a cloud in one call.
inline PersistenceResult cloud_persistence(const PointCloud& cloud, const FieldPrime& field, double threshold) {
  auto result = compute_persistence(build_rips(pairwise_distances(cloud), threshold), field);
  result.h0.provenance = result.h1.provenance = cloud.params;
  return result;
}

}  // namespace sw1pers
