#pragma once

// Reference persistence: full boundary matrix of every simplex, dense columns,
// textbook left-to-right reduction over F_p. No clearing, no cohomology, no
// shortcuts. Small inputs only.

#include <map>
#include <vector>

#include "sw1pers/persistence.hpp"

namespace sw1pers::testing {

inline PersistenceResult naive_persistence(const FilteredComplex& complex, const FieldPrime& field) {
  const auto simplices = complex.simplices();
  const std::size_t n = simplices.size();
  std::map<std::array<vertex_t, 3>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[simplices[i].vertices] = i;

  constexpr vertex_t none = Simplex::kNoVertex;
  std::vector<std::vector<coeff_t>> cols(n, std::vector<coeff_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto& s = simplices[j];
    const auto& v = s.vertices;
    if (s.dim == 1) {
      cols[j][index.at({v[0], none, none})] = field.neg(1);
      cols[j][index.at({v[1], none, none})] = 1;
    } else if (s.dim == 2) {
      cols[j][index.at({v[1], v[2], none})] = 1;
      cols[j][index.at({v[0], v[2], none})] = field.neg(1);
      cols[j][index.at({v[0], v[1], none})] = 1;
    }
  }

  auto low = [&](std::size_t j) -> long {
    for (std::size_t i = n; i-- > 0;)
      if (cols[j][i] != 0) return static_cast<long>(i);
    return -1;
  };

  std::vector<long> low_owner(n, -1);
  std::vector<long> pivot_of(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    long l = low(j);
    while (l >= 0 && low_owner[l] >= 0) {
      const auto k = static_cast<std::size_t>(low_owner[l]);
      const coeff_t factor = field.mul(cols[j][l], field.inv(cols[k][l]));
      for (std::size_t i = 0; i < n; ++i) cols[j][i] = field.sub(cols[j][i], field.mul(factor, cols[k][i]));
      l = low(j);
    }
    if (l >= 0) {
      low_owner[l] = static_cast<long>(j);
      pivot_of[j] = l;
    }
  }

  PersistenceResult r;
  r.h0.dim = 0;
  r.h1.dim = 1;
  r.h0.field = r.h1.field = field.prime();
  std::vector<bool> killed(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_of[j] < 0) continue;
    const auto i = static_cast<std::size_t>(pivot_of[j]);
    killed[i] = true;
    const double b = simplices[i].time, d = simplices[j].time;
    if (d <= b) continue;
    (simplices[i].dim == 0 ? r.h0 : r.h1).pairs.push_back({b, d});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (killed[i] || pivot_of[i] >= 0) continue;
    if (simplices[i].dim == 0) r.h0.pairs.push_back({simplices[i].time, kInfinity});
    if (simplices[i].dim == 1) r.h1.censored.push_back({simplices[i].time, complex.threshold()});
  }
  r.h0.sort();
  r.h1.sort();
  return r;
}

}  // namespace sw1pers::testing
