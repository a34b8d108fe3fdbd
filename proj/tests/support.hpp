#pragma once

#include <cmath>
#include <vector>

#include "adjmi/contingency.hpp"
#include "adjmi/labeling.hpp"
#include "adjmi/rng.hpp"

namespace adjmi::testing {

// Random labeling of n samples over at most k raw labels.
inline Labeling random_labeling(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> raw(n);
  for (auto& v : raw) v = rng.below(k);
  return canonicalize(raw);
}

// Random valid k x l table: nonnegative counts with the given fraction of
// zeros, every row and column kept nonempty.
inline ContingencyTable random_table(Rng& rng, std::size_t k, std::size_t l,
                                     double zero_fraction, std::int64_t max_count = 9) {
  std::vector<std::int64_t> counts(k * l);
  for (auto& c : counts) {
    c = rng.uniform() < zero_fraction ? 0 : 1 + static_cast<std::int64_t>(rng.below(max_count));
  }
  for (std::size_t i = 0; i < k; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < l; ++j) any = any || counts[i * l + j] > 0;
    if (!any) counts[i * l + rng.below(l)] = 1;
  }
  for (std::size_t j = 0; j < l; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < k; ++i) any = any || counts[i * l + j] > 0;
    if (!any) counts[rng.below(k) * l + j] = 1;
  }
  return ContingencyTable::from_counts(k, l, std::move(counts));
}

// Expands a table back into a pair of labelings.
inline std::pair<Labeling, Labeling> labelings_of(const ContingencyTable& t) {
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      for (std::int64_t c = 0; c < t(i, j); ++c) {
        a.push_back(i);
        b.push_back(j);
      }
    }
  }
  return {canonicalize(a), canonicalize(b)};
}

inline bool close(double x, double y, double tol) { return std::abs(x - y) <= tol; }

}  // namespace adjmi::testing
