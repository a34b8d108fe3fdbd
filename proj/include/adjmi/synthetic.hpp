#pragma once

#include <cstddef>
#include <vector>

#include "adjmi/labeling.hpp"
#include "adjmi/rng.hpp"

namespace adjmi {

// Consecutive runs of length s: sample t gets label floor(t / s).
// Throws Error(InvalidSize) unless 1 <= s <= n.
Labeling block_clustering(std::size_t n, std::size_t s);

// k clusters of (near) equal size: the first n % k clusters get one extra
// sample. Throws Error(InvalidK) unless 1 <= k <= n.
Labeling equal_blocks(std::size_t n, std::size_t k);

struct RandomClusteringDraw {
  std::vector<double> probabilities;  // p_1..p_k
  std::vector<Label> categories;      // raw category per sample, in 0..k-1
  Labeling labeling;                  // categories canonicalized
};

// Draws p proportional to k i.i.d. Uniform(0,1) values, then assigns each
// sample independently according to p. Empty categories vanish in the
// canonicalized labeling. Throws Error(InvalidK) unless 1 <= k <= n.
RandomClusteringDraw draw_random_clustering(std::size_t n, std::size_t k, Rng& rng);

Labeling random_clustering(std::size_t n, std::size_t k, RngSeed seed);

// Each sample keeps its label with probability 1 - noise, otherwise is moved
// to a uniformly chosen cluster among the existing ones.
Labeling perturb(const Labeling& base, double noise, Rng& rng);

}  // namespace adjmi
