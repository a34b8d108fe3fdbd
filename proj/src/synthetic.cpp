#include "adjmi/synthetic.hpp"

#include <algorithm>
#include <string>

namespace adjmi {

namespace {

void check_k(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw Error(ErrorKind::InvalidK, "k must be in [1, n], got k = " + std::to_string(k) +
                                         ", n = " + std::to_string(n));
  }
}

}  // namespace

Labeling block_clustering(std::size_t n, std::size_t s) {
  if (s < 1 || s > n) {
    throw Error(ErrorKind::InvalidSize, "block size must be in [1, n], got s = " +
                                            std::to_string(s) + ", n = " + std::to_string(n));
  }
  std::vector<std::size_t> raw(n);
  for (std::size_t t = 0; t < n; ++t) raw[t] = t / s;
  return canonicalize(raw);
}

Labeling equal_blocks(std::size_t n, std::size_t k) {
  check_k(n, k);
  std::vector<std::size_t> raw;
  raw.reserve(n);
  const std::size_t base = n / k, extra = n % k;
  for (std::size_t c = 0; c < k; ++c) {
    raw.insert(raw.end(), base + (c < extra ? 1 : 0), c);
  }
  return canonicalize(raw);
}

RandomClusteringDraw draw_random_clustering(std::size_t n, std::size_t k, Rng& rng) {
  check_k(n, k);
  RandomClusteringDraw draw;
  std::vector<double> weights(k);
  double total = 0;
  while (total <= 0) {
    total = 0;
    for (double& w : weights) {
      w = rng.uniform();
      total += w;
    }
  }
  draw.probabilities.resize(k);
  std::vector<double> cumulative(k);
  double acc = 0;
  for (std::size_t c = 0; c < k; ++c) {
    draw.probabilities[c] = weights[c] / total;
    acc += weights[c];
    cumulative[c] = acc;
  }
  draw.categories.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double u = rng.uniform() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    draw.categories[t] =
        static_cast<Label>(std::min<std::size_t>(it - cumulative.begin(), k - 1));
  }
  draw.labeling = canonicalize(draw.categories);
  return draw;
}

Labeling random_clustering(std::size_t n, std::size_t k, RngSeed seed) {
  Rng rng(seed);
  return draw_random_clustering(n, k, rng).labeling;
}

Labeling perturb(const Labeling& base, double noise, Rng& rng) {
  std::vector<Label> raw(base.labels());
  const std::size_t k = base.num_clusters();
  for (Label& l : raw) {
    if (rng.uniform() < noise) l = static_cast<Label>(rng.below(k));
  }
  return canonicalize(raw);
}

}  // namespace adjmi
