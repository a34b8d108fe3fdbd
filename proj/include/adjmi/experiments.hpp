#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adjmi/labeling.hpp"
#include "adjmi/rng.hpp"

namespace adjmi {

enum class Metric { Ami, Pami };

const char* to_string(Metric m) noexcept;
// Accepts "ami" and "pami". Throws Error(ParseError) otherwise.
Metric parse_metric(const std::string& name);

double similarity(Metric m, const Labeling& a, const Labeling& b);

// ---------------------------------------------------------------------------
// Similarity profile of block clusterings.

struct ProfileReport {
  std::size_t n = 0;
  std::size_t reference_s = 0;
  Metric metric = Metric::Pami;
  std::vector<std::size_t> s_values;
  std::vector<double> similarities;
};

// metric(A^(reference_s), A^(s)) for s = 1..n, with A^(s) = block_clustering(n, s).
ProfileReport similarity_profile(std::size_t n, std::size_t reference_s, Metric metric);

// ---------------------------------------------------------------------------
// Agreement of the two adjustments on random triplets.

struct PrecisionConfig {
  std::size_t n = 100;
  std::size_t k = 10;
  std::size_t triplets_per_run = 1000;
  std::size_t runs = 100;
  RngSeed seed{};
  std::size_t threads = 0;  // 0: hardware concurrency
};

struct PrecisionReport {
  PrecisionConfig config;
  double mean = 0;
  double std = 0;  // sample standard deviation of per_run_scores
  std::vector<double> per_run_scores;
};

// Fraction of triplets (A, B, C) with
// (ami(A,B) - ami(A,C)) * (pami(A,B) - pami(A,C)) >= 0, per run.
// Triplet t of run r draws A, B, C from substreams 0, 1, 2 of
// substream(substream(seed, r), t). Results do not depend on `threads`.
PrecisionReport precision_experiment(const PrecisionConfig& cfg);

// Fraction of agreeing triplets for one run.
double precision_run(const PrecisionConfig& cfg, std::size_t run);

// ---------------------------------------------------------------------------
// Wall-clock timing.

struct TimingEntry {
  std::size_t n = 0;
  std::string metric;  // ami, pami, pami_sparse, ami_end_to_end, pami_end_to_end
  double mean_seconds = 0;
  double std_seconds = 0;
  double median_seconds = 0;
  std::size_t repetitions = 0;
  std::size_t calls_per_repetition = 0;
};

struct TimingConfig {
  std::vector<std::size_t> sizes;
  std::size_t k = 10;
  std::size_t repetitions = 5;
  RngSeed seed{};
  // Each repetition loops a call until at least this long has elapsed and
  // reports the per-call average.
  double min_batch_seconds = 2e-3;
  bool end_to_end = true;
};

struct TimingReport {
  TimingConfig config;
  std::vector<TimingEntry> entries;

  const TimingEntry* find(std::size_t n, const std::string& metric) const;
};

// For each n: A = k equal blocks, B = random_clustering(n, k, substream(seed, n)).
// Times ami, pami and pami_sparse on a prebuilt table, and optionally ami and
// pami including table construction. One warm-up call per measurement is
// discarded. Throws Error(InvalidSize) if repetitions < 3 or sizes is empty.
TimingReport timing_experiment(const TimingConfig& cfg);

struct TimingSample {
  double mean = 0;
  double std = 0;
  double median = 0;
  std::size_t calls_per_repetition = 0;
};

// Times `fn` as described for timing_experiment.
template <class Fn>
TimingSample time_call(Fn&& fn, std::size_t repetitions, double min_batch_seconds);

// ---------------------------------------------------------------------------
// Rank correlation and ordering agreement.

// Spearman rank correlation with average ranks for ties. Returns nullopt when
// either sequence is constant. Throws Error(LengthMismatch) if the lengths
// differ or are < 2.
std::optional<double> spearman(std::span<const double> xs, std::span<const double> ys);

struct OrderingResult {
  std::vector<double> ami_scores;
  std::vector<double> pami_scores;
  std::optional<double> spearman;
};

// Throws Error(InvalidSize) with fewer than two candidates.
OrderingResult ordering_agreement(const Labeling& ground_truth,
                                  std::span<const Labeling> candidates);

struct OrderingStudyConfig {
  std::size_t n = 500;
  std::size_t k = 5;
  std::size_t candidates = 10;
  std::size_t trials = 100;
  RngSeed seed{};
  // Candidate mixture: perturbed ground truth, block and random clusterings.
  // With false, every candidate is an independent random clustering.
  bool mixed_candidates = true;
};

struct OrderingStudyReport {
  OrderingStudyConfig config;
  std::vector<std::optional<double>> per_trial;
  double median = 0;  // over trials with a defined correlation
  std::size_t undefined = 0;
};

// Ground truth of trial t is a random clustering whose samples are laid out
// cluster by cluster, so block candidates overlap it structurally.
std::vector<Labeling> ordering_trial_candidates(const OrderingStudyConfig& cfg,
                                                const Labeling& ground_truth, Rng& rng);
Labeling ordering_trial_ground_truth(const OrderingStudyConfig& cfg, Rng& rng);
OrderingStudyReport ordering_study(const OrderingStudyConfig& cfg);

}  // namespace adjmi

#include "adjmi/detail/timing_impl.hpp"
