#include "adjmi/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#ifdef __linux__
#include <sched.h>
#endif

#include "adjmi/contingency.hpp"
#include "adjmi/metrics.hpp"
#include "adjmi/synthetic.hpp"

namespace adjmi {

const char* to_string(Metric m) noexcept {
  return m == Metric::Ami ? "ami" : "pami";
}

Metric parse_metric(const std::string& name) {
  if (name == "ami") return Metric::Ami;
  if (name == "pami") return Metric::Pami;
  throw Error(ErrorKind::ParseError, "unknown metric '" + name + "' (expected ami or pami)");
}

double similarity(Metric m, const Labeling& a, const Labeling& b) {
  const ContingencyTable t = build_contingency(a, b);
  return m == Metric::Ami ? ami(t) : pami(t);
}

ProfileReport similarity_profile(std::size_t n, std::size_t reference_s, Metric metric) {
  if (n < 2) throw Error(ErrorKind::InvalidSize, "profile needs n >= 2");
  const Labeling reference = block_clustering(n, reference_s);
  ProfileReport report;
  report.n = n;
  report.reference_s = reference_s;
  report.metric = metric;
  for (std::size_t s = 1; s <= n; ++s) {
    report.s_values.push_back(s);
    report.similarities.push_back(similarity(metric, reference, block_clustering(n, s)));
  }
  return report;
}

namespace {

double sample_std(std::span<const double> xs, double mean) {
  if (xs.size() < 2) return 0;
  double var = 0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return std::sqrt(var / static_cast<double>(xs.size() - 1));
}

// Runs job(i) for i in [0, count) on up to `threads` workers.
template <class Job>
void parallel_for(std::size_t count, std::size_t threads, Job&& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  }
  for (auto& t : pool) t.join();
}

void pin_to_current_cpu() {
#ifdef __linux__
  const int cpu = sched_getcpu();
  if (cpu < 0) return;
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(cpu, &set);
  sched_setaffinity(0, sizeof(set), &set);
#endif
}

}  // namespace

double precision_run(const PrecisionConfig& cfg, std::size_t run) {
  const RngSeed run_seed = substream(cfg.seed, run);
  std::size_t agree = 0;
  for (std::size_t t = 0; t < cfg.triplets_per_run; ++t) {
    const RngSeed triplet_seed = substream(run_seed, t);
    const Labeling a = random_clustering(cfg.n, cfg.k, substream(triplet_seed, 0));
    const Labeling b = random_clustering(cfg.n, cfg.k, substream(triplet_seed, 1));
    const Labeling c = random_clustering(cfg.n, cfg.k, substream(triplet_seed, 2));
    const ContingencyTable ab = build_contingency(a, b);
    const ContingencyTable ac = build_contingency(a, c);
    const double full = ami(ab) - ami(ac);
    const double pairwise = pami(ab) - pami(ac);
    if (full * pairwise >= 0) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(cfg.triplets_per_run);
}

PrecisionReport precision_experiment(const PrecisionConfig& cfg) {
  if (cfg.n < 1 || cfg.k < 1 || cfg.triplets_per_run < 1 || cfg.runs < 1) {
    throw Error(ErrorKind::InvalidSize, "precision config counts must all be >= 1");
  }
  if (cfg.k > cfg.n) throw Error(ErrorKind::InvalidK, "k must not exceed n");
  PrecisionReport report;
  report.config = cfg;
  report.per_run_scores.assign(cfg.runs, 0.0);
  parallel_for(cfg.runs, cfg.threads,
               [&](std::size_t r) { report.per_run_scores[r] = precision_run(cfg, r); });
  report.mean = std::accumulate(report.per_run_scores.begin(), report.per_run_scores.end(), 0.0) /
                static_cast<double>(cfg.runs);
  report.std = sample_std(report.per_run_scores, report.mean);
  return report;
}

const TimingEntry* TimingReport::find(std::size_t n, const std::string& metric) const {
  for (const auto& e : entries) {
    if (e.n == n && e.metric == metric) return &e;
  }
  return nullptr;
}

TimingReport timing_experiment(const TimingConfig& cfg) {
  if (cfg.sizes.empty()) throw Error(ErrorKind::InvalidSize, "timing needs at least one size");
  if (cfg.repetitions < 3) throw Error(ErrorKind::InvalidSize, "timing needs >= 3 repetitions");
  pin_to_current_cpu();

  TimingReport report;
  report.config = cfg;
  const auto record = [&](std::size_t n, const char* name, const TimingSample& s) {
    report.entries.push_back(
        {n, name, s.mean, s.std, s.median, cfg.repetitions, s.calls_per_repetition});
  };
  for (std::size_t n : cfg.sizes) {
    const Labeling a = equal_blocks(n, cfg.k);
    const Labeling b = random_clustering(n, cfg.k, substream(cfg.seed, n));
    const ContingencyTable table = build_contingency(a, b);
    const SparseContingencyTable sparse = table.sparsify();
    const std::size_t reps = cfg.repetitions;
    const double batch = cfg.min_batch_seconds;

    record(n, "ami", time_call([&] { return ami(table); }, reps, batch));
    record(n, "pami", time_call([&] { return pami(table); }, reps, batch));
    record(n, "pami_sparse", time_call([&] { return pami_sparse(sparse); }, reps, batch));
    if (cfg.end_to_end) {
      record(n, "ami_end_to_end",
             time_call([&] { return ami(build_contingency(a, b)); }, reps, batch));
      record(n, "pami_end_to_end",
             time_call([&] { return pami(build_contingency(a, b)); }, reps, batch));
    }
  }
  return report;
}

namespace {

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return xs[i] < xs[j]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::optional<double> spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorKind::LengthMismatch, "spearman inputs differ in length");
  }
  if (xs.size() < 2) throw Error(ErrorKind::LengthMismatch, "spearman needs >= 2 items");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const double mean = 0.5 * static_cast<double>(xs.size() + 1);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

OrderingResult ordering_agreement(const Labeling& ground_truth,
                                  std::span<const Labeling> candidates) {
  if (candidates.size() < 2) {
    throw Error(ErrorKind::InvalidSize, "ordering agreement needs at least two candidates");
  }
  OrderingResult result;
  for (const Labeling& c : candidates) {
    const ContingencyTable t = build_contingency(ground_truth, c);
    result.ami_scores.push_back(ami(t));
    result.pami_scores.push_back(pami(t));
  }
  result.spearman = spearman(result.ami_scores, result.pami_scores);
  return result;
}

Labeling ordering_trial_ground_truth(const OrderingStudyConfig& cfg, Rng& rng) {
  auto draw = draw_random_clustering(cfg.n, cfg.k, rng);
  std::sort(draw.categories.begin(), draw.categories.end());
  return canonicalize(draw.categories);
}

std::vector<Labeling> ordering_trial_candidates(const OrderingStudyConfig& cfg,
                                                const Labeling& ground_truth, Rng& rng) {
  std::vector<Labeling> out;
  out.reserve(cfg.candidates);
  const auto random_k = [&] { return 2 + rng.below(2 * cfg.k - 1); };
  for (std::size_t c = 0; c < cfg.candidates; ++c) {
    if (!cfg.mixed_candidates) {
      out.push_back(draw_random_clustering(cfg.n, cfg.k, rng).labeling);
      continue;
    }
    switch (c % 3) {
      case 0:
        out.push_back(perturb(ground_truth, rng.uniform(), rng));
        break;
      case 1:
        out.push_back(block_clustering(cfg.n, 1 + rng.below(cfg.n)));
        break;
      default:
        out.push_back(draw_random_clustering(cfg.n, std::min<std::size_t>(random_k(), cfg.n), rng)
                          .labeling);
        break;
    }
  }
  return out;
}

OrderingStudyReport ordering_study(const OrderingStudyConfig& cfg) {
  if (cfg.candidates < 2 || cfg.trials < 1) {
    throw Error(ErrorKind::InvalidSize, "ordering study needs >= 2 candidates and >= 1 trial");
  }
  OrderingStudyReport report;
  report.config = cfg;
  std::vector<double> defined;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(substream(cfg.seed, t));
    const Labeling truth = ordering_trial_ground_truth(cfg, rng);
    const auto candidates = ordering_trial_candidates(cfg, truth, rng);
    const auto result = ordering_agreement(truth, candidates);
    report.per_trial.push_back(result.spearman);
    if (result.spearman) {
      defined.push_back(*result.spearman);
    } else {
      ++report.undefined;
    }
  }
  if (!defined.empty()) {
    std::sort(defined.begin(), defined.end());
    const std::size_t mid = defined.size() / 2;
    report.median = defined.size() % 2 ? defined[mid] : 0.5 * (defined[mid - 1] + defined[mid]);
  }
  return report;
}

}  // namespace adjmi
