#include "adjmi/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace adjmi {

using nlohmann::json;

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, x);
  return buf;
}

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_number(x));
}

namespace {

json envelope(json config, json results, std::uint64_t seed) {
  return json{{"config", std::move(config)},
              {"results", std::move(results)},
              {"seed", seed},
              {"tool_version", kToolVersion}};
}

json optional_number(const std::optional<double>& v) {
  return v ? json(round_significant(*v)) : json(nullptr);
}

}  // namespace

json to_json(const MetricReport& r) {
  json metrics = json::object();
  for (const auto& [name, value] : r.values) metrics[name] = round_significant(value);
  return json{{"n", r.n}, {"k", r.k}, {"l", r.l}, {"metrics", metrics}};
}

void write_text(std::ostream& os, const MetricReport& r) {
  std::size_t width = 0;
  for (const auto& [name, value] : r.values) width = std::max(width, name.size());
  for (const auto& [name, value] : r.values) {
    os << std::left << std::setw(static_cast<int>(width)) << name << "  "
       << format_number(value) << '\n';
  }
}

json to_json(const ProfileReport& r) {
  json results = json::array();
  for (std::size_t i = 0; i < r.s_values.size(); ++i) {
    results.push_back({{"s", r.s_values[i]}, {"similarity", round_significant(r.similarities[i])}});
  }
  json config{{"experiment", "profile"},
              {"n", r.n},
              {"s_ref", r.reference_s},
              {"metric", to_string(r.metric)}};
  return envelope(std::move(config), std::move(results), 0);
}

json to_json(const PrecisionReport& r) {
  const auto& c = r.config;
  json config{{"experiment", "precision"},
              {"n", c.n},
              {"k", c.k},
              {"triplets", c.triplets_per_run},
              {"runs", c.runs}};
  json scores = json::array();
  for (double s : r.per_run_scores) scores.push_back(round_significant(s));
  json results{{"mean", round_significant(r.mean)},
               {"std", round_significant(r.std)},
               {"per_run_scores", std::move(scores)}};
  return envelope(std::move(config), std::move(results), c.seed.value);
}

json to_json(const TimingReport& r) {
  const auto& c = r.config;
  json config{{"experiment", "timing"},
              {"sizes", c.sizes},
              {"k", c.k},
              {"reps", c.repetitions},
              {"min_batch_seconds", c.min_batch_seconds},
              {"end_to_end", c.end_to_end}};
  json results = json::array();
  for (const auto& e : r.entries) {
    results.push_back({{"n", e.n},
                       {"metric", e.metric},
                       {"mean_s", round_significant(e.mean_seconds)},
                       {"std_s", round_significant(e.std_seconds)},
                       {"median_s", round_significant(e.median_seconds)},
                       {"repetitions", e.repetitions},
                       {"calls_per_repetition", e.calls_per_repetition}});
  }
  return envelope(std::move(config), std::move(results), c.seed.value);
}

json to_json(const OrderingStudyReport& r) {
  const auto& c = r.config;
  json config{{"experiment", "ordering"},
              {"n", c.n},
              {"k", c.k},
              {"candidates", c.candidates},
              {"trials", c.trials},
              {"mixed_candidates", c.mixed_candidates}};
  json per_trial = json::array();
  for (const auto& v : r.per_trial) per_trial.push_back(optional_number(v));
  json results{{"median_spearman", round_significant(r.median)},
               {"undefined", r.undefined},
               {"per_trial", std::move(per_trial)}};
  return envelope(std::move(config), std::move(results), c.seed.value);
}

void write_csv(std::ostream& os, const ProfileReport& r) {
  os << "s,similarity\n";
  for (std::size_t i = 0; i < r.s_values.size(); ++i) {
    os << r.s_values[i] << ',' << format_number(r.similarities[i]) << '\n';
  }
}

void write_csv(std::ostream& os, const PrecisionReport& r) {
  os << "run,score\n";
  for (std::size_t i = 0; i < r.per_run_scores.size(); ++i) {
    os << i << ',' << format_number(r.per_run_scores[i]) << '\n';
  }
}

void write_csv(std::ostream& os, const TimingReport& r) {
  os << "n,metric,mean_s,std_s,median_s,repetitions\n";
  for (const auto& e : r.entries) {
    os << e.n << ',' << e.metric << ',' << format_number(e.mean_seconds) << ','
       << format_number(e.std_seconds) << ',' << format_number(e.median_seconds) << ','
       << e.repetitions << '\n';
  }
}

void write_csv(std::ostream& os, const OrderingStudyReport& r) {
  os << "trial,spearman\n";
  for (std::size_t i = 0; i < r.per_trial.size(); ++i) {
    os << i << ',';
    if (r.per_trial[i]) os << format_number(*r.per_trial[i]);
    os << '\n';
  }
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (out) out << content;
    out.close();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("cannot write " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path.string());
  }
}

}  // namespace adjmi
