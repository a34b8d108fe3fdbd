// adjmi: compare clusterings with full and pairwise adjusted mutual information,
// and run the synthetic experiment suites.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adjmi/contingency.hpp"
#include "adjmi/experiments.hpp"
#include "adjmi/label_io.hpp"
#include "adjmi/metrics.hpp"
#include "adjmi/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitLength = 3;

int exit_code_for(adjmi::ErrorKind kind) {
  switch (kind) {
    case adjmi::ErrorKind::LengthMismatch: return kExitLength;
    case adjmi::ErrorKind::ParseError:
    case adjmi::ErrorKind::EmptyInput:
    case adjmi::ErrorKind::InvalidSize:
    case adjmi::ErrorKind::InvalidK: return kExitParse;
    default: return kExitFailure;
  }
}

struct InputOptions {
  std::string column;
  bool header = false;

  adjmi::LabelFileOptions to_options() const {
    adjmi::LabelFileOptions o;
    if (!column.empty()) o.column = column;
    o.header = header;
    return o;
  }
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--column", in.column, "CSV column to read, by header name or 0-based index");
  cmd->add_flag("--header", in.header, "skip the first row");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t parse_count(const std::string& token) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || v < 1 || v != std::floor(v) || v > 1e12) {
    throw adjmi::Error(adjmi::ErrorKind::ParseError, "invalid size '" + token + "'");
  }
  return static_cast<std::size_t>(v);
}

// "100,1000,5000" or a decade range "1e2..1e6".
std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = parse_count(text.substr(0, dots));
    const std::size_t hi = parse_count(text.substr(dots + 2));
    if (lo > hi) throw adjmi::Error(adjmi::ErrorKind::ParseError, "empty size range " + text);
    for (std::size_t n = lo; n <= hi; n *= 10) sizes.push_back(n);
    return sizes;
  }
  for (const auto& item : split_commas(text)) sizes.push_back(parse_count(item));
  if (sizes.empty()) throw adjmi::Error(adjmi::ErrorKind::ParseError, "no sizes given");
  return sizes;
}

void emit(const adjmi::MetricReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << adjmi::to_json(report).dump(2) << '\n';
  } else {
    adjmi::write_text(std::cout, report);
  }
}

int run_compare(const std::string& path_a, const std::string& path_b,
                const std::string& metrics_list, const std::string& format,
                const InputOptions& input) {
  const auto a = adjmi::load_labeling(path_a, input.to_options());
  const auto b = adjmi::load_labeling(path_b, input.to_options());
  if (a.size() != b.size()) {
    throw adjmi::Error(adjmi::ErrorKind::LengthMismatch,
                      "label files differ in length (" + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  const auto metrics = split_commas(metrics_list);
  for (const auto& m : metrics) {
    if (m != "mi" && m != "vi" && m != "ami" && m != "pami" && m != "pami-sparse" && m != "emi") {
      throw adjmi::Error(adjmi::ErrorKind::ParseError, "unknown metric '" + m + "'");
    }
  }

  adjmi::MetricReport report;
  report.n = a.size();
  report.k = a.num_clusters();
  report.l = b.num_clusters();
  const auto sparse = adjmi::build_sparse_contingency(a, b);
  const bool dense_ok = report.k <= adjmi::kMaxDenseCells / report.l;
  const auto dense = dense_ok ? std::optional(sparse.densify()) : std::nullopt;

  for (const auto& m : metrics) {
    double v = 0;
    if (m == "mi") {
      v = adjmi::mutual_information(sparse);
    } else if (m == "vi") {
      v = adjmi::variation_of_information(sparse);
    } else if (m == "emi") {
      v = adjmi::expected_mi_full(sparse.row_sums(), sparse.col_sums());
    } else if (m == "ami") {
      v = adjmi::ami(sparse);
    } else if (m == "pami") {
      v = dense ? adjmi::pami(*dense) : adjmi::pami_sparse(sparse);
    } else {
      v = adjmi::pami_sparse(sparse);
    }
    report.values.emplace_back(m, v);
  }
  emit(report, format);
  return kExitOk;
}

int run_info(const std::string& path, const std::string& format, const InputOptions& input) {
  const auto a = adjmi::load_labeling(path, input.to_options());
  const auto sizes = a.cluster_sizes();
  adjmi::MetricReport report;
  report.n = a.size();
  report.k = a.num_clusters();
  report.values = {{"entropy", adjmi::entropy(sizes)},
                   {"adjusted_entropy", adjmi::adjusted_entropy(a)},
                   {"pairwise_adjusted_entropy", adjmi::pairwise_adjusted_entropy(sizes)}};
  emit(report, format);
  return kExitOk;
}

struct OutputOptions {
  std::string out;
  std::string json;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "report file; .json writes JSON, anything else CSV");
  cmd->add_option("--json", o.json, "additional JSON report file");
}

// Summary lines go to stderr when the report itself is printed on stdout.
std::ostream& summary_stream(const OutputOptions& o) {
  return o.out.empty() && o.json.empty() ? std::cerr : std::cout;
}

bool is_json_path(const std::string& path) {
  return std::filesystem::path(path).extension() == ".json";
}

template <class Report>
void write_outputs(const Report& report, const OutputOptions& o) {
  std::vector<std::filesystem::path> written;
  try {
    if (!o.out.empty()) {
      std::ostringstream body;
      if (is_json_path(o.out)) {
        body << adjmi::to_json(report).dump(2) << '\n';
      } else {
        adjmi::write_csv(body, report);
      }
      adjmi::write_file_atomically(o.out, body.str());
      written.emplace_back(o.out);
    }
    if (!o.json.empty()) {
      adjmi::write_file_atomically(o.json, adjmi::to_json(report).dump(2) + "\n");
      written.emplace_back(o.json);
    }
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) std::filesystem::remove(p, ec);
    throw;
  }
  if (o.out.empty() && o.json.empty()) std::cout << adjmi::to_json(report).dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Full and pairwise adjusted mutual information for clusterings"};
  app.set_version_flag("--version", std::string(adjmi::kToolVersion));
  app.require_subcommand(1);

  std::string format = "text";
  InputOptions input;

  std::string file_a, file_b, metrics = "mi,vi,ami,pami";
  auto* compare = app.add_subcommand("compare", "compare two label files");
  compare->add_option("file_a", file_a, "first label file ('-' for stdin)")->required();
  compare->add_option("file_b", file_b, "second label file")->required();
  compare->add_option("--metrics", metrics, "comma list of mi,vi,ami,pami,pami-sparse,emi");
  compare->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_input_options(compare, input);

  std::string info_file;
  auto* info = app.add_subcommand("info", "information content of one label file");
  info->add_option("file", info_file, "label file ('-' for stdin)")->required();
  info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_input_options(info, input);

  auto* experiment = app.add_subcommand("experiment", "run a synthetic experiment suite");
  experiment->require_subcommand(1);
  OutputOptions output;
  std::uint64_t seed = 0;

  std::size_t profile_n = 100, s_ref = 10;
  std::string profile_metric = "pami";
  auto* profile = experiment->add_subcommand("profile", "similarity of A^(s_ref) and A^(s)");
  profile->add_option("--n", profile_n)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  profile->add_option("--s-ref", s_ref)->check(CLI::PositiveNumber);
  profile->add_option("--metric", profile_metric)->check(CLI::IsMember({"ami", "pami"}));
  add_output_options(profile, output);

  adjmi::PrecisionConfig precision_cfg;
  auto* precision = experiment->add_subcommand("precision", "agreement on random triplets");
  precision->add_option("--n", precision_cfg.n)->check(CLI::PositiveNumber);
  precision->add_option("--k", precision_cfg.k)->check(CLI::PositiveNumber);
  precision->add_option("--triplets", precision_cfg.triplets_per_run)->check(CLI::PositiveNumber);
  precision->add_option("--runs", precision_cfg.runs)->check(CLI::PositiveNumber);
  precision->add_option("--threads", precision_cfg.threads, "0 uses every hardware thread");
  precision->add_option("--seed", seed);
  add_output_options(precision, output);

  adjmi::TimingConfig timing_cfg;
  std::string sizes = "1e2..1e6";
  auto* timing = experiment->add_subcommand("timing", "wall-clock time against n");
  timing->add_option("--k", timing_cfg.k)->check(CLI::PositiveNumber);
  timing->add_option("--sizes", sizes, "comma list or decade range such as 1e2..1e6");
  timing->add_option("--reps", timing_cfg.repetitions)->check(CLI::Range(3, 1000000));
  timing->add_option("--min-batch", timing_cfg.min_batch_seconds, "seconds per repetition batch")
      ->check(CLI::PositiveNumber);
  timing->add_option("--seed", seed);
  add_output_options(timing, output);

  adjmi::OrderingStudyConfig ordering_cfg;
  bool random_candidates = false;
  auto* ordering = experiment->add_subcommand("ordering", "Spearman agreement of the orderings");
  ordering->add_option("--n", ordering_cfg.n)->check(CLI::PositiveNumber);
  ordering->add_option("--k", ordering_cfg.k)->check(CLI::PositiveNumber);
  ordering->add_option("--candidates", ordering_cfg.candidates)->check(CLI::Range(2, 1000000));
  ordering->add_option("--trials", ordering_cfg.trials)->check(CLI::PositiveNumber);
  ordering->add_flag("--random-candidates", random_candidates,
                     "use independent random clusterings as candidates");
  ordering->add_option("--seed", seed);
  add_output_options(ordering, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*compare) return run_compare(file_a, file_b, metrics, format, input);
    if (*info) return run_info(info_file, format, input);

    if (*profile) {
      if (s_ref > profile_n) {
        throw adjmi::Error(adjmi::ErrorKind::InvalidSize, "--s-ref must not exceed --n");
      }
      const auto report =
          adjmi::similarity_profile(profile_n, s_ref, adjmi::parse_metric(profile_metric));
      write_outputs(report, output);
      std::size_t best = 0;
      for (std::size_t i = 1; i < report.similarities.size(); ++i) {
        if (report.similarities[i] > report.similarities[best]) best = i;
      }
      summary_stream(output) << "profile " << profile_metric << " n=" << profile_n
                             << " s_ref=" << s_ref << " argmax_s=" << report.s_values[best]
                             << '\n';
      return kExitOk;
    }
    if (*precision) {
      precision_cfg.seed = adjmi::RngSeed{seed};
      const auto report = adjmi::precision_experiment(precision_cfg);
      write_outputs(report, output);
      summary_stream(output) << "precision n=" << precision_cfg.n << " k=" << precision_cfg.k
                << " mean=" << adjmi::format_number(report.mean)
                << " std=" << adjmi::format_number(report.std) << '\n';
      return kExitOk;
    }
    if (*timing) {
      timing_cfg.sizes = parse_sizes(sizes);
      timing_cfg.seed = adjmi::RngSeed{seed};
      const auto report = adjmi::timing_experiment(timing_cfg);
      write_outputs(report, output);
      for (std::size_t n : timing_cfg.sizes) {
        const auto* full = report.find(n, "ami");
        const auto* pairwise = report.find(n, "pami");
        summary_stream(output) << "timing n=" << n << " ami_s=" << adjmi::format_number(full->mean_seconds)
                  << " pami_s=" << adjmi::format_number(pairwise->mean_seconds) << " ratio="
                  << adjmi::format_number(full->mean_seconds / pairwise->mean_seconds) << '\n';
      }
      return kExitOk;
    }
    if (*ordering) {
      ordering_cfg.seed = adjmi::RngSeed{seed};
      ordering_cfg.mixed_candidates = !random_candidates;
      const auto report = adjmi::ordering_study(ordering_cfg);
      write_outputs(report, output);
      summary_stream(output) << "ordering trials=" << ordering_cfg.trials
                << " median_spearman=" << adjmi::format_number(report.median)
                << " undefined=" << report.undefined << '\n';
      return kExitOk;
    }
  } catch (const adjmi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
