#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "adjmi/experiments.hpp"

namespace adjmi {

inline constexpr const char* kToolVersion = ADJMI_VERSION;
inline constexpr int kSignificantDigits = 12;

// x rounded to kSignificantDigits significant digits.
double round_significant(double x);
// "%.12g" rendering.
std::string format_number(double x);

// Named metric values for one clustering pair (or one clustering).
struct MetricReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<std::pair<std::string, double>> values;
};

nlohmann::json to_json(const MetricReport& r);
void write_text(std::ostream& os, const MetricReport& r);

// Reports share one envelope: {config, results, seed, tool_version}.
nlohmann::json to_json(const ProfileReport& r);
nlohmann::json to_json(const PrecisionReport& r);
nlohmann::json to_json(const TimingReport& r);
nlohmann::json to_json(const OrderingStudyReport& r);

void write_csv(std::ostream& os, const ProfileReport& r);    // s,similarity
void write_csv(std::ostream& os, const PrecisionReport& r);  // run,score
void write_csv(std::ostream& os, const TimingReport& r);     // n,metric,mean_s,std_s,...
void write_csv(std::ostream& os, const OrderingStudyReport& r);

// Writes through a temporary sibling file and renames it into place, so a
// failed write leaves no partial output. Throws std::runtime_error on failure.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace adjmi
