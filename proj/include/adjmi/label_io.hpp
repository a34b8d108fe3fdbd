#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "adjmi/labeling.hpp"

namespace adjmi {

struct LabelFileOptions {
  // CSV column, by header name or 0-based index. A name implies a header row.
  std::optional<std::string> column;
  // Skip the first row.
  bool header = false;
};

// Reads one label token per row. Rows are either a bare token or a
// comma-separated record; fields may be wrapped in double quotes. Blank rows at
// the end of input are ignored. Empty fields and NA/NaN are missing values.
// Throws Error(ParseError) naming the 1-based line on any malformed or missing
// entry, and Error(EmptyInput) when no rows remain.
std::vector<std::string> read_label_tokens(std::istream& in, const LabelFileOptions& opts = {});

// Path "-" reads standard input.
std::vector<std::string> read_label_file(const std::string& path,
                                         const LabelFileOptions& opts = {});

Labeling load_labeling(const std::string& path, const LabelFileOptions& opts = {});

}  // namespace adjmi
