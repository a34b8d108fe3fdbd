#include "adjmi/label_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>

namespace adjmi {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_record(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(trim(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  if (quoted) parse_error(line_no, "unterminated quote");
  fields.push_back(trim(field));
  return fields;
}

bool is_missing(const std::string& token) {
  return token.empty() || token == "NA" || token == "NaN" || token == "nan";
}

std::optional<std::size_t> as_index(const std::string& s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::vector<std::string> read_label_tokens(std::istream& in, const LabelFileOptions& opts) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();

  std::optional<std::size_t> column_index;
  bool header = opts.header;
  if (opts.column) {
    column_index = as_index(*opts.column);
    if (!column_index) header = true;
  }

  std::size_t first = 0;
  if (header) {
    if (lines.empty()) throw Error(ErrorKind::EmptyInput, "label file has no header row");
    if (opts.column && !column_index) {
      const auto names = split_record(lines[0], 1);
      const auto it = std::find(names.begin(), names.end(), *opts.column);
      if (it == names.end()) parse_error(1, "no column named '" + *opts.column + "'");
      column_index = static_cast<std::size_t>(it - names.begin());
    }
    first = 1;
  }

  std::vector<std::string> tokens;
  tokens.reserve(lines.size() - first);
  for (std::size_t i = first; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = split_record(lines[i], line_no);
    std::string token;
    if (column_index) {
      if (*column_index >= fields.size()) {
        parse_error(line_no, "missing column " + std::to_string(*column_index));
      }
      token = fields[*column_index];
    } else if (fields.size() == 1) {
      token = fields[0];
    } else {
      parse_error(line_no, "multiple columns; select one with --column");
    }
    if (is_missing(token)) parse_error(line_no, "missing label");
    tokens.push_back(std::move(token));
  }
  if (tokens.empty()) throw Error(ErrorKind::EmptyInput, "label file contains no labels");
  return tokens;
}

std::vector<std::string> read_label_file(const std::string& path, const LabelFileOptions& opts) {
  if (path == "-") return read_label_tokens(std::cin, opts);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_label_tokens(in, opts);
}

Labeling load_labeling(const std::string& path, const LabelFileOptions& opts) {
  return canonicalize(read_label_file(path, opts));
}

}  // namespace adjmi
