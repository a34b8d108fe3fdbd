#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "adjmi/label_io.hpp"
#include "adjmi/report.hpp"

using namespace adjmi;

namespace {

std::vector<std::string> tokens(const std::string& text, LabelFileOptions opts = {}) {
  std::istringstream in(text);
  return read_label_tokens(in, opts);
}

ErrorKind kind_of(const std::string& text, LabelFileOptions opts = {}) {
  try {
    tokens(text, opts);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("plain label files") {
  CHECK(tokens("a\nb\na\n") == std::vector<std::string>{"a", "b", "a"});
  CHECK(tokens("1\r\n2\r\n\n\n") == std::vector<std::string>{"1", "2"});
  CHECK(tokens("  x  \ny") == std::vector<std::string>{"x", "y"});
}

TEST_CASE("csv label files") {
  LabelFileOptions by_name;
  by_name.column = "cluster";
  CHECK(tokens("id,cluster\n0,a\n1,\"b,c\"\n", by_name) == std::vector<std::string>{"a", "b,c"});
  LabelFileOptions by_index;
  by_index.column = "1";
  CHECK(tokens("0,x\n1,y\n", by_index) == std::vector<std::string>{"x", "y"});
  LabelFileOptions header;
  header.header = true;
  CHECK(tokens("label\n3\n4\n", header) == std::vector<std::string>{"3", "4"});
}

TEST_CASE("label file errors carry the line number") {
  try {
    tokens("a\n\nb\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(kind_of("a\nNA\n") == ErrorKind::ParseError);
  CHECK(kind_of("a,b\n") == ErrorKind::ParseError);
  CHECK(kind_of("\"open\n") == ErrorKind::ParseError);
  CHECK(kind_of("\n\n") == ErrorKind::EmptyInput);
  LabelFileOptions missing;
  missing.column = "nope";
  CHECK(kind_of("a,b\n1,2\n", missing) == ErrorKind::ParseError);
  LabelFileOptions idx;
  idx.column = "3";
  CHECK(kind_of("1,2\n", idx) == ErrorKind::ParseError);
}

TEST_CASE("number formatting uses 12 significant digits") {
  CHECK(format_number(0.34657359027997264) == "0.34657359028");
  CHECK(format_number(0) == "0");
  CHECK(round_significant(1.0 / 3) == 0.333333333333);
}

TEST_CASE("json reports round-trip") {
  ProfileReport p;
  p.n = 3;
  p.reference_s = 1;
  p.metric = Metric::Ami;
  p.s_values = {1, 2, 3};
  p.similarities = {0.0, 1.0 / 3, -2.0 / 7};
  const auto j = to_json(p);
  CHECK(j.contains("config"));
  CHECK(j.contains("results"));
  CHECK(j.contains("seed"));
  CHECK(j["tool_version"] == kToolVersion);
  const std::string once = j.dump();
  CHECK(nlohmann::json::parse(once).dump() == once);

  MetricReport m{4, 2, 2, {{"pami", -0.17328679513998632}, {"vi", 0.0}}};
  const std::string dumped = to_json(m).dump();
  CHECK(nlohmann::json::parse(dumped).dump() == dumped);
  CHECK(to_json(m)["metrics"]["pami"].get<double>() == -0.173286795140);
}

TEST_CASE("atomic file writes") {
  const auto dir = std::filesystem::temp_directory_path() / "adjmi_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  write_file_atomically(path, "s,similarity\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "s,similarity");
  CHECK_FALSE(std::filesystem::exists(dir / "out.csv.partial"));
  CHECK_THROWS(write_file_atomically(dir / "missing" / "x.csv", "data"));
  CHECK_FALSE(std::filesystem::exists(dir / "missing" / "x.csv.partial"));
  std::filesystem::remove_all(dir);
}
