#include <doctest.h>

#include <string>
#include <vector>

#include "adjmi/contingency.hpp"
#include "support.hpp"

using namespace adjmi;

TEST_CASE("canonicalize remaps by first appearance") {
  const std::vector<std::string> raw{"b", "b", "a"};
  CHECK(canonicalize(raw).labels() == std::vector<Label>{0, 0, 1});
  CHECK(canonicalize({5, 5, 5}).labels() == std::vector<Label>{0, 0, 0});
  const auto l = canonicalize({3, 1, 3, 2});
  CHECK(l.labels() == std::vector<Label>{0, 1, 0, 2});
  CHECK(l.num_clusters() == 3);
  CHECK(l.cluster_sizes() == std::vector<std::int64_t>{2, 1, 1});
}

TEST_CASE("canonicalize rejects empty input") {
  const std::vector<int> empty;
  try {
    (void)canonicalize(empty);
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyInput);
  }
}

TEST_CASE("build_contingency examples") {
  SUBCASE("identical labelings give a diagonal table") {
    const auto t = build_contingency(canonicalize({0, 0, 1, 1}), canonicalize({0, 0, 1, 1}));
    CHECK(t == ContingencyTable::from_rows({{2, 0}, {0, 2}}));
    CHECK(t.total() == 4);
    CHECK(t.nnz() == 2);
  }
  SUBCASE("crossed design") {
    const auto t = build_contingency(canonicalize({0, 0, 1, 1}), canonicalize({0, 1, 0, 1}));
    CHECK(t == ContingencyTable::from_rows({{1, 1}, {1, 1}}));
  }
  SUBCASE("constant second labeling") {
    const auto t = build_contingency(canonicalize({0, 1, 2}), canonicalize({0, 0, 0}));
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 1);
    CHECK(t.col_sums()[0] == 3);
    CHECK(t.row_sums()[2] == 1);
  }
}

TEST_CASE("build_contingency length mismatch") {
  CHECK_THROWS_AS(build_contingency(canonicalize({0, 1}), canonicalize({0, 1, 1})), Error);
  try {
    (void)build_sparse_contingency(canonicalize({0}), canonicalize({0, 1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(ContingencyTable::from_rows({{1, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(ContingencyTable::from_rows({{1, -1}, {0, 2}}), Error);
  CHECK_THROWS_AS(SparseContingencyTable::from_entries(2, 2, {{0, 0, 1}, {0, 0, 2}, {1, 1, 1}}),
                  Error);
  CHECK_THROWS_AS(SparseContingencyTable::from_entries(2, 2, {{0, 0, 1}, {1, 1, 0}}), Error);
}

TEST_CASE("table invariants on random labelings") {
  Rng rng(RngSeed{11});
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(80);
    const auto a = testing::random_labeling(rng, n, 1 + rng.below(10));
    const auto b = testing::random_labeling(rng, n, 1 + rng.below(10));
    const auto t = build_contingency(a, b);
    const auto s = build_sparse_contingency(a, b);

    std::int64_t total = 0;
    for (auto c : t.counts()) total += c;
    CHECK(total == static_cast<std::int64_t>(n));
    CHECK(t.nnz() >= std::max(t.rows(), t.cols()));
    CHECK(t.nnz() <= t.rows() * t.cols());
    CHECK(s.nnz() == t.nnz());
    CHECK(s.densify() == t);
    CHECK(t.sparsify().densify() == t);
    CHECK(t.transpose().transpose() == t);
  }
}

TEST_CASE("diagonal_table matches the self contingency") {
  const auto a = canonicalize({4, 4, 1, 7, 7, 7});
  CHECK(diagonal_table(a) == build_contingency(a, a));
}
