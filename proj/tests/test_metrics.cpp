#include <doctest.h>

#include <cmath>
#include <vector>

#include "adjmi/metrics.hpp"
#include "adjmi/oracle.hpp"
#include "support.hpp"

using namespace adjmi;
using adjmi::testing::close;

namespace {

const double kLn2 = std::log(2.0);

ContingencyTable table(std::initializer_list<std::vector<std::int64_t>> rows) {
  return ContingencyTable::from_rows(rows);
}

ContingencyTable identity(std::size_t n) {
  std::vector<std::int64_t> counts(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) counts[i * n + i] = 1;
  return ContingencyTable::from_counts(n, n, counts);
}

}  // namespace

TEST_CASE("entropy") {
  CHECK(entropy(std::vector<std::int64_t>{4}) == 0.0);
  CHECK(entropy(std::vector<std::int64_t>{1, 1, 1, 1}) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(entropy(std::vector<std::int64_t>{2, 2}) == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK_THROWS_AS(entropy(std::vector<std::int64_t>{2, 0}), Error);
  CHECK_THROWS_AS(entropy(std::vector<std::int64_t>{}), Error);
}

TEST_CASE("mutual information") {
  CHECK(close(mutual_information(table({{2, 0}, {0, 2}})), kLn2, 1e-15));
  CHECK(close(mutual_information(table({{1, 1}, {1, 1}})), 0.0, 1e-15));
  // Frozen from an exhaustive cell-by-cell summation.
  CHECK(close(mutual_information(table({{2, 1}, {0, 3}})), 0.3182570841474064, 1e-14));
}

TEST_CASE("variation of information") {
  CHECK(variation_of_information(table({{2, 0}, {0, 2}})) == 0.0);
  CHECK(close(variation_of_information(table({{1, 1}, {1, 1}})), 2 * kLn2, 1e-15));
  CHECK(close(variation_of_information(table({{3}, {1}})),
              std::log(4.0) - 0.75 * std::log(3.0), 1e-15));
  // Zero on permuted block tables.
  CHECK(variation_of_information(table({{0, 3, 0}, {2, 0, 0}, {0, 0, 1}})) == 0.0);
}

TEST_CASE("expected mutual information under full permutations") {
  CHECK(expected_mi_full(table({{4}})) == doctest::Approx(0.0));
  CHECK(close(expected_mi_full(identity(4)), std::log(4.0), 1e-14));
  // Mean of I over the 24 permutations of 4 samples: ln(2)/3.
  CHECK(close(expected_mi_full(table({{2, 0}, {0, 2}})), 0.23104906018664842, 1e-14));
  CHECK(close(expected_mi_full(table({{2, 1, 0}, {1, 0, 2}})), 0.2680863687152929, 1e-14));
  const std::vector<std::int64_t> rows{2, 3}, cols{5, 1};
  CHECK_THROWS_AS(expected_mi_full(rows, std::vector<std::int64_t>{4}), Error);
}

TEST_CASE("expected mutual information at large n stays finite and bounded") {
  // Marginals far beyond the factorial overflow point.
  const std::vector<std::int64_t> rows{300000, 200000, 500000};
  const std::vector<std::int64_t> cols{100000, 900000};
  const double emi = expected_mi_full(rows, cols);
  CHECK(std::isfinite(emi));
  CHECK(emi >= 0);
  // Frozen from a full-support hypergeometric sum in an independent reference.
  CHECK(emi == doctest::Approx(1.0000078636007956e-06).epsilon(1e-7));
  const std::vector<std::int64_t> r2{37, 21, 42}, c2{10, 55, 35};
  CHECK(close(expected_mi_full(r2, c2), 0.021401754982590376, 1e-13));
}

TEST_CASE("ami") {
  CHECK(close(ami(table({{3}, {1}, {2}})), 0.0, 1e-15));
  CHECK(close(ami(identity(6)), 0.0, 1e-14));
  CHECK(close(ami(table({{2, 0}, {0, 2}})), 0.4620981203732969, 1e-14));
  CHECK(close(ami(table({{2, 1, 0}, {1, 0, 2}})), 0.10680372769724611, 1e-14));
  const auto t = table({{2, 1, 0}, {1, 0, 2}});
  CHECK(close(ami(t), ami(t.sparsify()), 1e-15));
}

TEST_CASE("adjusted entropy") {
  CHECK(close(adjusted_entropy(canonicalize({1, 1, 1, 1, 1})), 0.0, 1e-15));
  CHECK(close(adjusted_entropy(canonicalize({0, 1, 2, 3, 4})), 0.0, 1e-14));
  CHECK(close(adjusted_entropy(canonicalize({0, 0, 1, 1})), 0.4620981203732969, 1e-14));
}

TEST_CASE("pami") {
  CHECK(pami(table({{3}, {1}, {2}})) == 0.0);
  CHECK(close(pami(table({{1, 1}, {1, 1}})), -0.25 * kLn2, 1e-15));
  CHECK(close(pami(table({{2, 0}, {0, 2}})), 0.34657359027997264, 1e-15));
  CHECK(close(pami(table({{2, 1, 0}, {1, 0, 2}})), 0.05933540427624928, 1e-15));
}

TEST_CASE("pami_sparse") {
  const auto diag = SparseContingencyTable::from_entries(2, 2, {{0, 0, 2}, {1, 1, 2}});
  CHECK(close(pami_sparse(diag), pami(table({{2, 0}, {0, 2}})), 1e-15));
  CHECK(pami_sparse(SparseContingencyTable::from_entries(1, 1, {{0, 0, 7}})) == 0.0);

  Rng rng(RngSeed{5});
  const auto t = testing::random_table(rng, 50, 50, 0.9);
  const double dense = pami_dense(t);
  CHECK(close(pami_sparse(t.sparsify()), dense, 1e-12 * std::max(1.0, std::abs(dense))));
}

TEST_CASE("pami dispatches to the sparse path on large sparse tables") {
  Rng rng(RngSeed{9});
  const auto t = testing::random_table(rng, 60, 60, 0.95);
  REQUIRE(t.rows() * t.cols() > kSparseMinCells);
  REQUIRE(static_cast<double>(t.nnz()) < kSparseDensity * 3600);
  CHECK(close(pami(t), pami_dense(t), 1e-12));
}

TEST_CASE("pairwise adjusted entropy") {
  CHECK(pairwise_adjusted_entropy(std::vector<std::int64_t>{9}) == 0.0);
  CHECK(close(pairwise_adjusted_entropy(std::vector<std::int64_t>(7, 1)), 0.0, 1e-15));
  CHECK(close(pairwise_adjusted_entropy(canonicalize({0, 0, 1, 1})), 0.5 * kLn2, 1e-15));
  CHECK(close(pairwise_adjusted_entropy(canonicalize({0, 0, 1, 1})),
              oracle::pami_bruteforce(canonicalize({0, 0, 1, 1}), canonicalize({0, 0, 1, 1})),
              1e-12));
  CHECK_THROWS_AS(pairwise_adjusted_entropy(std::vector<std::int64_t>{3, 0}), Error);
}

TEST_CASE("degenerate n = 1") {
  const auto one = table({{1}});
  CHECK(mutual_information(one) == 0.0);
  CHECK(variation_of_information(one) == 0.0);
  CHECK(expected_mi_full(one) == 0.0);
  CHECK(ami(one) == 0.0);
  CHECK(pami(one) == 0.0);
  CHECK(adjusted_entropy(canonicalize({42})) == 0.0);
  CHECK(pairwise_adjusted_entropy(canonicalize({42})) == 0.0);
}

TEST_CASE("symmetry and relabel invariance") {
  Rng rng(RngSeed{21});
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + rng.below(8), l = 1 + rng.below(8);
    const auto t = testing::random_table(rng, k, l, 0.3);
    const auto tt = t.transpose();
    CHECK(close(ami(t), ami(tt), 1e-12));
    CHECK(close(pami(t), pami(tt), 1e-12));
    CHECK(close(mutual_information(t), mutual_information(tt), 1e-12));
    CHECK(close(variation_of_information(t), variation_of_information(tt), 1e-12));

    // Reverse row order and rotate columns.
    std::vector<std::int64_t> permuted(k * l);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < l; ++j) permuted[(k - 1 - i) * l + (j + 1) % l] = t(i, j);
    }
    const auto p = ContingencyTable::from_counts(k, l, permuted);
    CHECK(close(ami(t), ami(p), 1e-12));
    CHECK(close(pami(t), pami(p), 1e-12));
    CHECK(close(expected_mi_full(t), expected_mi_full(p), 1e-12));
  }
}

TEST_CASE("self-similarity identities") {
  Rng rng(RngSeed{33});
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_labeling(rng, 1 + rng.below(200), 1 + rng.below(15));
    const auto self = build_contingency(a, a);
    CHECK(close(adjusted_entropy(a), ami(self), 1e-12));
    CHECK(close(pairwise_adjusted_entropy(a), pami(self), 1e-12));
    CHECK(adjusted_entropy(a) >= -1e-12);
    CHECK(pairwise_adjusted_entropy(a) >= -1e-12);
    const bool trivial = a.num_clusters() == 1 || a.num_clusters() == a.size();
    if (!trivial) {
      CHECK(adjusted_entropy(a) > 1e-12);
      CHECK(pairwise_adjusted_entropy(a) > 1e-12);
    }
  }
}

TEST_CASE("finiteness on tables with many zero and unit cells") {
  Rng rng(RngSeed{44});
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = testing::random_table(rng, 1 + rng.below(12), 1 + rng.below(12), 0.6, 2);
    for (double v : {mutual_information(t), variation_of_information(t), expected_mi_full(t),
                     ami(t), pami(t), pami_sparse(t.sparsify())}) {
      CHECK(std::isfinite(v));
    }
  }
}
