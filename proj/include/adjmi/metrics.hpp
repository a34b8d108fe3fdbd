#pragma once

#include <cstdint>
#include <span>

#include "adjmi/contingency.hpp"
#include "adjmi/labeling.hpp"

// Information-theoretic comparison of clusterings. Every value is in nats.
// All functions are pure and thread-safe.
namespace adjmi {

// -sum (c/n) ln(c/n) over a marginal of positive counts.
// Throws Error(InvalidMarginal) if any count is <= 0 or the marginal is empty.
double entropy(std::span<const std::int64_t> marginal);

double mutual_information(const ContingencyTable& t);
double mutual_information(const SparseContingencyTable& t);

// H(X|Y) + H(Y|X).
double variation_of_information(const ContingencyTable& t);
double variation_of_information(const SparseContingencyTable& t);

// Expected mutual information E[I(X, Y o sigma)] over all n! permutations
// sigma, i.e. the hypergeometric expectation. Depends only on the marginals.
double expected_mi_full(const ContingencyTable& t);
double expected_mi_full(std::span<const std::int64_t> row_sums,
                        std::span<const std::int64_t> col_sums);

// Adjusted mutual information, unnormalized: I - E[I(X, Y o sigma)].
double ami(const ContingencyTable& t);
double ami(const SparseContingencyTable& t);

// Adjusted entropy of a single clustering, i.e. ami of the clustering with
// itself.
double adjusted_entropy(const Labeling& a);

// Pairwise adjusted mutual information, I - E[I(X, Y o sigma_p)] where sigma_p
// exchanges two samples drawn uniformly (with replacement) from {1..n}^2.
// Uses the sparse evaluation when nnz < kSparseDensity * k * l and
// k * l > kSparseMinCells, the dense O(kl) evaluation otherwise.
double pami(const ContingencyTable& t);

inline constexpr double kSparseDensity = 0.25;
inline constexpr std::size_t kSparseMinCells = 1024;

// Closed form summed over every cell. O(kl).
double pami_dense(const ContingencyTable& t);

// Closed form summed over nonzero cells only, with the zero cells folded into
// a marginal-only correction. O(m + k + l).
double pami_sparse(const SparseContingencyTable& t);

// pami of a clustering with itself, O(k).
double pairwise_adjusted_entropy(const Labeling& a);
double pairwise_adjusted_entropy(std::span<const std::int64_t> cluster_sizes);

}  // namespace adjmi
