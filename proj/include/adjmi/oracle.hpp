#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "adjmi/labeling.hpp"

// Exhaustive ground truth for the permutation expectations. Deliberately shares
// no code with the closed forms in metrics.hpp.
namespace adjmi::oracle {

inline constexpr std::size_t kDefaultPermutationBound = 8;
inline constexpr std::size_t kDefaultPairBound = 200;

// Visits every permutation of {0..n-1} exactly once, in lexicographic order.
class PermutationEnumerator {
 public:
  explicit PermutationEnumerator(std::size_t n,
                                 std::size_t bound = kDefaultPermutationBound);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t count() const noexcept;
  void for_each(const std::function<void(std::span<const std::size_t>)>& visit) const;

 private:
  std::size_t n_;
};

// Visits the n^2 ordered pairs (i, j), including i == j.
class PairSwapEnumerator {
 public:
  explicit PairSwapEnumerator(std::size_t n, std::size_t bound = kDefaultPairBound);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return std::uint64_t{n_} * n_; }
  void for_each(const std::function<void(std::size_t, std::size_t)>& visit) const;

 private:
  std::size_t n_;
};

// Mutual information from raw label vectors via H(X) + H(Y) - H(X,Y).
double mutual_information_direct(std::span<const Label> x, std::span<const Label> y);

// Joint entropy H(X, Y) from raw label vectors.
double joint_entropy_direct(std::span<const Label> x, std::span<const Label> y);

// Entropy H(X) from a raw label vector.
double entropy_direct(std::span<const Label> x);

// I(a,b) - (1/n!) sum_sigma I(a, b o sigma). Throws Error(TooLarge) if n > bound.
double ami_bruteforce(const Labeling& a, const Labeling& b,
                      std::size_t bound = kDefaultPermutationBound);

// (1/n!) sum_sigma I(a, b o sigma).
double expected_mi_bruteforce(const Labeling& a, const Labeling& b,
                              std::size_t bound = kDefaultPermutationBound);

// I(a,b) - (1/n^2) sum_{i,j} I(a, b with positions i and j exchanged).
// Throws Error(TooLarge) if n > bound.
double pami_bruteforce(const Labeling& a, const Labeling& b,
                       std::size_t bound = kDefaultPairBound);

// Same expectations with the permutation applied to the first labeling.
double ami_bruteforce_swap_first(const Labeling& a, const Labeling& b,
                                 std::size_t bound = kDefaultPermutationBound);
double pami_bruteforce_swap_first(const Labeling& a, const Labeling& b,
                                  std::size_t bound = kDefaultPairBound);

}  // namespace adjmi::oracle
