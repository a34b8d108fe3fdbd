#include "adjmi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace adjmi::oracle {

namespace {

void check_bound(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw Error(ErrorKind::TooLarge, "exhaustive enumeration limited to n <= " +
                                         std::to_string(bound) + ", got n = " +
                                         std::to_string(n));
  }
}

long double entropy_of_counts(std::span<const std::size_t> counts, std::size_t n) {
  long double h = 0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const long double p = static_cast<long double>(c) / static_cast<long double>(n);
    h -= p * std::log(p);
  }
  return h;
}

std::size_t label_range(std::span<const Label> x) {
  return x.empty() ? 0 : std::size_t{*std::max_element(x.begin(), x.end())} + 1;
}

void check_same_length(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "labelings differ in length");
}

// Mean over all n! permutations sigma of I(fixed, moved o sigma).
long double mean_mi_over_permutations(const Labeling& fixed, const Labeling& moved,
                                      std::size_t bound) {
  const std::size_t n = fixed.size();
  PermutationEnumerator perms(n, bound);
  std::vector<Label> shuffled(n);
  long double sum = 0;
  perms.for_each([&](std::span<const std::size_t> sigma) {
    for (std::size_t t = 0; t < n; ++t) shuffled[t] = moved[sigma[t]];
    sum += mutual_information_direct(fixed.labels(), shuffled);
  });
  return sum / static_cast<long double>(perms.count());
}

long double mean_mi_over_swaps(const Labeling& fixed, const Labeling& moved,
                               std::size_t bound) {
  const std::size_t n = fixed.size();
  PairSwapEnumerator pairs(n, bound);
  std::vector<Label> swapped(moved.labels());
  long double sum = 0;
  pairs.for_each([&](std::size_t i, std::size_t j) {
    std::swap(swapped[i], swapped[j]);
    sum += mutual_information_direct(fixed.labels(), swapped);
    std::swap(swapped[i], swapped[j]);
  });
  return sum / static_cast<long double>(pairs.count());
}

}  // namespace

PermutationEnumerator::PermutationEnumerator(std::size_t n, std::size_t bound) : n_(n) {
  check_bound(n, bound);
}

std::uint64_t PermutationEnumerator::count() const noexcept {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n_; ++i) f *= i;
  return f;
}

void PermutationEnumerator::for_each(
    const std::function<void(std::span<const std::size_t>)>& visit) const {
  std::vector<std::size_t> sigma(n_);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    visit(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

PairSwapEnumerator::PairSwapEnumerator(std::size_t n, std::size_t bound) : n_(n) {
  check_bound(n, bound);
}

void PairSwapEnumerator::for_each(
    const std::function<void(std::size_t, std::size_t)>& visit) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) visit(i, j);
  }
}

double entropy_direct(std::span<const Label> x) {
  std::vector<std::size_t> counts(label_range(x), 0);
  for (Label v : x) ++counts[v];
  return static_cast<double>(entropy_of_counts(counts, x.size()));
}

double joint_entropy_direct(std::span<const Label> x, std::span<const Label> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "labelings differ in length");
  const std::size_t ky = label_range(y);
  std::vector<std::size_t> counts(label_range(x) * ky, 0);
  for (std::size_t t = 0; t < x.size(); ++t) ++counts[std::size_t{x[t]} * ky + y[t]];
  return static_cast<double>(entropy_of_counts(counts, x.size()));
}

double mutual_information_direct(std::span<const Label> x, std::span<const Label> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "labelings differ in length");
  const std::size_t kx = label_range(x), ky = label_range(y);
  std::vector<std::size_t> cx(kx, 0), cy(ky, 0), cxy(kx * ky, 0);
  for (std::size_t t = 0; t < x.size(); ++t) {
    ++cx[x[t]];
    ++cy[y[t]];
    ++cxy[std::size_t{x[t]} * ky + y[t]];
  }
  const std::size_t n = x.size();
  return static_cast<double>(entropy_of_counts(cx, n) + entropy_of_counts(cy, n) -
                             entropy_of_counts(cxy, n));
}

double expected_mi_bruteforce(const Labeling& a, const Labeling& b, std::size_t bound) {
  check_same_length(a, b);
  return static_cast<double>(mean_mi_over_permutations(a, b, bound));
}

double ami_bruteforce(const Labeling& a, const Labeling& b, std::size_t bound) {
  check_same_length(a, b);
  const long double expected = mean_mi_over_permutations(a, b, bound);
  return static_cast<double>(mutual_information_direct(a.labels(), b.labels()) - expected);
}

double pami_bruteforce(const Labeling& a, const Labeling& b, std::size_t bound) {
  check_same_length(a, b);
  const long double expected = mean_mi_over_swaps(a, b, bound);
  return static_cast<double>(mutual_information_direct(a.labels(), b.labels()) - expected);
}

double ami_bruteforce_swap_first(const Labeling& a, const Labeling& b, std::size_t bound) {
  check_same_length(a, b);
  const long double expected = mean_mi_over_permutations(b, a, bound);
  return static_cast<double>(mutual_information_direct(a.labels(), b.labels()) - expected);
}

double pami_bruteforce_swap_first(const Labeling& a, const Labeling& b, std::size_t bound) {
  check_same_length(a, b);
  const long double expected = mean_mi_over_swaps(b, a, bound);
  return static_cast<double>(mutual_information_direct(a.labels(), b.labels()) - expected);
}

}  // namespace adjmi::oracle
