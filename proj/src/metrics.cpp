#include "adjmi/metrics.hpp"

#include <math.h>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace adjmi {

namespace {

using Real = long double;

Real log_factorial(std::int64_t x) {
  int sign = 0;
  return ::lgammal_r(static_cast<Real>(x) + 1.0L, &sign);
}

// ln(x!) and ln(x) for 0 <= x <= n, tabulated when n is small enough.
class LogFactorials {
 public:
  static constexpr std::int64_t kTableLimit = std::int64_t{1} << 16;

  explicit LogFactorials(std::int64_t n) {
    if (n <= kTableLimit) {
      table_.resize(static_cast<std::size_t>(n) + 1);
      logs_.resize(static_cast<std::size_t>(n) + 1);
      for (std::int64_t x = 0; x <= n; ++x) {
        table_[static_cast<std::size_t>(x)] = log_factorial(x);
        logs_[static_cast<std::size_t>(x)] = x > 0 ? std::log(static_cast<Real>(x)) : 0;
      }
    }
  }

  Real log(std::int64_t x) const {
    return logs_.empty() ? std::log(static_cast<Real>(x)) : logs_[static_cast<std::size_t>(x)];
  }

  Real operator()(std::int64_t x) const {
    return table_.empty() ? log_factorial(x) : table_[static_cast<std::size_t>(x)];
  }

 private:
  std::vector<Real> table_;
  std::vector<Real> logs_;
};

// Sum of c*ln(c) over a sequence of counts.
Real sum_xlogx(std::span<const std::int64_t> counts) {
  Real s = 0;
  for (std::int64_t c : counts) {
    if (c > 0) s += static_cast<Real>(c) * std::log(static_cast<Real>(c));
  }
  return s;
}

Real entropy_of(std::span<const std::int64_t> counts, std::int64_t n) {
  const Real nn = static_cast<Real>(n);
  return std::log(nn) - sum_xlogx(counts) / nn;
}

template <class Cells>
Real mi_over(const Cells& cells, std::span<const std::int64_t> row_sums,
             std::span<const std::int64_t> col_sums, std::int64_t n) {
  const Real log_n = std::log(static_cast<Real>(n));
  Real s = 0;
  cells([&](std::size_t i, std::size_t j, std::int64_t c) {
    const Real rc = static_cast<Real>(c);
    s += rc * (log_n + std::log(rc) - std::log(static_cast<Real>(row_sums[i])) -
               std::log(static_cast<Real>(col_sums[j])));
  });
  return std::max<Real>(0, s / static_cast<Real>(n));
}

template <class Cells>
Real vi_over(const Cells& cells, std::span<const std::int64_t> row_sums,
             std::span<const std::int64_t> col_sums, std::int64_t n) {
  Real s = 0;
  cells([&](std::size_t i, std::size_t j, std::int64_t c) {
    const Real rc = static_cast<Real>(c);
    s += rc * (std::log(static_cast<Real>(row_sums[i]) / rc) +
               std::log(static_cast<Real>(col_sums[j]) / rc));
  });
  return std::max<Real>(0, s / static_cast<Real>(n));
}

auto dense_cells(const ContingencyTable& t) {
  return [&t](auto&& visit) {
    for (std::size_t i = 0; i < t.rows(); ++i) {
      for (std::size_t j = 0; j < t.cols(); ++j) {
        if (const auto c = t(i, j); c > 0) visit(i, j, c);
      }
    }
  };
}

auto sparse_cells(const SparseContingencyTable& t) {
  return [&t](auto&& visit) {
    for (const SparseEntry& e : t.entries()) visit(e.row, e.col, e.count);
  };
}

// Sum over c of P(c) * (c/n) * ln(n c / (a b)) where c ~ Hypergeometric(n, a, b).
// Starts at the mode and walks outward with the ratio recurrence, re-anchoring
// on exact log-gamma values every kAnchorStride steps. A walk stops once the
// weight underflows, since the distribution is unimodal.
Real hypergeometric_mi_term(std::int64_t a, std::int64_t b, std::int64_t n,
                            const LogFactorials& log_factorial) {
  constexpr std::int64_t kAnchorStride = 64;
  const std::int64_t lo = std::max<std::int64_t>(1, a + b - n);
  const std::int64_t hi = std::min(a, b);
  if (lo > hi) return 0;

  const Real log_norm = log_factorial(a) + log_factorial(b) + log_factorial(n - a) +
                        log_factorial(n - b) - log_factorial(n);
  const auto weight = [&](std::int64_t c) {
    return std::exp(log_norm - log_factorial(c) - log_factorial(a - c) -
                    log_factorial(b - c) - log_factorial(n - a - b + c));
  };
  const Real log_ratio_base =
      std::log(static_cast<Real>(n)) - std::log(static_cast<Real>(a)) -
      std::log(static_cast<Real>(b));
  const Real nn = static_cast<Real>(n);
  const auto term = [&](std::int64_t c, Real p) {
    const Real rc = static_cast<Real>(c);
    return p * (rc / nn) * (log_ratio_base + log_factorial.log(c));
  };

  const std::int64_t mode = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(
          (static_cast<Real>(a) + 1) * (static_cast<Real>(b) + 1) / (nn + 2)),
      lo, hi);
  const Real p_mode = weight(mode);

  Real up = 0;
  Real p = p_mode;
  for (std::int64_t c = mode;;) {
    up += term(c, p);
    if (c == hi) break;
    const std::int64_t next = c + 1;
    if ((next - mode) % kAnchorStride == 0) {
      p = weight(next);
    } else {
      p *= static_cast<Real>(a - c) * static_cast<Real>(b - c) /
           (static_cast<Real>(c + 1) * static_cast<Real>(n - a - b + c + 1));
    }
    c = next;
    if (p == 0) break;
  }

  Real down = 0;
  p = p_mode;
  for (std::int64_t c = mode; c > lo;) {
    const std::int64_t next = c - 1;
    if ((mode - next) % kAnchorStride == 0) {
      p = weight(next);
    } else {
      p *= static_cast<Real>(c) * static_cast<Real>(n - a - b + c) /
           (static_cast<Real>(a - c + 1) * static_cast<Real>(b - c + 1));
    }
    c = next;
    if (p == 0) break;
    down += term(c, p);
  }
  return up + down;
}

// Distinct values with their multiplicities, ascending.
std::vector<std::pair<std::int64_t, std::int64_t>> size_histogram(
    std::span<const std::int64_t> sizes) {
  std::vector<std::int64_t> sorted(sizes.begin(), sizes.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> hist;
  for (std::int64_t s : sorted) {
    if (!hist.empty() && hist.back().first == s) {
      ++hist.back().second;
    } else {
      hist.emplace_back(s, 1);
    }
  }
  return hist;
}

std::int64_t checked_total(std::span<const std::int64_t> row_sums,
                           std::span<const std::int64_t> col_sums) {
  std::int64_t n = 0, m = 0;
  for (std::int64_t a : row_sums) {
    if (a <= 0) throw Error(ErrorKind::InvalidMarginal, "row marginal must be positive");
    n += a;
  }
  for (std::int64_t b : col_sums) {
    if (b <= 0) throw Error(ErrorKind::InvalidMarginal, "column marginal must be positive");
    m += b;
  }
  if (n == 0) throw Error(ErrorKind::EmptyInput, "empty marginal");
  if (n != m) throw Error(ErrorKind::InvalidMarginal, "marginals have different totals");
  return n;
}

Real expected_mi(std::span<const std::int64_t> row_sums,
                 std::span<const std::int64_t> col_sums, std::int64_t n) {
  const auto rows = size_histogram(row_sums);
  const auto cols = size_histogram(col_sums);
  const LogFactorials log_factorial(n);
  Real s = 0;
  for (const auto& [a, mult_a] : rows) {
    for (const auto& [b, mult_b] : cols) {
      s += static_cast<Real>(mult_a * mult_b) * hypergeometric_mi_term(a, b, n, log_factorial);
    }
  }
  return s;
}

// x/n * ln(x/n), zero for x <= 0.
struct XLogX {
  explicit XLogX(std::int64_t n)
      : n_(static_cast<Real>(n)), log_n_(std::log(static_cast<Real>(n))) {}
  Real operator()(std::int64_t x) const {
    if (x <= 0) return 0;
    const Real rx = static_cast<Real>(x);
    return rx / n_ * (std::log(rx) - log_n_);
  }
  Real n_;
  Real log_n_;
};

// Nonzero-cell part of the pairwise closed form, including the +f(1) shift
// that accounts for the zero cells removed from the second sum.
template <class Cells>
Real pami_nonzero_part(const Cells& cells, std::span<const std::int64_t> row_sums,
                       std::span<const std::int64_t> col_sums, std::int64_t n,
                       const XLogX& f, Real& sum_sq) {
  const Real f1 = f(1);
  Real s = 0;
  cells([&](std::size_t i, std::size_t j, std::int64_t c) {
    const std::int64_t a = row_sums[i], b = col_sums[j];
    const Real fc = f(c);
    s += static_cast<Real>(c * (n - a - b + c)) * (fc - f(c - 1));
    s += static_cast<Real>((a - c) * (b - c)) * (fc - f(c + 1) + f1);
    sum_sq += static_cast<Real>(c) * static_cast<Real>(c);
  });
  return s;
}

template <class Cells>
double pami_sparse_over(const Cells& cells, std::span<const std::int64_t> row_sums,
                        std::span<const std::int64_t> col_sums, std::int64_t n) {
  const XLogX f(n);
  Real sum_cells_sq = 0;
  const Real nonzero = pami_nonzero_part(cells, row_sums, col_sums, n, f, sum_cells_sq);
  const Real nn = static_cast<Real>(n);
  Real zero_weight = nn * nn + sum_cells_sq;
  for (std::int64_t a : row_sums) zero_weight -= static_cast<Real>(a) * static_cast<Real>(a);
  for (std::int64_t b : col_sums) zero_weight -= static_cast<Real>(b) * static_cast<Real>(b);
  return static_cast<double>(2 * (nonzero - zero_weight * f(1)) / (nn * nn));
}

}  // namespace

double entropy(std::span<const std::int64_t> marginal) {
  if (marginal.empty()) throw Error(ErrorKind::InvalidMarginal, "empty marginal");
  std::int64_t n = 0;
  for (std::int64_t c : marginal) {
    if (c <= 0) throw Error(ErrorKind::InvalidMarginal, "marginal counts must be positive");
    n += c;
  }
  return static_cast<double>(std::max<Real>(0, entropy_of(marginal, n)));
}

double mutual_information(const ContingencyTable& t) {
  return static_cast<double>(mi_over(dense_cells(t), t.row_sums(), t.col_sums(), t.total()));
}

double mutual_information(const SparseContingencyTable& t) {
  return static_cast<double>(mi_over(sparse_cells(t), t.row_sums(), t.col_sums(), t.total()));
}

double variation_of_information(const ContingencyTable& t) {
  return static_cast<double>(vi_over(dense_cells(t), t.row_sums(), t.col_sums(), t.total()));
}

double variation_of_information(const SparseContingencyTable& t) {
  return static_cast<double>(vi_over(sparse_cells(t), t.row_sums(), t.col_sums(), t.total()));
}

double expected_mi_full(const ContingencyTable& t) {
  return static_cast<double>(expected_mi(t.row_sums(), t.col_sums(), t.total()));
}

double expected_mi_full(std::span<const std::int64_t> row_sums,
                        std::span<const std::int64_t> col_sums) {
  const std::int64_t n = checked_total(row_sums, col_sums);
  return static_cast<double>(expected_mi(row_sums, col_sums, n));
}

double ami(const ContingencyTable& t) {
  const Real mi = mi_over(dense_cells(t), t.row_sums(), t.col_sums(), t.total());
  return static_cast<double>(mi - expected_mi(t.row_sums(), t.col_sums(), t.total()));
}

double ami(const SparseContingencyTable& t) {
  const Real mi = mi_over(sparse_cells(t), t.row_sums(), t.col_sums(), t.total());
  return static_cast<double>(mi - expected_mi(t.row_sums(), t.col_sums(), t.total()));
}

double adjusted_entropy(const Labeling& a) {
  const auto sizes = a.cluster_sizes();
  const auto n = static_cast<std::int64_t>(a.size());
  return static_cast<double>(entropy_of(sizes, n) - expected_mi(sizes, sizes, n));
}

double pami(const ContingencyTable& t) {
  const std::size_t cells = t.rows() * t.cols();
  if (cells > kSparseMinCells &&
      static_cast<double>(t.nnz()) < kSparseDensity * static_cast<double>(cells)) {
    return pami_sparse_over(dense_cells(t), t.row_sums(), t.col_sums(), t.total());
  }
  return pami_dense(t);
}

double pami_dense(const ContingencyTable& t) {
  const std::int64_t n = t.total();
  const XLogX f(n);
  const auto row_sums = t.row_sums();
  const auto col_sums = t.col_sums();
  Real s = 0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const std::int64_t a = row_sums[i];
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const std::int64_t b = col_sums[j];
      const std::int64_t c = t(i, j);
      const Real fc = f(c);
      if (c > 0) s += static_cast<Real>(c * (n - a - b + c)) * (fc - f(c - 1));
      s += static_cast<Real>((a - c) * (b - c)) * (fc - f(c + 1));
    }
  }
  const Real nn = static_cast<Real>(n);
  return static_cast<double>(2 * s / (nn * nn));
}

double pami_sparse(const SparseContingencyTable& t) {
  return pami_sparse_over(sparse_cells(t), t.row_sums(), t.col_sums(), t.total());
}

double pairwise_adjusted_entropy(const Labeling& a) {
  const auto sizes = a.cluster_sizes();
  return pairwise_adjusted_entropy(sizes);
}

double pairwise_adjusted_entropy(std::span<const std::int64_t> cluster_sizes) {
  std::int64_t n = 0;
  for (std::int64_t a : cluster_sizes) {
    if (a <= 0) throw Error(ErrorKind::InvalidMarginal, "cluster sizes must be positive");
    n += a;
  }
  if (n == 0) throw Error(ErrorKind::EmptyInput, "no clusters");
  const XLogX f(n);
  const Real f1 = f(1);
  Real s = 0;
  for (std::int64_t a : cluster_sizes) {
    s += static_cast<Real>(a * (n - a)) * (f(a) - f(a - 1) - f1);
  }
  const Real nn = static_cast<Real>(n);
  return static_cast<double>(2 * s / (nn * nn));
}

}  // namespace adjmi
