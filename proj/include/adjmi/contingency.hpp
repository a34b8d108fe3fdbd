#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adjmi/labeling.hpp"

namespace adjmi {

class SparseContingencyTable;

// Dense k x l table of co-occurrence counts n_ij, stored row-major.
class ContingencyTable {
 public:
  // Validates that counts are non-negative and every row and column is
  // non-empty. Throws Error(InvalidMarginal) otherwise.
  static ContingencyTable from_counts(std::size_t rows, std::size_t cols,
                                      std::vector<std::int64_t> counts);
  static ContingencyTable from_rows(
      const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t total() const noexcept { return total_; }
  std::size_t nnz() const noexcept { return nnz_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept {
    return counts_[i * cols_ + j];
  }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  std::span<const std::int64_t> row_sums() const noexcept { return row_sums_; }
  std::span<const std::int64_t> col_sums() const noexcept { return col_sums_; }

  ContingencyTable transpose() const;
  SparseContingencyTable sparsify() const;

  bool operator==(const ContingencyTable&) const = default;

 private:
  friend ContingencyTable build_contingency(const Labeling&, const Labeling&);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> row_sums_;
  std::vector<std::int64_t> col_sums_;
  std::int64_t total_ = 0;
  std::size_t nnz_ = 0;
};

struct SparseEntry {
  std::uint32_t row;
  std::uint32_t col;
  std::int64_t count;

  bool operator==(const SparseEntry&) const = default;
};

// Nonzero cells of a contingency table plus its marginals. Entries are kept
// sorted by (row, col).
class SparseContingencyTable {
 public:
  // Throws Error(InvalidMarginal) on duplicate keys, non-positive counts,
  // out-of-range indices or empty rows/columns.
  static SparseContingencyTable from_entries(std::size_t rows, std::size_t cols,
                                             std::vector<SparseEntry> entries);

  std::size_t rows() const noexcept { return row_sums_.size(); }
  std::size_t cols() const noexcept { return col_sums_.size(); }
  std::int64_t total() const noexcept { return total_; }
  std::size_t nnz() const noexcept { return entries_.size(); }

  std::span<const SparseEntry> entries() const noexcept { return entries_; }
  std::span<const std::int64_t> row_sums() const noexcept { return row_sums_; }
  std::span<const std::int64_t> col_sums() const noexcept { return col_sums_; }

  ContingencyTable densify() const;

 private:
  friend SparseContingencyTable build_sparse_contingency(const Labeling&,
                                                         const Labeling&);

  std::vector<SparseEntry> entries_;
  std::vector<std::int64_t> row_sums_;
  std::vector<std::int64_t> col_sums_;
  std::int64_t total_ = 0;
};

// Largest k*l accepted by build_contingency; beyond this use the sparse form.
inline constexpr std::size_t kMaxDenseCells = std::size_t{1} << 27;

// O(n + kl). Throws Error(LengthMismatch) if lengths differ and
// Error(TooLarge) if k*l exceeds kMaxDenseCells.
ContingencyTable build_contingency(const Labeling& a, const Labeling& b);

// O(n log n), memory O(n) regardless of k*l.
SparseContingencyTable build_sparse_contingency(const Labeling& a,
                                                const Labeling& b);

// Table of a labeling against itself: n_ii = a_i.
ContingencyTable diagonal_table(const Labeling& a);

}  // namespace adjmi
