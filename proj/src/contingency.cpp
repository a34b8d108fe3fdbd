#include "adjmi/contingency.hpp"

#include <algorithm>
#include <string>

namespace adjmi {

namespace {

void require_nonempty_marginals(std::span<const std::int64_t> row_sums,
                                std::span<const std::int64_t> col_sums) {
  for (std::size_t i = 0; i < row_sums.size(); ++i) {
    if (row_sums[i] <= 0) {
      throw Error(ErrorKind::InvalidMarginal, "row " + std::to_string(i) + " is empty");
    }
  }
  for (std::size_t j = 0; j < col_sums.size(); ++j) {
    if (col_sums[j] <= 0) {
      throw Error(ErrorKind::InvalidMarginal, "column " + std::to_string(j) + " is empty");
    }
  }
}

}  // namespace

ContingencyTable ContingencyTable::from_counts(std::size_t rows, std::size_t cols,
                                               std::vector<std::int64_t> counts) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::EmptyInput, "contingency table needs at least one cell");
  }
  if (counts.size() != rows * cols) {
    throw Error(ErrorKind::LengthMismatch, "counts size does not match rows*cols");
  }
  ContingencyTable t;
  t.rows_ = rows;
  t.cols_ = cols;
  t.row_sums_.assign(rows, 0);
  t.col_sums_.assign(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t c = counts[i * cols + j];
      if (c < 0) throw Error(ErrorKind::InvalidMarginal, "negative count");
      t.row_sums_[i] += c;
      t.col_sums_[j] += c;
      t.total_ += c;
      if (c > 0) ++t.nnz_;
    }
  }
  require_nonempty_marginals(t.row_sums_, t.col_sums_);
  t.counts_ = std::move(counts);
  return t;
}

ContingencyTable ContingencyTable::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw Error(ErrorKind::EmptyInput, "no rows");
  const std::size_t cols = rows.front().size();
  std::vector<std::int64_t> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::LengthMismatch, "ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_counts(rows.size(), cols, std::move(flat));
}

ContingencyTable ContingencyTable::transpose() const {
  std::vector<std::int64_t> flipped(counts_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) flipped[j * rows_ + i] = counts_[i * cols_ + j];
  }
  return from_counts(cols_, rows_, std::move(flipped));
}

SparseContingencyTable ContingencyTable::sparsify() const {
  std::vector<SparseEntry> entries;
  entries.reserve(nnz_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (const auto c = counts_[i * cols_ + j]; c > 0) {
        entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c});
      }
    }
  }
  return SparseContingencyTable::from_entries(rows_, cols_, std::move(entries));
}

SparseContingencyTable SparseContingencyTable::from_entries(
    std::size_t rows, std::size_t cols, std::vector<SparseEntry> entries) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::EmptyInput, "contingency table needs at least one cell");
  }
  std::sort(entries.begin(), entries.end(), [](const SparseEntry& x, const SparseEntry& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  SparseContingencyTable t;
  t.row_sums_.assign(rows, 0);
  t.col_sums_.assign(cols, 0);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const SparseEntry& entry = entries[e];
    if (entry.row >= rows || entry.col >= cols) {
      throw Error(ErrorKind::InvalidMarginal, "entry index out of range");
    }
    if (entry.count <= 0) throw Error(ErrorKind::InvalidMarginal, "non-positive sparse entry");
    if (e > 0 && entries[e - 1].row == entry.row && entries[e - 1].col == entry.col) {
      throw Error(ErrorKind::InvalidMarginal, "duplicate sparse entry");
    }
    t.row_sums_[entry.row] += entry.count;
    t.col_sums_[entry.col] += entry.count;
    t.total_ += entry.count;
  }
  require_nonempty_marginals(t.row_sums_, t.col_sums_);
  t.entries_ = std::move(entries);
  return t;
}

ContingencyTable SparseContingencyTable::densify() const {
  const std::size_t k = rows(), l = cols();
  std::vector<std::int64_t> counts(k * l, 0);
  for (const SparseEntry& e : entries_) counts[e.row * l + e.col] = e.count;
  return ContingencyTable::from_counts(k, l, std::move(counts));
}

ContingencyTable build_contingency(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "labelings have different lengths (" + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + ")");
  }
  const std::size_t k = a.num_clusters(), l = b.num_clusters();
  if (k > kMaxDenseCells / l) {
    throw Error(ErrorKind::TooLarge, "dense contingency table would have " +
                                         std::to_string(k) + "x" + std::to_string(l) +
                                         " cells");
  }
  ContingencyTable t;
  t.rows_ = k;
  t.cols_ = l;
  t.counts_.assign(k * l, 0);
  t.row_sums_.assign(k, 0);
  t.col_sums_.assign(l, 0);
  const auto& la = a.labels();
  const auto& lb = b.labels();
  for (std::size_t s = 0; s < la.size(); ++s) {
    ++t.counts_[std::size_t{la[s]} * l + lb[s]];
    ++t.row_sums_[la[s]];
    ++t.col_sums_[lb[s]];
  }
  t.total_ = static_cast<std::int64_t>(la.size());
  t.nnz_ = static_cast<std::size_t>(
      std::count_if(t.counts_.begin(), t.counts_.end(), [](std::int64_t c) { return c > 0; }));
  return t;
}

SparseContingencyTable build_sparse_contingency(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "labelings have different lengths (" + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + ")");
  }
  const auto& la = a.labels();
  const auto& lb = b.labels();
  std::vector<std::uint64_t> keys(la.size());
  for (std::size_t s = 0; s < la.size(); ++s) {
    keys[s] = (std::uint64_t{la[s]} << 32) | lb[s];
  }
  std::sort(keys.begin(), keys.end());

  SparseContingencyTable t;
  t.row_sums_ = a.cluster_sizes();
  t.col_sums_ = b.cluster_sizes();
  t.total_ = static_cast<std::int64_t>(la.size());
  for (std::size_t s = 0; s < keys.size();) {
    std::size_t e = s;
    while (e < keys.size() && keys[e] == keys[s]) ++e;
    t.entries_.push_back({static_cast<std::uint32_t>(keys[s] >> 32),
                          static_cast<std::uint32_t>(keys[s] & 0xffffffffu),
                          static_cast<std::int64_t>(e - s)});
    s = e;
  }
  return t;
}

ContingencyTable diagonal_table(const Labeling& a) {
  const auto sizes = a.cluster_sizes();
  const std::size_t k = sizes.size();
  if (k > kMaxDenseCells / k) {
    throw Error(ErrorKind::TooLarge, "diagonal table too large for dense storage");
  }
  std::vector<std::int64_t> counts(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) counts[i * k + i] = sizes[i];
  return ContingencyTable::from_counts(k, k, std::move(counts));
}

}  // namespace adjmi
