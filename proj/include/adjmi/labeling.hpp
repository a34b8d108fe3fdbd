#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "adjmi/error.hpp"

namespace adjmi {

using Label = std::uint32_t;

// Cluster assignment of n >= 1 samples, labels consecutive from 0 in order of
// first appearance.
class Labeling {
 public:
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t num_clusters() const noexcept { return num_clusters_; }
  Label operator[](std::size_t i) const noexcept { return labels_[i]; }

  // Cluster sizes a_i, indexed by canonical label.
  std::vector<std::int64_t> cluster_sizes() const;

  bool operator==(const Labeling&) const = default;

  template <class T>
  friend Labeling canonicalize(std::span<const T> raw);

 private:
  std::vector<Label> labels_;
  std::size_t num_clusters_ = 0;
};

template <class T>
Labeling canonicalize(std::span<const T> raw) {
  if (raw.empty()) {
    throw Error(ErrorKind::EmptyInput, "labeling must contain at least one sample");
  }
  Labeling out;
  out.labels_.reserve(raw.size());
  std::unordered_map<T, Label> ids;
  for (const T& value : raw) {
    auto [it, inserted] = ids.try_emplace(value, static_cast<Label>(ids.size()));
    out.labels_.push_back(it->second);
  }
  out.num_clusters_ = ids.size();
  return out;
}

template <class T>
Labeling canonicalize(const std::vector<T>& raw) {
  return canonicalize(std::span<const T>(raw));
}

inline Labeling canonicalize(std::initializer_list<int> raw) {
  return canonicalize(std::span<const int>(raw.begin(), raw.size()));
}

}  // namespace adjmi
