#include "adjmi/labeling.hpp"

namespace adjmi {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidMarginal: return "InvalidMarginal";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::vector<std::int64_t> Labeling::cluster_sizes() const {
  std::vector<std::int64_t> sizes(num_clusters_, 0);
  for (Label l : labels_) ++sizes[l];
  return sizes;
}

}  // namespace adjmi
