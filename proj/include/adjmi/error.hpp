#pragma once

#include <stdexcept>
#include <string>

namespace adjmi {

enum class ErrorKind {
  EmptyInput,
  LengthMismatch,
  InvalidMarginal,
  TooLarge,
  InvalidSize,
  InvalidK,
  DegenerateInput,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace adjmi
