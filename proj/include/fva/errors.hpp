#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fva {

/// Malformed input text (expressions, weights, ranges, JSON). Carries the offending offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed input that violates a semantic rule (asymmetric locality, unknown generator, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fva
