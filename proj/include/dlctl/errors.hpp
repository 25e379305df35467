#pragma once

#include <stdexcept>
#include <string>

namespace dlctl {

// Shape/geometry mismatch between operands.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Invalid argument value (bad acceleration, infeasible budget, ...).
struct ArgumentError : std::invalid_argument {
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed file contents; carries the byte offset where parsing failed.
struct FormatError : std::runtime_error {
  FormatError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (at byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  std::size_t offset;
};

// Violated API contract (e.g. backward on a non-scalar tape terminal).
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Bad key/value in a run configuration file.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Training diverged (non-finite loss); names the offending epoch/example.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dlctl
