#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace s3d {

using Count = std::size_t;
using TokenId = std::int32_t;
using LayerIndex = int;  // 1-based layer indices throughout

// Rejected inputs: dimension mismatches, out-of-range indices, bad configs.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// Non-finite values where finiteness is an invariant, training divergence.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// File format violations and I/O failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace s3d
