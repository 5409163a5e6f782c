#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ternary {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exact coefficient would leave the signed 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Raised when two series with different truncation orders are combined.
class TruncationMismatch : public Error {
 public:
  TruncationMismatch(int lhs, int rhs)
      : Error("truncation mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

// Fused a + b*c, used by every convolution inner loop.
inline bool muladd(std::int64_t& acc, std::int64_t b, std::int64_t c) {
  std::int64_t p;
  if (__builtin_mul_overflow(b, c, &p)) return false;
  return !__builtin_add_overflow(acc, p, &acc);
}

}  // namespace checked
}  // namespace ternary
