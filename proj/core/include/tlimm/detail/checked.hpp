#pragma once

#include <cstdint>
#include <stdexcept>

namespace tlimm::detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

}  // namespace tlimm::detail
