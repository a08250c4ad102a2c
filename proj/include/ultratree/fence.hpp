#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <string_view>

#include "error.hpp"

namespace ultratree {

inline constexpr std::size_t kEnumerationFence = 10;
inline constexpr std::size_t kHolFence = 8;
inline constexpr std::size_t kIsUtFence = 6;

/// Effective capacity limit: the built-in fence, lowered (never raised) by
/// the ULTRATREE_MAX_N environment variable when it holds a positive integer.
inline std::size_t capacity_fence(std::size_t built_in) {
  const char* env = std::getenv("ULTRATREE_MAX_N");
  if (env == nullptr || *env == '\0') return built_in;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0) return built_in;
  return std::min<std::size_t>(built_in, static_cast<std::size_t>(value));
}

inline void require_within_fence(std::size_t n, std::size_t built_in, std::string_view what) {
  const std::size_t limit = capacity_fence(built_in);
  if (n > limit)
    throw Error(ErrorKind::TooLarge,
                std::string(what) + " is limited to n <= " + std::to_string(limit) + " (got " + std::to_string(n) + ")");
}

}  // namespace ultratree
