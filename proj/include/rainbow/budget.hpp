#pragma once

#include <cstddef>
#include <string>

namespace rainbow {

/**
 * Enumeration caps. Defaults can be overridden with RAINBOW_FORGE_BUDGET,
 * either a bare integer (nullity cap) or "nullity=N,census=M".
 */
struct Budget {
  std::size_t nullity_cap = 22;
  std::size_t census_cap = 5'000'000;

  static auto from_env() -> Budget;
  static auto parse(const std::string& text) -> Budget;
  /// Process-wide budget, read from the environment once.
  static auto current() -> const Budget&;
};

}  // namespace rainbow
