#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace rainbow {

using ElementId = std::uint32_t;

/**
 * Fixed-width bit set over a ground set of at most kCapacity elements.
 * Also used for colour sets and GF(2) vectors.
 */
class ElementSet {
 public:
  static constexpr std::size_t kWords = 2;
  static constexpr std::size_t kCapacity = 64 * kWords;

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);

  static auto of(const std::vector<ElementId>& ids) -> ElementSet;
  /// {0, 1, ..., n-1}
  static auto range(std::size_t n) -> ElementSet;
  static constexpr auto from_words(std::uint64_t w0, std::uint64_t w1) -> ElementSet {
    ElementSet s;
    s.words_ = {w0, w1};
    return s;
  }

  void insert(ElementId e) { words_[e >> 6] |= bit(e); }
  void erase(ElementId e) { words_[e >> 6] &= ~bit(e); }
  void flip(ElementId e) { words_[e >> 6] ^= bit(e); }
  [[nodiscard]] auto contains(ElementId e) const -> bool { return (words_[e >> 6] & bit(e)) != 0; }

  [[nodiscard]] auto size() const -> std::size_t {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  [[nodiscard]] auto empty() const -> bool {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// Smallest member; kCapacity when empty.
  [[nodiscard]] auto first() const -> ElementId;
  /// Largest member; kCapacity when empty.
  [[nodiscard]] auto last() const -> ElementId;

  [[nodiscard]] auto intersects(const ElementSet& o) const -> bool {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  [[nodiscard]] auto subset_of(const ElementSet& o) const -> bool {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  auto operator|=(const ElementSet& o) -> ElementSet& {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  auto operator&=(const ElementSet& o) -> ElementSet& {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  auto operator^=(const ElementSet& o) -> ElementSet& {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  auto operator-=(const ElementSet& o) -> ElementSet& {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend auto operator|(ElementSet a, const ElementSet& b) -> ElementSet { return a |= b; }
  friend auto operator&(ElementSet a, const ElementSet& b) -> ElementSet { return a &= b; }
  friend auto operator^(ElementSet a, const ElementSet& b) -> ElementSet { return a ^= b; }
  friend auto operator-(ElementSet a, const ElementSet& b) -> ElementSet { return a -= b; }
  friend auto operator==(const ElementSet& a, const ElementSet& b) -> bool = default;

  /// Raw ordering on the words; fine for maps, not the canonical order.
  friend auto operator<(const ElementSet& a, const ElementSet& b) -> bool { return a.words_ < b.words_; }

  [[nodiscard]] auto elements() const -> std::vector<ElementId>;
  [[nodiscard]] auto word(std::size_t i) const -> std::uint64_t { return words_[i]; }
  [[nodiscard]] auto hash() const -> std::size_t {
    return std::hash<std::uint64_t>{}(words_[0] * 0x9E3779B97F4A7C15ULL ^ words_[1]);
  }
  /// "{0,3,5}"
  [[nodiscard]] auto to_string() const -> std::string;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      auto w = words_[i];
      while (w) {
        f(static_cast<ElementId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

 private:
  static constexpr auto bit(ElementId e) -> std::uint64_t { return std::uint64_t{1} << (e & 63); }
  std::array<std::uint64_t, kWords> words_{};
};

/// Canonical order: by size, then by the sorted id lists compared lexicographically.
auto canonical_less(const ElementSet& a, const ElementSet& b) -> bool;

struct ElementSetHash {
  auto operator()(const ElementSet& s) const -> std::size_t { return s.hash(); }
};

}  // namespace rainbow
