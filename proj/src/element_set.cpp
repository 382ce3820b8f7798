#include "rainbow/element_set.hpp"

#include "rainbow/errors.hpp"

namespace rainbow {

ElementSet::ElementSet(std::initializer_list<ElementId> ids) {
  for (auto e : ids) {
    if (e >= kCapacity) throw PreconditionError("element id exceeds set capacity");
    insert(e);
  }
}

auto ElementSet::of(const std::vector<ElementId>& ids) -> ElementSet {
  ElementSet s;
  for (auto e : ids) {
    if (e >= kCapacity) throw PreconditionError("element id exceeds set capacity");
    s.insert(e);
  }
  return s;
}

auto ElementSet::range(std::size_t n) -> ElementSet {
  if (n > kCapacity) throw PreconditionError("ground set exceeds set capacity");
  ElementSet s;
  for (std::size_t i = 0; i < kWords; ++i) {
    if (n >= 64 * (i + 1))
      s.words_[i] = ~std::uint64_t{0};
    else if (n > 64 * i)
      s.words_[i] = (std::uint64_t{1} << (n - 64 * i)) - 1;
  }
  return s;
}

auto ElementSet::first() const -> ElementId {
  for (std::size_t i = 0; i < kWords; ++i)
    if (words_[i]) return static_cast<ElementId>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
  return kCapacity;
}

auto ElementSet::last() const -> ElementId {
  for (std::size_t i = kWords; i-- > 0;)
    if (words_[i]) return static_cast<ElementId>(i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i])));
  return kCapacity;
}

auto ElementSet::elements() const -> std::vector<ElementId> {
  std::vector<ElementId> out;
  out.reserve(size());
  for_each([&](ElementId e) { out.push_back(e); });
  return out;
}

auto ElementSet::to_string() const -> std::string {
  std::string s = "{";
  bool first_item = true;
  for_each([&](ElementId e) {
    if (!first_item) s += ',';
    s += std::to_string(e);
    first_item = false;
  });
  return s + "}";
}

auto canonical_less(const ElementSet& a, const ElementSet& b) -> bool {
  auto sa = a.size();
  auto sb = b.size();
  if (sa != sb) return sa < sb;
  auto diff = a ^ b;
  if (diff.empty()) return false;
  // Equal sizes: the set holding the smallest differing element comes first.
  return a.contains(diff.first());
}

}  // namespace rainbow
