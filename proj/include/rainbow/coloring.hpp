#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/binary_matroid.hpp"

namespace rainbow {

using ColourId = std::uint32_t;

/// Declared class-size shape, checked when a Coloring is built.
struct ClassBound {
  enum class Kind { Bounded, Uniform };
  Kind kind = Kind::Bounded;
  std::size_t k = 2;
};

/**
 * Total map element -> colour with dense colour ids: every colour in
 * [0, num_colours) is used at least once.
 */
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<ColourId> colour_of, std::optional<ClassBound> declared = std::nullopt);

  [[nodiscard]] auto size() const -> std::size_t { return colour_of_.size(); }
  [[nodiscard]] auto num_colours() const -> std::size_t { return classes_.size(); }
  [[nodiscard]] auto colour(ElementId e) const -> ColourId { return colour_of_[e]; }
  [[nodiscard]] auto colours() const -> const std::vector<ColourId>& { return colour_of_; }
  [[nodiscard]] auto classes() const -> const std::vector<ElementSet>& { return classes_; }
  [[nodiscard]] auto colour_class(ColourId c) const -> const ElementSet& { return classes_[c]; }
  [[nodiscard]] auto declared() const -> const std::optional<ClassBound>& { return declared_; }

  [[nodiscard]] auto is_k_bounded(std::size_t k) const -> bool;
  [[nodiscard]] auto is_k_uniform(std::size_t k) const -> bool;
  /// Colours used on a, as a bit set over colour ids.
  [[nodiscard]] auto colours_of(const ElementSet& a) const -> ElementSet;

  /// Relabels colours by first occurrence (element order).
  [[nodiscard]] auto canonical() const -> Coloring;

  /// "k; e:c,e:c,..."
  [[nodiscard]] auto to_text() const -> std::string;
  static auto parse(const std::string& text) -> Coloring;

  friend auto operator==(const Coloring& a, const Coloring& b) -> bool { return a.colour_of_ == b.colour_of_; }

 private:
  std::vector<ColourId> colour_of_;
  std::vector<ElementSet> classes_;
  std::optional<ClassBound> declared_;
};

struct ColoredMatroid {
  BinaryMatroid matroid;
  Coloring coloring;

  ColoredMatroid() = default;
  ColoredMatroid(BinaryMatroid m, Coloring c);
};

auto is_rainbow(const Coloring& c, const ElementSet& a) -> bool;
inline auto is_rainbow(const ColoredMatroid& cm, const ElementSet& a) -> bool { return is_rainbow(cm.coloring, a); }

auto colour_singular_elements(const ColoredMatroid& cm) -> ElementSet;

struct AchromaticResult {
  bool achromatic = true;
  /// Smallest rainbow circuit (canonical order) when not achromatic.
  std::optional<ElementSet> witness;
};

auto is_circuit_achromatic(const ColoredMatroid& cm) -> AchromaticResult;
/// Same test against a precomputed circuit list of cm.matroid.
auto is_circuit_achromatic(const ColoredMatroid& cm, const std::vector<ElementSet>& circuits) -> AchromaticResult;

struct Stratification {
  std::vector<ColourId> order;
  std::vector<std::size_t> prefix_ranks;
};

auto find_stratification(const ColoredMatroid& cm) -> std::optional<Stratification>;
/// Replays a stratification through closure and rank; empty string when valid.
auto check_stratification(const ColoredMatroid& cm, const Stratification& s) -> std::string;

struct CorollaryReport {
  // Parallel class / cocircuit report.
  bool parallel_cocircuit_applicable = false;
  std::string parallel_cocircuit_skip_reason;
  std::optional<ColourId> parallel_class;
  std::optional<ColourId> cocircuit_class;
  // Simple, r(M) colours, nothing singular.
  bool rainbow_circuit_applicable = false;
  std::string rainbow_circuit_skip_reason;
  std::optional<ElementSet> rainbow_circuit;
};

auto check_corollaries(const ColoredMatroid& cm) -> CorollaryReport;
auto is_parallel_class(const BinaryMatroid& m, const ElementSet& x) -> bool;
auto is_cocircuit(const BinaryMatroid& m, const ElementSet& x) -> bool;

/// Carries colours through a minor's remap; colour ids are re-densified keeping their order.
auto restrict_coloring(const ColoredMatroid& cm, const MinorResult& minor_result) -> ColoredMatroid;
auto restrict_coloring(const Coloring& c, const ElementRemap& remap) -> Coloring;

}  // namespace rainbow
