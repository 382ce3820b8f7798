#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rainbow_search.hpp"

namespace rainbow {

/// Properties a builder promises; checked when the bundle is finalised.
struct DeclaredProperties {
  std::optional<std::size_t> epsilon;
  std::optional<std::size_t> rank;
  std::optional<bool> achromatic;
  std::optional<std::size_t> singular_count;
  std::optional<bool> simple;
};

struct InstanceBundle {
  std::string family;
  /// Serialized choice sequence, enough to rebuild the instance.
  std::string choices;
  std::optional<std::uint64_t> seed;
  std::optional<Graph> graph;
  /// The matroid is the bond matroid of graph rather than its cycle matroid.
  bool cographic = false;
  ColoredMatroid cm;
  DeclaredProperties declared;

  [[nodiscard]] auto id() const -> std::string { return family + ":" + choices; }
};

/// First declared property that fails, or an empty string.
auto declared_failure(const InstanceBundle& b) -> std::string;
/// Throws PreconditionError naming the bundle when a declared property fails.
void check_declared(const InstanceBundle& b);

// ------------------------------------------------------------ graphic, 2r-1

/**
 * Vertices v11 = 0, v12 = 1 and v_i = i; edges e1 = 0, e_i1 = 2i-3,
 * e_i2 = 2i-2; colours X1 = 0, X_i = i-1. Step i (2 <= i <= n-1) joins v_i to
 * the pair choices[i-2] of earlier vertices.
 */
using AttachChoice = std::pair<VertexId, VertexId>;

auto gen_graphic_stratified(std::size_t n, const std::vector<AttachChoice>& choices) -> InstanceBundle;
/// Number of choice sequences for n, the product of C(i,2) over 2 <= i <= n-1.
auto graphic_stratified_count(std::size_t n) -> std::uint64_t;
/// Mixed-radix decoding of a sequence index in [0, graphic_stratified_count(n)).
auto graphic_stratified_choices(std::size_t n, std::uint64_t index) -> std::vector<AttachChoice>;

// ---------------------------------------------------------- cographic, 2r-1

/// One step of the splitting chain: a split with two new parallel edges, or a loop.
struct CographicStep {
  bool loop = false;
  VertexId vertex = 0;
  SplitSpec split;
};

/**
 * G1 is a loop e1 at vertex 0. Pair steps split with k = 2, singleton steps
 * add a loop. Colour j goes to the edges created by step j+1. The matroid is
 * the bond matroid; bundles whose bond matroid is not simple are rejected.
 */
auto gen_cographic_stratified(const std::vector<CographicStep>& steps) -> InstanceBundle;
/// Same, returning nothing when the chain gives a non-simple or chromatic bundle.
auto try_gen_cographic_stratified(const std::vector<CographicStep>& steps) -> std::optional<InstanceBundle>;
/// Every pair step available from g: all vertices and all two-sided edge partitions.
auto cographic_split_options(const Graph& g, std::size_t k) -> std::vector<SplitSpec>;
/// Builds the step sequences of n-2 pair steps (ε = 2n-3), optionally with one extra
/// loop step inserted at position singleton_at; visitor returns false to stop.
void enumerate_cographic_chains(std::size_t n, std::optional<std::size_t> singleton_at,
                                const std::function<bool(const std::vector<CographicStep>&)>& visitor);
auto sample_cographic_chain(std::size_t n, std::optional<std::size_t> singleton_at, std::mt19937_64& rng)
    -> std::vector<CographicStep>;

// --------------------------------------------------------- graphic, 2r-2 etc.

/// Component-merging step: a singleton edge, or two edges between the same two components.
struct MergeChoice {
  std::vector<Edge> edges;
};

/**
 * n isolated vertices; the first k steps add the colour-singular edges
 * a_1..a_k, the remaining steps add colour pairs. Every step joins two
 * components. ε = 2(n-1)-k.
 */
auto gen_graphic_2r_minus_2(std::size_t n, std::size_t k, const std::vector<MergeChoice>& choices)
    -> InstanceBundle;
auto merge_options(const Graph& g, bool pair) -> std::vector<MergeChoice>;
void enumerate_merge_sequences(std::size_t n, std::size_t k,
                               const std::function<bool(const std::vector<MergeChoice>&)>& visitor);
auto sample_merge_sequence(std::size_t n, std::size_t k, std::mt19937_64& rng) -> std::vector<MergeChoice>;

// ------------------------------------------------------------------- named

enum class NamedInstance { K23Plus1, K23Plus2, K4, K5, R10, K33 };

auto parse_named(const std::string& name) -> NamedInstance;
/// K23_PLUS_* carry their two-coloured-pairs colourings; the rest use one colour per element.
auto gen_named(NamedInstance which) -> InstanceBundle;
auto r10_matrix() -> GF2Matrix;

// --------------------------------------------------------------- colourings

/// (2m)! / (2^m m!) for ε = 2m.
auto two_uniform_count(std::size_t epsilon) -> std::uint64_t;
/// Pairing with the given index in canonical order: element 0 is paired first,
/// its partner chosen by the leading digit.
auto two_uniform_unrank(std::size_t epsilon, std::uint64_t index) -> Coloring;
/// All pairings in canonical order, or a seeded sample of cap distinct indices in ascending order.
auto enumerate_two_uniform_colourings(std::size_t epsilon, std::optional<std::size_t> cap = std::nullopt,
                                      std::uint64_t seed = 0) -> std::vector<Coloring>;

/// Surjective colourings onto exactly k colours, up to relabelling (restricted growth strings).
auto exact_colouring_count(std::size_t epsilon, std::size_t k) -> std::uint64_t;
auto exact_colouring_unrank(std::size_t epsilon, std::size_t k, std::uint64_t index) -> Coloring;
auto enumerate_exact_colourings(std::size_t epsilon, std::size_t k, std::optional<std::size_t> cap = std::nullopt,
                                std::uint64_t seed = 0) -> std::vector<Coloring>;

/// Seeded sample of cap distinct values from [0, total), ascending; everything when cap >= total.
auto sample_indices(std::uint64_t total, std::size_t cap, std::uint64_t seed) -> std::vector<std::uint64_t>;

// --------------------------------------------------------------- extensions

struct TriangleMode {
  VertexId x1 = 0, x2 = 0, x3 = 0;
};
struct ElementMode {
  VertexId u = 0, v = 0;
  /// Reject an x parallel to this element of the base.
  std::optional<ElementId> forbid_parallel_to;
};
struct SplitChainMode {
  /// Three single-edge splits applied in order.
  std::vector<SplitSpec> splits;
};
struct SplitElementMode {
  SplitSpec split;
  std::optional<ElementId> forbid_parallel_to;
};
using ExtensionMode = std::variant<TriangleMode, ElementMode, SplitChainMode, SplitElementMode>;

struct ExtensionBundle {
  Extension ext;
  std::optional<Graph> graph;
  std::string placement;
};

/**
 * N = M + T (or M + x). Element ids of the base are kept and the new ones
 * appended; T gets one fresh colour. T must be co-independent for the
 * triangle and split-chain modes.
 */
auto extend_with_triangle_or_element(const InstanceBundle& b, const ExtensionMode& mode) -> ExtensionBundle;

}  // namespace rainbow
