#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rainbow_search.hpp"

namespace rainbow {

struct RainbowPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  [[nodiscard]] auto length() const -> std::size_t { return edges.size(); }
  [[nodiscard]] auto edge_set() const -> ElementSet;
};

/// Length of a shortest rainbow u-v path; nullopt when none exists.
auto rainbow_distance(const Graph& g, const Coloring& c, VertexId u, VertexId v) -> std::optional<std::size_t>;
/// All-pairs rainbow distances, row-major ν×ν; entries without a path are nullopt.
auto rainbow_distances(const Graph& g, const Coloring& c) -> std::vector<std::optional<std::size_t>>;

/**
 * Every rainbow simple path of a graph, grouped by ordered endpoint pair and
 * sorted by length then canonically on edge sets.
 */
class RainbowPathIndex {
 public:
  RainbowPathIndex(const Graph& g, const Coloring& c);
  [[nodiscard]] auto paths(VertexId from, VertexId to) const -> const std::vector<RainbowPath>&;
  [[nodiscard]] auto graph() const -> const Graph& { return *g_; }

 private:
  const Graph* g_;
  std::vector<std::vector<std::vector<RainbowPath>>> by_pair_;
};

struct PathPair {
  RainbowPath first;
  RainbowPath second;
  [[nodiscard]] auto total() const -> std::size_t { return first.length() + second.length(); }
};

/**
 * Two edge-disjoint rainbow paths with total length <= bound, minimising the
 * total. With sources {u,u} the paths run u->targets[0] and u->targets[1];
 * with distinct sources they join the sources to distinct targets in either
 * matching. Same source and same target gives two u-v paths.
 */
auto find_disjoint_rainbow_paths(const RainbowPathIndex& idx, std::array<VertexId, 2> sources,
                                 std::array<VertexId, 2> targets, std::size_t bound) -> std::optional<PathPair>;
auto find_disjoint_rainbow_paths(const Graph& g, const Coloring& c, std::array<VertexId, 2> sources,
                                 std::array<VertexId, 2> targets, std::size_t bound) -> std::optional<PathPair>;

/// Re-checks a pair from scratch; empty string when it holds.
auto verify_path_pair(const Graph& g, const Coloring& c, const PathPair& p, std::array<VertexId, 2> sources,
                      std::array<VertexId, 2> targets, std::size_t bound) -> std::string;

enum class CocycleCollection {
  /// Three cocycles through a split-chain cocircuit, pairwise <= r+2.
  CographicTriple,
  /// Two cocycles through a split-chain cocircuit, sum <= r+2.
  CographicPair,
  /// Two cycles through an added triangle, sum <= ν+2.
  GraphicNearPair,
};

/**
 * Graph-side T-collections. For the cographic kinds g is the split graph and
 * the matroid is its bond matroid; for the graphic kind g already contains
 * the triangle. c colours the edges outside t (entries on t are ignored).
 */
auto find_cocycle_collection(const Graph& g, const Coloring& c, const ElementSet& t, CocycleCollection kind)
    -> std::optional<RainbowCertificate>;

}  // namespace rainbow
