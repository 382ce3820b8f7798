#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/binary_matroid.hpp"

namespace rainbow {

using VertexId = std::uint32_t;
using EdgeId = ElementId;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  [[nodiscard]] auto is_loop() const -> bool { return u == v; }
  [[nodiscard]] auto other(VertexId w) const -> VertexId { return w == u ? v : u; }
  friend auto operator==(const Edge&, const Edge&) -> bool = default;
};

/// Multigraph with dense vertex and edge ids. Loops and parallel edges allowed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_vertices) : num_vertices_(num_vertices) {}
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  [[nodiscard]] auto num_vertices() const -> std::size_t { return num_vertices_; }
  [[nodiscard]] auto num_edges() const -> std::size_t { return edges_.size(); }
  [[nodiscard]] auto edge(EdgeId e) const -> const Edge& { return edges_[e]; }
  [[nodiscard]] auto edges() const -> const std::vector<Edge>& { return edges_; }

  auto add_vertex() -> VertexId;
  auto add_edge(VertexId u, VertexId v) -> EdgeId;

  /// Loops count twice.
  [[nodiscard]] auto degree(VertexId v) const -> std::size_t;
  /// Ids of edges touching v, ascending, each once.
  [[nodiscard]] auto incident(VertexId v) const -> std::vector<EdgeId>;
  [[nodiscard]] auto is_simple() const -> bool;
  /// Component label per vertex, labels dense in order of least vertex.
  [[nodiscard]] auto components() const -> std::vector<std::size_t>;
  [[nodiscard]] auto num_components() const -> std::size_t;
  [[nodiscard]] auto edge_set() const -> ElementSet { return ElementSet::range(edges_.size()); }

  /// "ν; u-v,u-v,..."
  [[nodiscard]] auto to_edge_list() const -> std::string;

  friend auto operator==(const Graph&, const Graph&) -> bool = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

enum class GraphFormat { EdgeList, Graph6 };

auto parse_graph(const std::string& text, GraphFormat format) -> Graph;
/// graph6 line for a simple graph (no header, no newline).
auto to_graph6(const Graph& g) -> std::string;
/// Every non-empty line of a graph6 file.
auto read_graph6_file(const std::string& path) -> std::vector<Graph>;

struct GraphMatroid {
  BinaryMatroid matroid;
  /// element id -> edge id; the identity for the builders below.
  std::vector<EdgeId> edge_of;
};

auto cycle_matroid(const Graph& g) -> GraphMatroid;
auto bond_matroid(const Graph& g) -> GraphMatroid;

/**
 * Splitting a vertex. The vertex keeps its id and becomes v1; a new vertex
 * v2 = ν is created. Non-loop edges in to_first stay on v1, the other
 * non-loop edges move to v2. A loop listed in to_first stays at v1, one in
 * crossing_loops becomes a v1–v2 edge, any other loop moves to v2. Then k
 * parallel edges v1–v2 are appended.
 */
struct SplitSpec {
  VertexId vertex = 0;
  std::vector<EdgeId> to_first;
  std::vector<EdgeId> crossing_loops;
  std::size_t k = 1;
};

struct SplitResult {
  Graph graph;
  std::vector<EdgeId> new_edges;
  VertexId first = 0;
  VertexId second = 0;
};

auto split_vertex(const Graph& g, const SplitSpec& s) -> SplitResult;

struct TriangleResult {
  Graph graph;
  /// x1x2, x1x3, x2x3
  std::vector<EdgeId> triangle;
};

auto add_triangle(const Graph& g, VertexId x1, VertexId x2, VertexId x3) -> TriangleResult;

/// Contracts e (not a loop); the larger endpoint merges into the smaller and
/// later vertex ids shift down by one. Edge e is removed, other ids shift down.
auto contract_edge(const Graph& g, EdgeId e) -> Graph;
/// Removes the edges; remaining ids keep their relative order.
auto delete_edges(const Graph& g, const ElementSet& es) -> Graph;

}  // namespace rainbow
