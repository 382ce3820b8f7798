#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/binary_matroid.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

using namespace rainbow;

namespace {

auto edge_list(const Graph& g) -> oracle::EdgeList {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

auto masks(const std::vector<ElementSet>& cs) -> std::set<oracle::Mask> {
  std::set<oracle::Mask> out;
  for (const auto& c : cs) out.insert(c.word(0));
  return out;
}

auto random_multigraph(std::size_t nv, std::size_t ne, std::mt19937_64& rng, bool loops) -> Graph {
  Graph g(nv);
  for (std::size_t i = 0; i < ne; ++i) {
    auto u = static_cast<VertexId>(rng() % nv);
    auto v = static_cast<VertexId>(rng() % nv);
    if (u == v && !loops) v = (v + 1) % static_cast<VertexId>(nv);
    g.add_edge(u, v);
  }
  return g;
}

auto data_dir() -> std::filesystem::path { return RAINBOW_FORGE_TEST_DATA; }

}  // namespace

TEST_CASE("cycle matroid circuits are the graph's cycles") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_multigraph(2 + rng() % 5, 1 + rng() % 11, rng, true);
    CAPTURE(g.to_edge_list());
    const auto m = cycle_matroid(g).matroid;
    CHECK(masks(enumerate_circuits(m)) == oracle::brute_graph_cycles(static_cast<int>(g.num_vertices()), edge_list(g)));
    CHECK(m.rank() == g.num_vertices() - g.num_components());
  }
}

TEST_CASE("bond matroid circuits are the graph's minimal cuts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_multigraph(2 + rng() % 5, 1 + rng() % 10, rng, trial % 3 == 0);
    CAPTURE(g.to_edge_list());
    const auto m = bond_matroid(g).matroid;
    CHECK(masks(enumerate_circuits(m)) == oracle::brute_bonds(static_cast<int>(g.num_vertices()), edge_list(g)));
  }
}

TEST_CASE("graph6 encoding agrees with an independent decoder") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t nv = 1 + rng() % 12;
    Graph g(nv);
    for (VertexId j = 1; j < nv; ++j)
      for (VertexId i = 0; i < j; ++i)
        if (rng() % 2) g.add_edge(i, j);
    const auto text = to_graph6(g);
    const auto [n, edges] = oracle::decode_graph6(text);
    CHECK(static_cast<std::size_t>(n) == nv);
    std::set<std::pair<int, int>> want(edges.begin(), edges.end());
    std::set<std::pair<int, int>> got;
    for (const auto& e : g.edges()) got.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    CHECK(got == want);
    const auto back = parse_graph(text, GraphFormat::Graph6);
    CHECK(back.num_vertices() == nv);
    CHECK(back.num_edges() == g.num_edges());
  }
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(parse_graph("4; 0-1,0-2,0-3,1-2,1-3,2-3", GraphFormat::EdgeList)) == "C~");
  const auto k5 = parse_graph("D~{", GraphFormat::Graph6);
  CHECK(k5.num_vertices() == 5);
  CHECK(k5.num_edges() == 10);
  CHECK_THROWS_AS(parse_graph("C~~~", GraphFormat::Graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("", GraphFormat::Graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("3; 0-7", GraphFormat::EdgeList), ParseError);
}

TEST_CASE("edge-list text round trip keeps multi-edges and loops") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(2, 2);
  const auto back = parse_graph(g.to_edge_list(), GraphFormat::EdgeList);
  CHECK(back == g);
}

TEST_CASE("bundled catalogs decode with the independent decoder") {
  for (const auto* name : {"graphs_upto7.g6", "cubic8.g6"}) {
    const auto path = data_dir() / "graphs" / name;
    const auto graphs = read_graph6_file(path.string());
    std::ifstream in(path);
    std::string line;
    std::size_t i = 0;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '>') continue;
      REQUIRE(i < graphs.size());
      const auto [n, edges] = oracle::decode_graph6(line);
      CHECK(graphs[i].num_vertices() == static_cast<std::size_t>(n));
      CHECK(graphs[i].num_edges() == edges.size());
      ++i;
    }
    CHECK(i == graphs.size());
  }
  // Connected simple graphs with nu = 5 and 10 edges: only K5.
  std::size_t k5_like = 0;
  for (const auto& g : read_graph6_file((data_dir() / "graphs" / "graphs_upto7.g6").string()))
    if (g.num_vertices() == 5 && g.num_edges() == 10) ++k5_like;
  CHECK(k5_like == 1);
}

TEST_CASE("splitting a vertex is undone by contracting the new edge") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 0);
  const auto res = split_vertex(g, SplitSpec{0, {0}, {}, 1});
  CHECK(res.graph.num_vertices() == 4);
  REQUIRE(res.new_edges.size() == 1);
  const auto back = contract_edge(res.graph, res.new_edges[0]);
  CHECK(back.num_vertices() == 3);
  CHECK(back.num_edges() == g.num_edges());
  CHECK(cycle_matroid(back).matroid.rank() == cycle_matroid(g).matroid.rank());
}

TEST_CASE("adding a triangle appends three edges forming a circuit") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  const auto res = add_triangle(g, 0, 2, 3);
  REQUIRE(res.triangle.size() == 3);
  const auto m = cycle_matroid(res.graph).matroid;
  CHECK(is_circuit(m, ElementSet::of({res.triangle[0], res.triangle[1], res.triangle[2]})));
  CHECK_THROWS_AS(add_triangle(g, 0, 0, 1), PreconditionError);
}

TEST_CASE("deleting edges renumbers the rest in order") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  const auto h = delete_edges(g, ElementSet{1});
  REQUIRE(h.num_edges() == 2);
  CHECK(h.edge(0) == Edge{0, 1});
  CHECK(h.edge(1) == Edge{0, 2});
}
