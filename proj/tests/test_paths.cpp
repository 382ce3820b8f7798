#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/paths.hpp"

using namespace rainbow;

namespace {

auto edge_list(const Graph& g) -> oracle::EdgeList {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

/// All rainbow paths from s to t as edge masks, by depth-first search.
void rainbow_paths(const oracle::EdgeList& edges, const std::vector<int>& colour, int at, int t, oracle::Mask used_v,
                   oracle::Mask used_e, oracle::Mask used_c, std::vector<oracle::Mask>& out) {
  if (at == t) {
    out.push_back(used_e);
    return;
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int w = -1;
    if (edges[e].first == at) w = edges[e].second;
    if (edges[e].second == at) w = edges[e].first;
    if (w < 0 || ((used_v >> w) & 1U) || ((used_c >> colour[e]) & 1U)) continue;
    rainbow_paths(edges, colour, w, t, used_v | (oracle::Mask{1} << w), used_e | (oracle::Mask{1} << e),
                  used_c | (oracle::Mask{1} << colour[e]), out);
  }
}

auto all_paths(const oracle::EdgeList& edges, const std::vector<int>& colour, int s, int t) {
  std::vector<oracle::Mask> out;
  rainbow_paths(edges, colour, s, t, oracle::Mask{1} << s, 0, 0, out);
  return out;
}

/// Smallest total over edge-disjoint rainbow path pairs s0->t0, s1->t1.
auto brute_pair(const oracle::EdgeList& edges, const std::vector<int>& colour, int s0, int t0, int s1, int t1)
    -> std::optional<std::size_t> {
  std::optional<std::size_t> best;
  const auto a = all_paths(edges, colour, s0, t0);
  const auto b = all_paths(edges, colour, s1, t1);
  for (auto p : a)
    for (auto q : b)
      if (!(p & q)) {
        const auto t = oracle::popcount(p) + oracle::popcount(q);
        if (!best || t < *best) best = t;
      }
  return best;
}

}  // namespace

TEST_CASE("rainbow distances match a colour-set BFS") {
  for (std::size_t n : {4, 5, 6}) {
    for (auto idx : sample_indices(graphic_stratified_count(n), 40, n)) {
      const auto b = gen_graphic_stratified(n, graphic_stratified_choices(n, idx));
      const auto& g = *b.graph;
      const auto edges = edge_list(g);
      const std::vector<int> colour(b.cm.coloring.colours().begin(), b.cm.coloring.colours().end());
      const auto d = rainbow_distances(g, b.cm.coloring);
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
          const auto want = oracle::rainbow_distance(static_cast<int>(n), edges, colour, static_cast<int>(u),
                                                     static_cast<int>(v));
          const auto got = d[u * n + v];
          CHECK(got.has_value() == want.has_value());
          if (got && want) CHECK(*got == static_cast<std::size_t>(*want));
          if (u != v) CHECK(rainbow_distance(g, b.cm.coloring, u, v) == got);
        }
    }
  }
}

TEST_CASE("disjoint rainbow path pairs match brute force") {
  std::mt19937_64 rng(4);
  for (std::size_t n : {5, 6}) {
    for (auto idx : sample_indices(graphic_stratified_count(n), 15, n + 100)) {
      const auto b = gen_graphic_stratified(n, graphic_stratified_choices(n, idx));
      const auto& g = *b.graph;
      const auto edges = edge_list(g);
      const std::vector<int> colour(b.cm.coloring.colours().begin(), b.cm.coloring.colours().end());
      RainbowPathIndex index(g, b.cm.coloring);
      for (int q = 0; q < 20; ++q) {
        std::array<VertexId, 2> s{static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n)};
        std::array<VertexId, 2> t{static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n)};
        if (s[0] == t[0] || s[1] == t[1] || s[0] == t[1] || s[1] == t[0]) continue;
        const auto bound = n;
        auto a = brute_pair(edges, colour, int(s[0]), int(t[0]), int(s[1]), int(t[1]));
        auto c = brute_pair(edges, colour, int(s[0]), int(t[1]), int(s[1]), int(t[0]));
        if (s[0] == s[1]) c = a;
        std::optional<std::size_t> best = a;
        if (c && (!best || *c < *best)) best = c;
        const auto got = find_disjoint_rainbow_paths(index, s, t, bound);
        CHECK(got.has_value() == (best && *best <= bound));
        if (got) {
          CHECK(verify_path_pair(g, b.cm.coloring, *got, s, t, bound).empty());
          CHECK(got->total() == *best);
        }
      }
    }
  }
}

TEST_CASE("path pair verification catches bad pairs") {
  const auto b = gen_graphic_stratified(4, graphic_stratified_choices(4, 0));
  const auto& g = *b.graph;
  auto p = find_disjoint_rainbow_paths(g, b.cm.coloring, {0, 0}, {2, 3}, 4);
  REQUIRE(p);
  CHECK(verify_path_pair(g, b.cm.coloring, *p, {0, 0}, {2, 3}, 4).empty());
  CHECK_FALSE(verify_path_pair(g, b.cm.coloring, *p, {0, 0}, {2, 3}, p->total() - 1).empty());
  CHECK_FALSE(verify_path_pair(g, b.cm.coloring, *p, {1, 1}, {2, 3}, 4).empty());
  auto shared = *p;
  shared.second = shared.first;
  CHECK_FALSE(verify_path_pair(g, b.cm.coloring, shared, {0, 0}, {2, 3}, 4).empty());
}
