#pragma once

// Slow reference implementations used to cross-check the library. Nothing
// here calls into the library's search code; inputs are plain vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

/// Columns of a binary matrix, each as a bitmask over rows (rows <= 64).
struct Columns {
  std::size_t rows = 0;
  std::vector<Mask> col;
};

inline auto gf2_rank(std::vector<Mask> vs) -> std::size_t {
  std::size_t rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto pivot = std::find_if(vs.begin() + static_cast<long>(rank), vs.end(),
                              [&](Mask v) { return (v >> bit) & 1U; });
    if (pivot == vs.end()) continue;
    std::iter_swap(vs.begin() + static_cast<long>(rank), pivot);
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (i != rank && ((vs[i] >> bit) & 1U)) vs[i] ^= vs[rank];
    ++rank;
  }
  return rank;
}

inline auto subset_rank(const Columns& m, Mask s) -> std::size_t {
  std::vector<Mask> vs;
  for (std::size_t e = 0; e < m.col.size(); ++e)
    if ((s >> e) & 1U) vs.push_back(m.col[e]);
  return gf2_rank(vs);
}

/// Circuits as bitmasks: dependent sets all of whose one-smaller subsets are independent.
inline auto brute_circuits(const Columns& m) -> std::vector<Mask> {
  const auto n = m.col.size();
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(s));
    if (subset_rank(m, s) == size) continue;
    bool minimal = true;
    for (std::size_t e = 0; e < n && minimal; ++e)
      if ((s >> e) & 1U) minimal = subset_rank(m, s & ~(Mask{1} << e)) == size - 1;
    if (minimal) out.push_back(s);
  }
  return out;
}

inline auto random_columns(std::size_t rows, std::size_t cols, std::mt19937_64& rng) -> Columns {
  Columns m;
  m.rows = rows;
  for (std::size_t c = 0; c < cols; ++c) m.col.push_back(rng() & ((Mask{1} << rows) - 1));
  return m;
}

// ------------------------------------------------------------------ graphs

using EdgeList = std::vector<std::pair<int, int>>;

inline auto connected_on(int nv, const EdgeList& edges, Mask es, Mask vs) -> bool {
  if (vs == 0) return true;
  Mask seen = vs & (~vs + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!((es >> e) & 1U)) continue;
      const Mask a = Mask{1} << edges[e].first;
      const Mask b = Mask{1} << edges[e].second;
      if ((seen & a) && !(seen & b)) seen |= b, grew = true;
      if ((seen & b) && !(seen & a)) seen |= a, grew = true;
    }
  }
  (void)nv;
  return (seen & vs) == vs;
}

/// Edge sets of cycles in the graph: connected, every touched vertex of degree two.
inline auto brute_graph_cycles(int nv, const EdgeList& edges) -> std::set<Mask> {
  std::set<Mask> out;
  const auto m = edges.size();
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    std::vector<int> deg(static_cast<std::size_t>(nv), 0);
    Mask vs = 0;
    for (std::size_t e = 0; e < m; ++e)
      if ((s >> e) & 1U) {
        ++deg[static_cast<std::size_t>(edges[e].first)];
        ++deg[static_cast<std::size_t>(edges[e].second)];
        vs |= Mask{1} << edges[e].first;
        vs |= Mask{1} << edges[e].second;
      }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) continue;
    if (connected_on(nv, edges, s, vs)) out.insert(s);
  }
  return out;
}

/// Bonds of a graph: minimal nonempty edge cuts, found as cuts whose removal adds exactly one component.
inline auto brute_bonds(int nv, const EdgeList& edges) -> std::set<Mask> {
  const auto m = edges.size();
  const Mask all_edges = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
  auto components = [&](Mask es) {
    std::vector<int> parent(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    int comps = nv;
    for (std::size_t e = 0; e < m; ++e)
      if ((es >> e) & 1U) {
        auto a = find(edges[e].first);
        auto b = find(edges[e].second);
        if (a != b) parent[static_cast<std::size_t>(a)] = b, --comps;
      }
    return comps;
  };
  const auto base = components(all_edges);
  std::set<Mask> out;
  for (Mask s = 1; s <= all_edges; ++s) {
    if (components(all_edges & ~s) != base + 1) continue;
    bool minimal = true;
    for (std::size_t e = 0; e < m && minimal; ++e)
      if ((s >> e) & 1U) minimal = components(all_edges & ~(s & ~(Mask{1} << e))) == base;
    if (minimal) out.insert(s);
  }
  return out;
}

/// graph6 decoding written from the format description, for n < 63.
inline auto decode_graph6(const std::string& s) -> std::pair<int, EdgeList> {
  const int n = s.at(0) - 63;
  EdgeList edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = s.at(static_cast<std::size_t>(1 + bit / 6)) - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  return {n, edges};
}

/// Shortest rainbow path length by BFS over (vertex, used colours).
inline auto rainbow_distance(int nv, const EdgeList& edges, const std::vector<int>& colour, int s, int t)
    -> std::optional<int> {
  if (s == t) return 0;
  std::map<std::pair<int, Mask>, int> dist;
  std::vector<std::pair<int, Mask>> frontier{{s, 0}};
  dist[{s, 0}] = 0;
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<std::pair<int, Mask>> next;
    for (auto [v, used] : frontier)
      for (std::size_t e = 0; e < edges.size(); ++e) {
        int w = -1;
        if (edges[e].first == v) w = edges[e].second;
        if (edges[e].second == v) w = edges[e].first;
        if (w < 0) continue;
        const Mask cm = Mask{1} << colour[e];
        if (used & cm) continue;
        if (w == t) return d;
        if (dist.emplace(std::pair{w, used | cm}, d).second) next.emplace_back(w, used | cm);
      }
    frontier = std::move(next);
  }
  (void)nv;
  return std::nullopt;
}

// --------------------------------------------------------------- colourings

inline auto double_factorial_odd(std::size_t m) -> std::uint64_t {
  std::uint64_t out = 1;
  for (std::size_t k = 1; k < 2 * m; k += 2) out *= k;
  return out;
}

inline auto stirling2(std::size_t n, std::size_t k) -> std::uint64_t {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

inline auto is_rainbow(Mask s, const std::vector<int>& colour) -> bool {
  Mask seen = 0;
  for (std::size_t e = 0; e < colour.size(); ++e)
    if ((s >> e) & 1U) {
      const Mask c = Mask{1} << colour[e];
      if (seen & c) return false;
      seen |= c;
    }
  return true;
}

inline auto popcount(Mask s) -> std::size_t { return static_cast<std::size_t>(__builtin_popcountll(s)); }

/// Smallest |C1|+|C2| over disjoint rainbow circuit pairs.
inline auto min_srcp_total(const std::vector<Mask>& circuits, const std::vector<int>& colour)
    -> std::optional<std::size_t> {
  std::vector<Mask> rb;
  for (auto c : circuits)
    if (is_rainbow(c, colour)) rb.push_back(c);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < rb.size(); ++i)
    for (std::size_t j = i + 1; j < rb.size(); ++j)
      if (!(rb[i] & rb[j])) {
        const auto t = popcount(rb[i]) + popcount(rb[j]);
        if (!best || t < *best) best = t;
      }
  return best;
}

/// Smallest total over multisets of four rainbow circuits using each element at most twice.
inline auto min_src4_total(const std::vector<Mask>& circuits, const std::vector<int>& colour)
    -> std::optional<std::size_t> {
  std::vector<Mask> rb;
  for (auto c : circuits)
    if (is_rainbow(c, colour)) rb.push_back(c);
  std::optional<std::size_t> best;
  const auto n = rb.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        // Elements already used twice by a, b, c.
        const Mask twice = (rb[a] & rb[b]) | (rb[a] & rb[c]) | (rb[b] & rb[c]);
        if (rb[a] & rb[b] & rb[c]) continue;
        for (std::size_t d = c; d < n; ++d) {
          if (rb[d] & twice) continue;
          const auto t = popcount(rb[a]) + popcount(rb[b]) + popcount(rb[c]) + popcount(rb[d]);
          if (!best || t < *best) best = t;
        }
      }
  return best;
}

}  // namespace oracle
