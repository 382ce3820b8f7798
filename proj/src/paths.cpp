#include "rainbow/paths.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "rainbow/errors.hpp"

namespace rainbow {

auto RainbowPath::edge_set() const -> ElementSet { return ElementSet::of(edges); }

namespace {

struct State {
  VertexId v;
  ElementSet colours;
  friend auto operator==(const State&, const State&) -> bool = default;
};

struct StateHash {
  auto operator()(const State& s) const -> std::size_t { return s.colours.hash() * 1000003u ^ s.v; }
};

/// Breadth-first search over (vertex, colours used); returns distance to every vertex.
auto bfs_from(const Graph& g, const Coloring& c, VertexId src) -> std::vector<std::optional<std::size_t>> {
  std::vector<std::optional<std::size_t>> dist(g.num_vertices());
  std::vector<std::vector<EdgeId>> inc(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) inc[v] = g.incident(v);
  std::unordered_set<State, StateHash> seen;
  std::vector<State> frontier{{src, ElementSet{}}};
  seen.insert(frontier.front());
  dist[src] = 0;
  std::size_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<State> next;
    for (const auto& s : frontier)
      for (auto e : inc[s.v]) {
        const auto& ed = g.edge(e);
        if (ed.is_loop()) continue;
        auto col = c.colour(e);
        if (s.colours.contains(col)) continue;
        State t{ed.other(s.v), s.colours};
        t.colours.insert(col);
        if (!seen.insert(t).second) continue;
        if (!dist[t.v]) dist[t.v] = depth;
        next.push_back(t);
      }
    frontier = std::move(next);
  }
  return dist;
}

void check_colouring(const Graph& g, const Coloring& c) {
  if (c.size() != g.num_edges()) throw PreconditionError("colouring does not cover the edges");
}

}  // namespace

auto rainbow_distance(const Graph& g, const Coloring& c, VertexId u, VertexId v) -> std::optional<std::size_t> {
  check_colouring(g, c);
  if (u >= g.num_vertices() || v >= g.num_vertices()) throw PreconditionError("vertex out of range");
  if (u == v) throw PreconditionError("rainbow distance needs distinct vertices");
  return bfs_from(g, c, u)[v];
}

auto rainbow_distances(const Graph& g, const Coloring& c) -> std::vector<std::optional<std::size_t>> {
  check_colouring(g, c);
  const auto n = g.num_vertices();
  std::vector<std::optional<std::size_t>> out(n * n);
  for (VertexId u = 0; u < n; ++u) {
    auto d = bfs_from(g, c, u);
    std::copy(d.begin(), d.end(), out.begin() + static_cast<std::ptrdiff_t>(u * n));
  }
  return out;
}

RainbowPathIndex::RainbowPathIndex(const Graph& g, const Coloring& c) : g_(&g) {
  check_colouring(g, c);
  const auto n = g.num_vertices();
  by_pair_.assign(n, std::vector<std::vector<RainbowPath>>(n));
  std::vector<std::vector<EdgeId>> inc(n);
  for (VertexId v = 0; v < n; ++v) inc[v] = g.incident(v);
  for (VertexId src = 0; src < n; ++src) {
    RainbowPath cur;
    cur.vertices.push_back(src);
    std::vector<bool> on_path(n, false);
    on_path[src] = true;
    ElementSet colours;
    auto dfs = [&](auto&& self, VertexId at) -> void {
      for (auto e : inc[at]) {
        const auto& ed = g.edge(e);
        if (ed.is_loop()) continue;
        auto to = ed.other(at);
        auto col = c.colour(e);
        if (on_path[to] || colours.contains(col)) continue;
        on_path[to] = true;
        colours.insert(col);
        cur.vertices.push_back(to);
        cur.edges.push_back(e);
        by_pair_[src][to].push_back(cur);
        self(self, to);
        cur.edges.pop_back();
        cur.vertices.pop_back();
        colours.erase(col);
        on_path[to] = false;
      }
    };
    dfs(dfs, src);
  }
  for (auto& row : by_pair_)
    for (auto& list : row)
      std::sort(list.begin(), list.end(), [](const RainbowPath& a, const RainbowPath& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return canonical_less(a.edge_set(), b.edge_set()) ||
               (a.edge_set() == b.edge_set() && a.vertices < b.vertices);
      });
}

auto RainbowPathIndex::paths(VertexId from, VertexId to) const -> const std::vector<RainbowPath>& {
  return by_pair_.at(from).at(to);
}

namespace {

struct Best {
  std::optional<PathPair> pair;
  std::size_t total = 0;
};

/// Minimum-total edge-disjoint pair drawn from two sorted lists.
void best_from(const std::vector<RainbowPath>& a, const std::vector<RainbowPath>& b, bool same_list,
               std::size_t bound, Best& best) {
  auto limit = [&]() { return best.pair ? best.total - 1 : bound; };
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].length() + (b.empty() ? 0 : b.front().length()) > limit()) break;
    const auto ai = a[i].edge_set();
    for (std::size_t j = same_list ? i + 1 : 0; j < b.size(); ++j) {
      const auto total = a[i].length() + b[j].length();
      if (total > limit()) break;
      if (!ai.intersects(b[j].edge_set())) {
        best.pair = PathPair{a[i], b[j]};
        best.total = total;
        break;
      }
    }
  }
}

}  // namespace

auto find_disjoint_rainbow_paths(const RainbowPathIndex& idx, std::array<VertexId, 2> sources,
                                 std::array<VertexId, 2> targets, std::size_t bound) -> std::optional<PathPair> {
  const auto n = idx.graph().num_vertices();
  for (auto v : {sources[0], sources[1], targets[0], targets[1]})
    if (v >= n) throw PreconditionError("vertex out of range");
  Best best;
  if (sources[0] == sources[1]) {
    const auto u = sources[0];
    if (targets[0] == u || targets[1] == u) return std::nullopt;
    if (targets[0] == targets[1]) {
      const auto& l = idx.paths(u, targets[0]);
      best_from(l, l, true, bound, best);
    } else {
      best_from(idx.paths(u, targets[0]), idx.paths(u, targets[1]), false, bound, best);
    }
  } else {
    best_from(idx.paths(sources[0], targets[0]), idx.paths(sources[1], targets[1]), false, bound, best);
    best_from(idx.paths(sources[0], targets[1]), idx.paths(sources[1], targets[0]), false, bound, best);
  }
  return best.pair;
}

auto find_disjoint_rainbow_paths(const Graph& g, const Coloring& c, std::array<VertexId, 2> sources,
                                 std::array<VertexId, 2> targets, std::size_t bound) -> std::optional<PathPair> {
  return find_disjoint_rainbow_paths(RainbowPathIndex(g, c), sources, targets, bound);
}

auto verify_path_pair(const Graph& g, const Coloring& c, const PathPair& p, std::array<VertexId, 2> sources,
                      std::array<VertexId, 2> targets, std::size_t bound) -> std::string {
  auto check_path = [&](const RainbowPath& path) -> std::string {
    if (path.vertices.size() != path.edges.size() + 1 || path.edges.empty()) return "malformed path";
    std::vector<VertexId> vs = path.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return "path repeats a vertex";
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
      if (path.edges[i] >= g.num_edges()) return "path edge out of range";
      const auto& e = g.edge(path.edges[i]);
      auto a = path.vertices[i];
      auto b = path.vertices[i + 1];
      if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return "path edge does not join consecutive vertices";
    }
    if (!is_rainbow(c, path.edge_set()) || path.edge_set().size() != path.edges.size()) return "path is not rainbow";
    return {};
  };
  for (const auto* path : {&p.first, &p.second})
    if (auto why = check_path(*path); !why.empty()) return why;
  if (p.first.edge_set().intersects(p.second.edge_set())) return "paths share an edge";
  if (p.total() > bound) return "total length exceeds the bound";
  auto ends = [](const RainbowPath& q) { return std::pair{q.vertices.front(), q.vertices.back()}; };
  auto [a0, a1] = ends(p.first);
  auto [b0, b1] = ends(p.second);
  bool ok = false;
  if (sources[0] == sources[1]) {
    ok = a0 == sources[0] && b0 == sources[0] &&
         ((a1 == targets[0] && b1 == targets[1]) || (a1 == targets[1] && b1 == targets[0]));
  } else {
    bool starts = (a0 == sources[0] && b0 == sources[1]) || (a0 == sources[1] && b0 == sources[0]);
    bool stops = (a1 == targets[0] && b1 == targets[1]) || (a1 == targets[1] && b1 == targets[0]);
    ok = starts && stops;
  }
  return ok ? std::string{} : "paths do not match the endpoint pattern";
}

auto find_cocycle_collection(const Graph& g, const Coloring& c, const ElementSet& t, CocycleCollection kind)
    -> std::optional<RainbowCertificate> {
  const bool graphic = kind == CocycleCollection::GraphicNearPair;
  auto gm = graphic ? cycle_matroid(g) : bond_matroid(g);
  Extension ext(gm.matroid, c, t);
  if (t.size() != 3 || !is_circuit(ext.matroid, t))
    throw PreconditionError(graphic ? "T is not a triangle of the graph" : "T is not a 3-bond of the split graph");
  CertificateKind k = CertificateKind::TSRCT;
  if (kind == CocycleCollection::CographicPair) k = CertificateKind::TSRCP;
  if (graphic) k = CertificateKind::NearTSRCP;
  return find_T_collection(ext, k);
}

}  // namespace rainbow
