#include "rainbow/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges) : num_vertices_(num_vertices) {
  for (auto e : edges) add_edge(e.u, e.v);
}

auto Graph::add_vertex() -> VertexId { return static_cast<VertexId>(num_vertices_++); }

auto Graph::add_edge(VertexId u, VertexId v) -> EdgeId {
  if (u >= num_vertices_ || v >= num_vertices_) throw PreconditionError("edge endpoint out of range");
  if (edges_.size() >= ElementSet::kCapacity) throw PreconditionError("too many edges");
  edges_.push_back({u, v});
  return static_cast<EdgeId>(edges_.size() - 1);
}

auto Graph::degree(VertexId v) const -> std::size_t {
  std::size_t d = 0;
  for (auto e : edges_) d += static_cast<std::size_t>(e.u == v) + static_cast<std::size_t>(e.v == v);
  return d;
}

auto Graph::incident(VertexId v) const -> std::vector<EdgeId> {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u == v || edges_[i].v == v) out.push_back(static_cast<EdgeId>(i));
  return out;
}

auto Graph::is_simple() const -> bool {
  std::vector<std::pair<VertexId, VertexId>> seen;
  for (auto e : edges_) {
    if (e.is_loop()) return false;
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

auto Graph::components() const -> std::vector<std::size_t> {
  std::vector<std::size_t> parent(num_vertices_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto e : edges_) {
    auto a = find(e.u);
    auto b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(num_vertices_);
  std::vector<std::size_t> root_label(num_vertices_, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    auto r = find(v);
    if (root_label[r] == SIZE_MAX) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

auto Graph::num_components() const -> std::size_t {
  auto c = components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

auto Graph::to_edge_list() const -> std::string {
  std::string s = std::to_string(num_vertices_) + ";";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    s += (i == 0 ? " " : ",");
    s += std::to_string(edges_[i].u) + "-" + std::to_string(edges_[i].v);
  }
  return s;
}

// ----------------------------------------------------------------- parsing

namespace {

auto strip(const std::string& s) -> std::string {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

auto parse_uint(const std::string& s, const char* what) -> std::size_t {
  auto t = strip(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(std::string("bad ") + what + " '" + s + "'");
  return static_cast<std::size_t>(std::stoull(t));
}

auto parse_edge_list(const std::string& text) -> Graph {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("edge list needs 'ν; u-v,...'");
  Graph g(parse_uint(text.substr(0, semi), "vertex count"));
  auto body = strip(text.substr(semi + 1));
  if (body.empty()) return g;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("bad edge '" + item + "'");
    auto u = parse_uint(item.substr(0, dash), "vertex");
    auto v = parse_uint(item.substr(dash + 1), "vertex");
    if (u >= g.num_vertices() || v >= g.num_vertices()) throw ParseError("edge '" + item + "' names a missing vertex");
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return g;
}

auto parse_graph6_line(std::string line) -> Graph {
  line = strip(line);
  if (line.rfind(">>", 0) == 0) {
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) != 0) throw ParseError("graph6 header mismatch");
    line = line.substr(header.size());
  }
  if (line.empty()) throw ParseError("empty graph6 line");
  if (line[0] == ':' || line[0] == '&') throw ParseError("not a graph6 line (sparse6/digraph6)");
  for (char ch : line)
    if (ch < 63 || ch > 126) throw ParseError("graph6 byte out of range");
  std::size_t pos = 0;
  auto byte = [&]() -> std::size_t {
    if (pos >= line.size()) throw ParseError("graph6 line truncated");
    return static_cast<std::size_t>(line[pos++] - 63);
  };
  std::size_t n = 0;
  if (line[0] != 126) {
    n = byte();
  } else {
    ++pos;
    std::size_t width = 3;
    if (pos < line.size() && line[pos] == 126) {
      ++pos;
      width = 6;
    }
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | byte();
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) throw ParseError("graph6 line has wrong length");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      auto b = static_cast<std::size_t>(line[pos + k / 6] - 63);
      if ((b >> (5 - k % 6)) & 1) pairs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  for (; k < bytes * 6; ++k) {
    auto b = static_cast<std::size_t>(line[pos + k / 6] - 63);
    if ((b >> (5 - k % 6)) & 1) throw ParseError("graph6 padding bits must be zero");
  }
  std::sort(pairs.begin(), pairs.end());
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

}  // namespace

auto parse_graph(const std::string& text, GraphFormat format) -> Graph {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6_line(text);
}

auto to_graph6(const Graph& g) -> std::string {
  if (!g.is_simple()) throw PreconditionError("graph6 encodes simple graphs only");
  const std::size_t n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::size_t acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i][j] ? 1U : 0U);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

auto read_graph6_file(const std::string& path) -> std::vector<Graph> {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph6 file " + path);
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    try {
      out.push_back(parse_graph6_line(line));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------- matroids

auto cycle_matroid(const Graph& g) -> GraphMatroid {
  if (g.num_edges() == 0) throw PreconditionError("graph has no edges");
  GF2Matrix m(g.num_vertices(), g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(static_cast<EdgeId>(i));
    if (e.is_loop()) continue;
    m.set(e.u, i, true);
    m.set(e.v, i, true);
  }
  GraphMatroid gm{BinaryMatroid::from_matrix(m), {}};
  gm.edge_of.resize(g.num_edges());
  std::iota(gm.edge_of.begin(), gm.edge_of.end(), EdgeId{0});
  return gm;
}

auto bond_matroid(const Graph& g) -> GraphMatroid {
  auto gm = cycle_matroid(g);
  gm.matroid = dual(gm.matroid);
  return gm;
}

// ------------------------------------------------------------- operations

auto split_vertex(const Graph& g, const SplitSpec& s) -> SplitResult {
  if (s.vertex >= g.num_vertices()) throw PreconditionError("split: vertex out of range");
  if (s.k == 0) throw PreconditionError("split: k must be positive");
  const auto inc = g.incident(s.vertex);
  auto incident_set = ElementSet::of(inc);
  auto first = ElementSet::of(s.to_first);
  auto crossing = ElementSet::of(s.crossing_loops);
  if (!first.subset_of(incident_set) || !crossing.subset_of(incident_set))
    throw PreconditionError("split: partition names an edge not at the vertex");
  if (first.intersects(crossing)) throw PreconditionError("split: edge listed twice");
  crossing.for_each([&](EdgeId e) {
    if (!g.edge(e).is_loop()) throw PreconditionError("split: crossing edge is not a loop");
  });
  if ((first | crossing).empty() || (incident_set - first).empty())
    throw PreconditionError("split: empty side of the partition");

  SplitResult res;
  res.graph = Graph(g.num_vertices() + 1);
  res.first = s.vertex;
  res.second = static_cast<VertexId>(g.num_vertices());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto id = static_cast<EdgeId>(i);
    Edge e = g.edge(id);
    if (incident_set.contains(id) && !first.contains(id)) {
      if (crossing.contains(id)) {
        e.v = res.second;
      } else {
        if (e.u == s.vertex) e.u = res.second;
        if (e.v == s.vertex) e.v = res.second;
      }
    }
    res.graph.add_edge(e.u, e.v);
  }
  for (std::size_t j = 0; j < s.k; ++j) res.new_edges.push_back(res.graph.add_edge(res.first, res.second));
  return res;
}

auto add_triangle(const Graph& g, VertexId x1, VertexId x2, VertexId x3) -> TriangleResult {
  if (x1 == x2 || x1 == x3 || x2 == x3) throw PreconditionError("add_triangle: vertices must be distinct");
  if (std::max({x1, x2, x3}) >= g.num_vertices()) throw PreconditionError("add_triangle: vertex out of range");
  TriangleResult res{g, {}};
  res.triangle.push_back(res.graph.add_edge(x1, x2));
  res.triangle.push_back(res.graph.add_edge(x1, x3));
  res.triangle.push_back(res.graph.add_edge(x2, x3));
  return res;
}

auto contract_edge(const Graph& g, EdgeId e) -> Graph {
  if (e >= g.num_edges()) throw PreconditionError("contract: edge out of range");
  const auto ce = g.edge(e);
  if (ce.is_loop()) throw PreconditionError("contract: cannot contract a loop");
  const VertexId keep = std::min(ce.u, ce.v);
  const VertexId gone = std::max(ce.u, ce.v);
  auto relabel = [&](VertexId v) -> VertexId {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  Graph out(g.num_vertices() - 1);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (i == e) continue;
    const auto& x = g.edge(static_cast<EdgeId>(i));
    out.add_edge(relabel(x.u), relabel(x.v));
  }
  return out;
}

auto delete_edges(const Graph& g, const ElementSet& es) -> Graph {
  Graph out(g.num_vertices());
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (!es.contains(static_cast<EdgeId>(i))) out.add_edge(g.edge(static_cast<EdgeId>(i)).u, g.edge(static_cast<EdgeId>(i)).v);
  return out;
}

}  // namespace rainbow
