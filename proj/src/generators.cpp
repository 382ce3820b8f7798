#include "rainbow/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rainbow/budget.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

// ---------------------------------------------------------------- bundles

auto declared_failure(const InstanceBundle& b) -> std::string {
  const auto& d = b.declared;
  const auto& m = b.cm.matroid;
  if (d.epsilon && m.epsilon() != *d.epsilon)
    return "epsilon is " + std::to_string(m.epsilon()) + ", declared " + std::to_string(*d.epsilon);
  if (d.rank && m.rank() != *d.rank)
    return "rank is " + std::to_string(m.rank()) + ", declared " + std::to_string(*d.rank);
  if (d.simple && simplicity_report(m).is_simple != *d.simple) return "simplicity differs from the declaration";
  if (d.singular_count && colour_singular_elements(b.cm).size() != *d.singular_count)
    return "colour-singular count differs from the declaration";
  if (d.achromatic && is_circuit_achromatic(b.cm).achromatic != *d.achromatic)
    return "circuit-achromatic status differs from the declaration";
  return {};
}

void check_declared(const InstanceBundle& b) {
  auto why = declared_failure(b);
  if (!why.empty()) throw PreconditionError(b.id() + ": " + why);
}

namespace {

auto binom2(std::uint64_t i) -> std::uint64_t { return i * (i - 1) / 2; }

auto pair_of(std::uint64_t i, std::uint64_t digit) -> AttachChoice {
  for (VertexId a = 0; a < i; ++a)
    for (VertexId b = a + 1; b < i; ++b)
      if (digit-- == 0) return {a, b};
  throw std::logic_error("pair digit out of range");
}

auto edges_text(const std::vector<Edge>& es) -> std::string {
  std::string s;
  for (const auto& e : es) {
    if (!s.empty()) s += "+";
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

auto split_text(const SplitSpec& s) -> std::string {
  std::string out = "s" + std::to_string(s.vertex) + "[";
  for (std::size_t i = 0; i < s.to_first.size(); ++i) out += (i ? "," : "") + std::to_string(s.to_first[i]);
  out += "|";
  for (std::size_t i = 0; i < s.crossing_loops.size(); ++i)
    out += (i ? "," : "") + std::to_string(s.crossing_loops[i]);
  return out + "]";
}

}  // namespace

// ------------------------------------------------------------ graphic, 2r-1

auto gen_graphic_stratified(std::size_t n, const std::vector<AttachChoice>& choices) -> InstanceBundle {
  if (n < 3) throw PreconditionError("graphic stratified family needs n >= 3");
  if (choices.size() != n - 2) throw PreconditionError("need one attachment choice per step 2..n-1");
  Graph g(n);
  std::vector<ColourId> colours{0};
  g.add_edge(0, 1);
  std::string text;
  for (std::size_t i = 2; i < n; ++i) {
    auto [a, b] = choices[i - 2];
    if (a == b || a >= i || b >= i)
      throw PreconditionError("step " + std::to_string(i) + ": attachment must be two distinct earlier vertices");
    g.add_edge(static_cast<VertexId>(i), a);
    g.add_edge(static_cast<VertexId>(i), b);
    colours.push_back(static_cast<ColourId>(i - 1));
    colours.push_back(static_cast<ColourId>(i - 1));
    if (!text.empty()) text += ",";
    text += std::to_string(a) + "-" + std::to_string(b);
  }
  InstanceBundle out;
  out.family = "graphic-2r-1";
  out.choices = "n" + std::to_string(n) + ":" + text;
  out.cm = ColoredMatroid(cycle_matroid(g).matroid, Coloring(colours, ClassBound{ClassBound::Kind::Bounded, 2}));
  out.graph = std::move(g);
  out.declared = {2 * n - 3, n - 1, true, 1, true};
  check_declared(out);
  return out;
}

auto graphic_stratified_count(std::size_t n) -> std::uint64_t {
  std::uint64_t total = 1;
  for (std::uint64_t i = 2; i < n; ++i) total *= binom2(i);
  return total;
}

auto graphic_stratified_choices(std::size_t n, std::uint64_t index) -> std::vector<AttachChoice> {
  if (n < 3) throw PreconditionError("graphic stratified family needs n >= 3");
  if (index >= graphic_stratified_count(n)) throw PreconditionError("choice index out of range");
  std::vector<AttachChoice> out(n - 2);
  for (std::uint64_t i = n - 1; i >= 2; --i) {
    auto radix = binom2(i);
    out[i - 2] = pair_of(i, index % radix);
    index /= radix;
  }
  return out;
}

// ---------------------------------------------------------- cographic, 2r-1

namespace {

auto build_cographic(const std::vector<CographicStep>& steps) -> InstanceBundle {
  Graph g(1);
  g.add_edge(0, 0);
  std::vector<ColourId> colours{0};
  std::string text;
  std::size_t loops = 1;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const auto& st = steps[j];
    const auto colour = static_cast<ColourId>(j + 1);
    if (!text.empty()) text += ",";
    if (st.loop) {
      if (st.vertex >= g.num_vertices()) throw PreconditionError("loop step: vertex out of range");
      g.add_edge(st.vertex, st.vertex);
      colours.push_back(colour);
      ++loops;
      text += "L" + std::to_string(st.vertex);
    } else {
      if (st.split.k != 2) throw PreconditionError("pair step must add two parallel edges");
      g = split_vertex(g, st.split).graph;
      colours.push_back(colour);
      colours.push_back(colour);
      text += split_text(st.split);
    }
  }
  InstanceBundle out;
  out.family = loops == 1 ? "cographic-2r-1" : "cographic-2r-2";
  out.choices = text.empty() ? "-" : text;
  out.cographic = true;
  out.cm = ColoredMatroid(bond_matroid(g).matroid, Coloring(colours, ClassBound{ClassBound::Kind::Bounded, 2}));
  out.graph = std::move(g);
  const auto r = steps.size() + 1;
  out.declared = {colours.size(), r, true, loops, true};
  return out;
}

}  // namespace

auto gen_cographic_stratified(const std::vector<CographicStep>& steps) -> InstanceBundle {
  auto out = build_cographic(steps);
  check_declared(out);
  return out;
}

auto try_gen_cographic_stratified(const std::vector<CographicStep>& steps) -> std::optional<InstanceBundle> {
  auto out = build_cographic(steps);
  if (!declared_failure(out).empty()) return std::nullopt;
  return out;
}

auto cographic_split_options(const Graph& g, std::size_t k) -> std::vector<SplitSpec> {
  std::vector<SplitSpec> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto inc = g.incident(v);
    if (inc.empty()) continue;
    // Assignment per incident edge: 0 first, 1 second, 2 crossing (loops only).
    std::vector<int> radix;
    for (auto e : inc) radix.push_back(g.edge(e).is_loop() ? 3 : 2);
    std::vector<int> digit(inc.size(), 0);
    while (true) {
      bool side1 = false;
      bool side2 = false;
      for (std::size_t i = 0; i < inc.size(); ++i) {
        side1 = side1 || digit[i] != 1;
        side2 = side2 || digit[i] != 0;
      }
      // Swapping the sides gives the same graph up to naming, so the lowest edge never goes second.
      if (side1 && side2 && digit[0] != 1) {
        SplitSpec s;
        s.vertex = v;
        s.k = k;
        for (std::size_t i = 0; i < inc.size(); ++i) {
          if (digit[i] == 0) s.to_first.push_back(inc[i]);
          if (digit[i] == 2) s.crossing_loops.push_back(inc[i]);
        }
        out.push_back(std::move(s));
      }
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == radix[i]) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }
  return out;
}

namespace {

/// Options available at a step of the chain: loop vertices or pair splits.
auto chain_options(const Graph& g, bool loop_step) -> std::vector<CographicStep> {
  std::vector<CographicStep> out;
  if (loop_step) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) out.push_back({true, v, {}});
  } else {
    for (auto& s : cographic_split_options(g, 2)) out.push_back({false, 0, std::move(s)});
  }
  return out;
}

auto apply_step(const Graph& g, const CographicStep& st) -> Graph {
  if (st.loop) {
    Graph h = g;
    h.add_edge(st.vertex, st.vertex);
    return h;
  }
  return split_vertex(g, st.split).graph;
}

auto chain_length(std::size_t n, std::optional<std::size_t> singleton_at) -> std::size_t {
  if (n < 3) throw PreconditionError("cographic family needs n >= 3");
  auto len = n - 2 + (singleton_at ? 1 : 0);
  if (singleton_at && *singleton_at >= len) throw PreconditionError("loop step position out of range");
  return len;
}

}  // namespace

void enumerate_cographic_chains(std::size_t n, std::optional<std::size_t> singleton_at,
                                const std::function<bool(const std::vector<CographicStep>&)>& visitor) {
  const auto len = chain_length(n, singleton_at);
  std::vector<CographicStep> steps;
  auto rec = [&](auto&& self, const Graph& g) -> bool {
    if (steps.size() == len) return visitor(steps);
    bool loop_step = singleton_at && steps.size() == *singleton_at;
    for (auto& opt : chain_options(g, loop_step)) {
      auto h = apply_step(g, opt);
      steps.push_back(std::move(opt));
      bool go = self(self, h);
      steps.pop_back();
      if (!go) return false;
    }
    return true;
  };
  Graph g1(1);
  g1.add_edge(0, 0);
  rec(rec, g1);
}

auto sample_cographic_chain(std::size_t n, std::optional<std::size_t> singleton_at, std::mt19937_64& rng)
    -> std::vector<CographicStep> {
  const auto len = chain_length(n, singleton_at);
  Graph g(1);
  g.add_edge(0, 0);
  std::vector<CographicStep> steps;
  while (steps.size() < len) {
    bool loop_step = singleton_at && steps.size() == *singleton_at;
    auto opts = chain_options(g, loop_step);
    auto pick = std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng);
    g = apply_step(g, opts[pick]);
    steps.push_back(std::move(opts[pick]));
  }
  return steps;
}

// --------------------------------------------------------- graphic, 2r-2 etc.

auto merge_options(const Graph& g, bool pair) -> std::vector<MergeChoice> {
  const auto comp = g.components();
  const auto nc = g.num_components();
  std::vector<MergeChoice> out;
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = a + 1; b < nc; ++b) {
      std::vector<Edge> cross;
      for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v = 0; v < g.num_vertices(); ++v)
          if (comp[u] == a && comp[v] == b) cross.push_back({std::min(u, v), std::max(u, v)});
      std::sort(cross.begin(), cross.end(), [](const Edge& x, const Edge& y) {
        return std::pair{x.u, x.v} < std::pair{y.u, y.v};
      });
      if (!pair) {
        for (const auto& e : cross) out.push_back({{e}});
      } else {
        for (std::size_t i = 0; i < cross.size(); ++i)
          for (std::size_t j = i + 1; j < cross.size(); ++j) out.push_back({{cross[i], cross[j]}});
      }
    }
  return out;
}

auto gen_graphic_2r_minus_2(std::size_t n, std::size_t k, const std::vector<MergeChoice>& choices)
    -> InstanceBundle {
  if (k < 1 || k > 3) throw PreconditionError("colour-singular count must be 1, 2 or 3");
  if (n < k + 1) throw PreconditionError("too few vertices for the requested singular edges");
  if (choices.size() != n - 1) throw PreconditionError("need one merge choice per step 1..n-1");
  Graph g(n);
  std::vector<ColourId> colours;
  std::string text;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const auto& ch = choices[i];
    const bool pair = i >= k;
    if (ch.edges.size() != (pair ? 2u : 1u)) throw PreconditionError("step " + std::to_string(i + 1) + ": wrong edge count");
    const auto comp = g.components();
    for (const auto& e : ch.edges) {
      if (e.u >= n || e.v >= n || comp[e.u] == comp[e.v])
        throw PreconditionError("step " + std::to_string(i + 1) + ": edge does not join two components");
    }
    if (pair) {
      const auto& e = ch.edges[0];
      const auto& f = ch.edges[1];
      bool same = (comp[e.u] == comp[f.u] && comp[e.v] == comp[f.v]) || (comp[e.u] == comp[f.v] && comp[e.v] == comp[f.u]);
      bool parallel = (e.u == f.u && e.v == f.v) || (e.u == f.v && e.v == f.u);
      if (!same || parallel)
        throw PreconditionError("step " + std::to_string(i + 1) + ": pair must be two distinct edges between two components");
    }
    for (const auto& e : ch.edges) {
      g.add_edge(e.u, e.v);
      colours.push_back(static_cast<ColourId>(i));
    }
    if (!text.empty()) text += ",";
    text += edges_text(ch.edges);
  }
  InstanceBundle out;
  out.family = "graphic-k" + std::to_string(k);
  out.choices = "n" + std::to_string(n) + ":" + text;
  out.cm = ColoredMatroid(cycle_matroid(g).matroid, Coloring(colours, ClassBound{ClassBound::Kind::Bounded, 2}));
  out.graph = std::move(g);
  out.declared = {2 * (n - 1) - k, n - 1, true, k, true};
  check_declared(out);
  return out;
}

void enumerate_merge_sequences(std::size_t n, std::size_t k,
                               const std::function<bool(const std::vector<MergeChoice>&)>& visitor) {
  if (n < k + 1) throw PreconditionError("too few vertices for the requested singular edges");
  std::vector<MergeChoice> seq;
  auto rec = [&](auto&& self, const Graph& g) -> bool {
    if (seq.size() == n - 1) return visitor(seq);
    for (auto& opt : merge_options(g, seq.size() >= k)) {
      Graph h = g;
      for (const auto& e : opt.edges) h.add_edge(e.u, e.v);
      seq.push_back(std::move(opt));
      bool go = self(self, h);
      seq.pop_back();
      if (!go) return false;
    }
    return true;
  };
  rec(rec, Graph(n));
}

auto sample_merge_sequence(std::size_t n, std::size_t k, std::mt19937_64& rng) -> std::vector<MergeChoice> {
  if (n < k + 1) throw PreconditionError("too few vertices for the requested singular edges");
  Graph g(n);
  std::vector<MergeChoice> seq;
  while (seq.size() < n - 1) {
    auto opts = merge_options(g, seq.size() >= k);
    auto pick = std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng);
    for (const auto& e : opts[pick].edges) g.add_edge(e.u, e.v);
    seq.push_back(std::move(opts[pick]));
  }
  return seq;
}

// ------------------------------------------------------------------- named

auto parse_named(const std::string& name) -> NamedInstance {
  static const std::map<std::string, NamedInstance> names = {
      {"K23_PLUS_1", NamedInstance::K23Plus1}, {"K23_PLUS_2", NamedInstance::K23Plus2},
      {"K4", NamedInstance::K4},               {"K5", NamedInstance::K5},
      {"R10", NamedInstance::R10},             {"K33", NamedInstance::K33},
  };
  auto it = names.find(name);
  if (it == names.end()) throw ParseError("unknown named instance '" + name + "'");
  return it->second;
}

auto r10_matrix() -> GF2Matrix {
  // [I5 | A], A the circulant with first row 11001.
  static const char* rows[] = {"1000011001", "0100011100", "0010001110", "0001000111", "0000110011"};
  std::string text = "5 10\n";
  for (const auto* r : rows) text += std::string(r) + "\n";
  return GF2Matrix::parse(text);
}

namespace {

auto identity_colouring(std::size_t n) -> Coloring {
  std::vector<ColourId> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<ColourId>(i);
  return Coloring(c);
}

auto complete_graph(std::size_t n) -> Graph {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

auto graph_bundle(std::string family, Graph g) -> InstanceBundle {
  InstanceBundle out;
  out.family = std::move(family);
  out.choices = "-";
  auto m = cycle_matroid(g).matroid;
  const auto eps = m.epsilon();
  out.cm = ColoredMatroid(std::move(m), identity_colouring(eps));
  out.graph = std::move(g);
  out.declared.epsilon = eps;
  out.declared.simple = true;
  return out;
}

}  // namespace

auto gen_named(NamedInstance which) -> InstanceBundle {
  InstanceBundle out;
  switch (which) {
    case NamedInstance::K23Plus1:
      out = gen_graphic_stratified(5, {{0, 1}, {0, 1}, {0, 1}});
      out.family = "K23_PLUS_1";
      break;
    case NamedInstance::K23Plus2:
      out = gen_graphic_stratified(5, {{0, 1}, {0, 2}, {0, 2}});
      out.family = "K23_PLUS_2";
      break;
    case NamedInstance::K4:
      out = graph_bundle("K4", complete_graph(4));
      break;
    case NamedInstance::K5:
      out = graph_bundle("K5", complete_graph(5));
      break;
    case NamedInstance::K33: {
      Graph g(6);
      for (VertexId u = 0; u < 3; ++u)
        for (VertexId v = 3; v < 6; ++v) g.add_edge(u, v);
      out = graph_bundle("K33", std::move(g));
      break;
    }
    case NamedInstance::R10:
      out.family = "R10";
      out.choices = "-";
      out.cm = ColoredMatroid(BinaryMatroid::from_matrix(r10_matrix()), identity_colouring(10));
      out.declared = {10, 5, std::nullopt, std::nullopt, true};
      break;
  }
  check_declared(out);
  return out;
}

// --------------------------------------------------------------- colourings

auto two_uniform_count(std::size_t epsilon) -> std::uint64_t {
  if (epsilon % 2 != 0) throw PreconditionError("2-uniform colourings need an even element count");
  std::uint64_t total = 1;
  for (std::uint64_t r = epsilon; r >= 2; r -= 2) total *= r - 1;
  return total;
}

auto two_uniform_unrank(std::size_t epsilon, std::uint64_t index) -> Coloring {
  const auto total = two_uniform_count(epsilon);
  if (index >= total) throw PreconditionError("pairing index out of range");
  // Digits, most significant first, with radices ε-1, ε-3, ..., 1.
  std::vector<std::uint64_t> digits;
  for (std::uint64_t r = 1; r < epsilon; r += 2) {
    digits.push_back(index % r);
    index /= r;
  }
  std::reverse(digits.begin(), digits.end());
  std::vector<ElementId> remaining(epsilon);
  for (std::size_t i = 0; i < epsilon; ++i) remaining[i] = static_cast<ElementId>(i);
  std::vector<ColourId> colour(epsilon);
  ColourId next = 0;
  for (auto d : digits) {
    auto a = remaining.front();
    auto b = remaining[1 + d];
    colour[a] = colour[b] = next++;
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(1 + d));
    remaining.erase(remaining.begin());
  }
  return Coloring(colour, ClassBound{ClassBound::Kind::Uniform, 2});
}

auto sample_indices(std::uint64_t total, std::size_t cap, std::uint64_t seed) -> std::vector<std::uint64_t> {
  std::vector<std::uint64_t> out;
  if (cap >= total) {
    out.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) out[i] = i;
    return out;
  }
  // Floyd's algorithm: cap distinct draws.
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = total - cap; j < total; ++j) {
    auto t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

auto enumerate_two_uniform_colourings(std::size_t epsilon, std::optional<std::size_t> cap, std::uint64_t seed)
    -> std::vector<Coloring> {
  const auto total = two_uniform_count(epsilon);
  if (!cap && total > Budget::current().census_cap)
    throw BudgetExceeded(std::to_string(total) + " pairings exceed the census cap");
  std::vector<Coloring> out;
  for (auto i : sample_indices(total, cap.value_or(total), seed)) out.push_back(two_uniform_unrank(epsilon, i));
  return out;
}

namespace {

/// completions[pos][m]: ways to finish a growth string from pos with m colours used.
auto growth_table(std::size_t epsilon, std::size_t k) -> std::vector<std::vector<std::uint64_t>> {
  if (epsilon > 40) throw PreconditionError("exact colouring counts limited to 40 elements");
  std::vector<std::vector<std::uint64_t>> f(epsilon + 1, std::vector<std::uint64_t>(k + 2, 0));
  f[epsilon][k] = 1;
  for (std::size_t pos = epsilon; pos-- > 0;)
    for (std::size_t m = 0; m <= k; ++m) f[pos][m] = m * f[pos + 1][m] + (m < k ? f[pos + 1][m + 1] : 0);
  return f;
}

}  // namespace

auto exact_colouring_count(std::size_t epsilon, std::size_t k) -> std::uint64_t {
  if (k == 0 || k > epsilon) return 0;
  return growth_table(epsilon, k)[1][1];
}

auto exact_colouring_unrank(std::size_t epsilon, std::size_t k, std::uint64_t index) -> Coloring {
  if (index >= exact_colouring_count(epsilon, k)) throw PreconditionError("colouring index out of range");
  auto f = growth_table(epsilon, k);
  std::vector<ColourId> c(epsilon, 0);
  std::size_t m = 1;
  for (std::size_t pos = 1; pos < epsilon; ++pos) {
    const auto per_old = f[pos + 1][m];
    if (index < m * per_old) {
      c[pos] = static_cast<ColourId>(index / per_old);
      index %= per_old;
    } else {
      index -= m * per_old;
      c[pos] = static_cast<ColourId>(m++);
    }
  }
  return Coloring(c);
}

auto enumerate_exact_colourings(std::size_t epsilon, std::size_t k, std::optional<std::size_t> cap,
                                std::uint64_t seed) -> std::vector<Coloring> {
  const auto total = exact_colouring_count(epsilon, k);
  if (!cap && total > Budget::current().census_cap)
    throw BudgetExceeded(std::to_string(total) + " colourings exceed the census cap");
  std::vector<Coloring> out;
  for (auto i : sample_indices(total, cap.value_or(total), seed)) out.push_back(exact_colouring_unrank(epsilon, k, i));
  return out;
}

// --------------------------------------------------------------- extensions

namespace {

auto with_fresh_colour(const Coloring& c, std::size_t added) -> Coloring {
  auto colours = c.colours();
  const auto fresh = static_cast<ColourId>(c.num_colours());
  colours.insert(colours.end(), added, fresh);
  return Coloring(colours);
}

void forbid_parallel(const BinaryMatroid& n, ElementId x, std::optional<ElementId> e) {
  if (e && is_circuit(n, ElementSet{x, *e}))
    throw PreconditionError("x is parallel to element " + std::to_string(*e));
}

auto finish(const InstanceBundle& b, BinaryMatroid n, std::size_t added, std::optional<Graph> g,
            std::string placement) -> ExtensionBundle {
  const auto eps = b.cm.matroid.epsilon();
  ElementSet t;
  for (std::size_t i = 0; i < added; ++i) t.insert(static_cast<ElementId>(eps + i));
  ExtensionBundle out{Extension(std::move(n), with_fresh_colour(b.cm.coloring, added), t), std::move(g),
                      std::move(placement)};
  if (out.ext.base_rank != b.cm.matroid.rank()) throw std::logic_error("extension does not restrict to the base");
  return out;
}

void require_graph(const InstanceBundle& b, bool cographic) {
  if (!b.graph || b.cographic != cographic)
    throw PreconditionError(std::string("extension mode needs a ") + (cographic ? "cographic" : "graphic") +
                            " bundle with its graph");
}

}  // namespace

auto extend_with_triangle_or_element(const InstanceBundle& b, const ExtensionMode& mode) -> ExtensionBundle {
  if (const auto* tri = std::get_if<TriangleMode>(&mode)) {
    require_graph(b, false);
    auto res = add_triangle(*b.graph, tri->x1, tri->x2, tri->x3);
    auto n = cycle_matroid(res.graph).matroid;
    auto placement = "T=" + std::to_string(tri->x1) + "," + std::to_string(tri->x2) + "," + std::to_string(tri->x3);
    auto out = finish(b, std::move(n), 3, std::move(res.graph), placement);
    if (!is_coindependent(out.ext.matroid, out.ext.t)) throw PreconditionError("triangle is not co-independent");
    return out;
  }
  if (const auto* el = std::get_if<ElementMode>(&mode)) {
    require_graph(b, false);
    if (el->u == el->v) throw PreconditionError("element mode needs two distinct vertices");
    Graph h = *b.graph;
    if (std::max(el->u, el->v) >= h.num_vertices()) throw PreconditionError("vertex out of range");
    auto x = h.add_edge(el->u, el->v);
    auto n = cycle_matroid(h).matroid;
    forbid_parallel(n, x, el->forbid_parallel_to);
    return finish(b, std::move(n), 1, std::move(h), "x=" + std::to_string(el->u) + "-" + std::to_string(el->v));
  }
  if (const auto* chain = std::get_if<SplitChainMode>(&mode)) {
    require_graph(b, true);
    if (chain->splits.size() != 3) throw PreconditionError("split chain needs three splits");
    Graph h = *b.graph;
    std::string placement = "T=";
    for (const auto& s : chain->splits) {
      if (s.k != 1) throw PreconditionError("split chain adds one edge per split");
      h = split_vertex(h, s).graph;
      placement += split_text(s);
    }
    auto n = bond_matroid(h).matroid;
    auto out = finish(b, std::move(n), 3, std::move(h), placement);
    if (!is_circuit(out.ext.matroid, out.ext.t)) throw PreconditionError("split edges are not a 3-circuit of N");
    if (!is_coindependent(out.ext.matroid, out.ext.t)) throw PreconditionError("split edges are not co-independent");
    return out;
  }
  const auto& se = std::get<SplitElementMode>(mode);
  require_graph(b, true);
  if (se.split.k != 1) throw PreconditionError("element split adds exactly one edge");
  auto res = split_vertex(*b.graph, se.split);
  auto n = bond_matroid(res.graph).matroid;
  forbid_parallel(n, res.new_edges.front(), se.forbid_parallel_to);
  return finish(b, std::move(n), 1, std::move(res.graph), "x=" + split_text(se.split));
}

}  // namespace rainbow
