// Work plans for each campaign: which instances to build and what to check on each.

#include <algorithm>
#include <filesystem>
#include <memory>
#include <numeric>
#include <random>
#include <set>

#include "campaign_internal.hpp"
#include "rainbow/budget.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/paths.hpp"

#ifndef RAINBOW_FORGE_DATA_DIR
#define RAINBOW_FORGE_DATA_DIR "data"
#endif

namespace rainbow::detail {

namespace {

constexpr std::size_t kDefaultPlacements = 8;

auto fnv1a(const std::string& s) -> std::uint64_t {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Planner {
 public:
  explicit Planner(const CampaignSpec& spec) : spec_(spec) {}

  [[nodiscard]] auto spec() const -> const CampaignSpec& { return spec_; }

  [[nodiscard]] auto seed_for(const std::string& label) const -> std::uint64_t {
    return (spec_.seed * 0x9E3779B97F4A7C15ULL) ^ fnv1a(label);
  }

  [[nodiscard]] auto placements() const -> std::size_t {
    return spec_.placements ? spec_.placements : kDefaultPlacements;
  }

  /// Indices into a rankable census of the given size.
  auto choose(const std::string& label, std::uint64_t census, std::size_t default_sample) -> std::vector<std::uint64_t> {
    auto cap = cap_for(default_sample);
    if (!cap || census <= *cap) {
      if (!cap) charge(label, census);
      note(label + ": all " + std::to_string(census));
      std::vector<std::uint64_t> out(census);
      std::iota(out.begin(), out.end(), std::uint64_t{0});
      return out;
    }
    note(label + ": seeded sample of " + std::to_string(*cap) + " out of " + std::to_string(census));
    return sample_indices(census, *cap, seed_for(label));
  }

  /// Sequences from a census that can only be walked, not ranked. Sampling uses random walks.
  template <class Seq>
  auto choose_sequences(const std::string& label, std::size_t default_sample,
                        const std::function<void(const std::function<bool(const Seq&)>&)>& enumerate,
                        const std::function<Seq(std::mt19937_64&)>& sample,
                        const std::function<std::string(const Seq&)>& key) -> std::vector<Seq> {
    auto cap = cap_for(default_sample);
    const std::uint64_t limit = cap ? *cap : Budget::current().census_cap - std::min(census_, Budget::current().census_cap);
    std::vector<Seq> all;
    bool over = false;
    enumerate([&](const Seq& s) {
      if (all.size() >= limit) {
        over = true;
        return false;
      }
      all.push_back(s);
      return true;
    });
    if (!cap) {
      if (over) throw BudgetExceeded(label + ": census exceeds the budget of " + std::to_string(Budget::current().census_cap));
      charge(label, all.size());
    }
    if (!over) {
      note(label + ": all " + std::to_string(all.size()));
      return all;
    }
    std::mt19937_64 rng(seed_for(label));
    std::set<std::string> seen;
    std::vector<Seq> out;
    for (std::size_t attempt = 0; attempt < 50 * *cap && out.size() < *cap; ++attempt) {
      auto s = sample(rng);
      if (seen.insert(key(s)).second) out.push_back(std::move(s));
    }
    note(label + ": seeded random-walk sample of " + std::to_string(out.size()) + " (census above " +
         std::to_string(*cap) + ")");
    return out;
  }

  void add(Task t) { plan_.tasks.push_back(std::move(t)); }
  void note(std::string s) { plan_.notes.push_back(std::move(s)); }
  auto take() -> Plan { return std::move(plan_); }

 private:
  [[nodiscard]] auto cap_for(std::size_t default_sample) const -> std::optional<std::size_t> {
    switch (spec_.colourings.kind) {
      case ColouringMode::Kind::All:
        return std::nullopt;
      case ColouringMode::Kind::Sample:
        return spec_.colourings.sample;
      case ColouringMode::Kind::Auto:
        break;
    }
    return default_sample;
  }

  void charge(const std::string& label, std::uint64_t census) {
    census_ += census;
    if (census_ > Budget::current().census_cap)
      throw BudgetExceeded(label + ": census total " + std::to_string(census_) + " exceeds the budget of " +
                           std::to_string(Budget::current().census_cap));
  }

  const CampaignSpec& spec_;
  Plan plan_;
  std::uint64_t census_ = 0;
};

// ------------------------------------------------------------------ helpers

auto catalog(const CampaignSpec& spec, const std::string& name) -> std::vector<Graph> {
  if (spec.graphs) return read_graph6_file(*spec.graphs);
  std::filesystem::path dir = spec.data_dir.empty() ? std::string(RAINBOW_FORGE_DATA_DIR) : spec.data_dir;
  return read_graph6_file((dir / "graphs" / name).string());
}

auto host_id(const Graph& g) -> std::string { return "g6:" + to_graph6(g); }

auto make_row(std::string id, std::string family, std::optional<std::size_t> nu, const BinaryMatroid& m,
              std::string kind, std::string bound) -> InstanceRow {
  InstanceRow r;
  r.id = std::move(id);
  r.family = std::move(family);
  r.nu = nu;
  r.epsilon = m.epsilon();
  r.rank = m.rank();
  r.kind = std::move(kind);
  r.bound = std::move(bound);
  return r;
}

auto nu_of(const InstanceBundle& b) -> std::optional<std::size_t> {
  if (b.graph) return b.graph->num_vertices();
  return std::nullopt;
}

void tag_graph(Json& instance, bool cographic) {
  if (instance.contains("graph")) instance["graph_matroid"] = cographic ? "bond" : "cycle";
}

auto record(const std::string& id, const RainbowCertificate& cert, const Extension& ext,
            const std::optional<Graph>& g, bool cographic) -> Json {
  auto rec = certificate_record(id, cert, ext, g);
  tag_graph(rec["instance"], cographic);
  return rec;
}

auto dump(const Extension& ext, const std::optional<Graph>& g, bool cographic, const std::string& family,
          const std::string& choices) -> Json {
  Json d;
  d["family"] = family;
  d["choices"] = choices;
  d["instance"] = extension_to_json(ext, g);
  tag_graph(d["instance"], cographic);
  return d;
}

void certify(PendingRow& p, const std::optional<RainbowCertificate>& cert, const Extension& ext,
             const std::optional<Graph>& g, bool cographic, const std::string& family, const std::string& choices,
             const std::string& failure) {
  if (cert) {
    p.row.outcome = Outcome::Certificate;
    p.certificates.push_back(record(p.row.id, *cert, ext, g, cographic));
  } else {
    p.row.outcome = Outcome::Violation;
    p.row.detail = failure;
    p.dump = dump(ext, g, cographic, family, choices);
  }
}

auto skipped(InstanceRow row, std::string reason) -> PendingRow {
  row.outcome = Outcome::Skipped;
  row.detail = std::move(reason);
  return {std::move(row), {}, std::nullopt};
}

auto min_n(const CampaignSpec& spec, std::size_t floor) -> std::size_t { return std::max(spec.min_n.value_or(floor), floor); }

auto stratified_label(std::size_t n) -> std::string { return "graphic-2r-1 n=" + std::to_string(n); }

auto stratified_bundle(std::size_t n, std::uint64_t index) -> InstanceBundle {
  return gen_graphic_stratified(n, graphic_stratified_choices(n, index));
}

/// Stratified graphic bundles for n in [lo, hi], one task per bundle.
void for_stratified(Planner& p, std::size_t lo, std::size_t hi, std::size_t default_sample,
                    const std::function<ItemResult(const InstanceBundle&)>& work) {
  for (auto n = lo; n <= hi; ++n) {
    for (auto i : p.choose(stratified_label(n), graphic_stratified_count(n), default_sample))
      p.add([n, i, work] { return work(stratified_bundle(n, i)); });
  }
}

auto chain_key(const std::vector<CographicStep>& steps) -> std::string {
  auto b = try_gen_cographic_stratified(steps);
  if (b) return b->choices;
  std::string s;
  for (const auto& st : steps) {
    s += st.loop ? "L" + std::to_string(st.vertex) : "S" + std::to_string(st.split.vertex);
    for (auto e : st.split.to_first) s += "." + std::to_string(e);
    s += "|";
  }
  return s;
}

/// Cographic chains for n in [lo, hi]; bundles the builder rejects are tallied.
void for_cographic(Planner& p, std::size_t lo, std::size_t hi, std::optional<std::size_t> singleton_at,
                   std::size_t default_sample, const std::function<ItemResult(const InstanceBundle&)>& work) {
  using Steps = std::vector<CographicStep>;
  for (auto n = lo; n <= hi; ++n) {
    auto label = std::string(singleton_at ? "cographic-2r-2" : "cographic-2r-1") + " n=" + std::to_string(n);
    if (singleton_at) label += " loop@" + std::to_string(*singleton_at);
    auto chains = p.choose_sequences<Steps>(
        label, default_sample,
        [&](const std::function<bool(const Steps&)>& visit) { enumerate_cographic_chains(n, singleton_at, visit); },
        [&](std::mt19937_64& rng) { return sample_cographic_chain(n, singleton_at, rng); }, chain_key);
    for (auto& steps : chains) {
      p.add([steps = std::move(steps), work] {
        auto b = try_gen_cographic_stratified(steps);
        if (!b) {
          ItemResult r;
          ++r.tallies["cographic chains rejected (bond matroid not simple or not achromatic)"];
          return r;
        }
        return work(*b);
      });
    }
  }
}

auto all_triangles(std::size_t nu) -> std::vector<TriangleMode> {
  std::vector<TriangleMode> out;
  for (VertexId a = 0; a < nu; ++a)
    for (VertexId b = a + 1; b < nu; ++b)
      for (VertexId c = b + 1; c < nu; ++c) out.push_back({a, b, c});
  return out;
}

/// Split-chain placements of T: everything when there are at most cap chains, a seeded sample otherwise.
auto split_chain_placements(const InstanceBundle& b, std::size_t cap, std::uint64_t seed) -> std::vector<ExtensionBundle> {
  const auto& g0 = *b.graph;
  std::vector<std::vector<SplitSpec>> chains;
  bool over = false;
  auto rec = [&](auto&& self, const Graph& g, std::vector<SplitSpec>& acc) -> void {
    if (over) return;
    if (acc.size() == 3) {
      if (chains.size() >= 64 * cap) {
        over = true;
        return;
      }
      chains.push_back(acc);
      return;
    }
    for (auto& s : cographic_split_options(g, 1)) {
      auto h = split_vertex(g, s).graph;
      acc.push_back(std::move(s));
      self(self, h, acc);
      acc.pop_back();
      if (over) return;
    }
  };
  std::vector<SplitSpec> acc;
  rec(rec, g0, acc);

  std::vector<ExtensionBundle> out;
  std::set<std::string> seen;
  auto try_chain = [&](const std::vector<SplitSpec>& chain) {
    try {
      auto eb = extend_with_triangle_or_element(b, SplitChainMode{chain});
      if (seen.insert(eb.placement).second) out.push_back(std::move(eb));
    } catch (const PreconditionError&) {
    }
  };
  if (!over) {
    std::vector<ExtensionBundle> valid;
    for (const auto& c : chains) try_chain(c);
    if (out.size() <= cap) return out;
    std::vector<ExtensionBundle> picked;
    for (auto i : sample_indices(out.size(), cap, seed)) picked.push_back(std::move(out[i]));
    return picked;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < 50 * cap && out.size() < cap; ++attempt) {
    Graph g = g0;
    std::vector<SplitSpec> chain;
    for (int j = 0; j < 3; ++j) {
      auto opts = cographic_split_options(g, 1);
      auto pick = std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng);
      g = split_vertex(g, opts[pick]).graph;
      chain.push_back(std::move(opts[pick]));
    }
    try_chain(chain);
  }
  return out;
}

/// Single-edge splits for a cographic extension by one element.
auto split_element_options(const InstanceBundle& b, std::size_t cap, std::uint64_t seed) -> std::vector<SplitSpec> {
  auto opts = cographic_split_options(*b.graph, 1);
  if (opts.size() <= cap) return opts;
  std::vector<SplitSpec> out;
  for (auto i : sample_indices(opts.size(), cap, seed)) out.push_back(opts[i]);
  return out;
}

auto unique_singular(const InstanceBundle& b) -> ElementId {
  auto s = colour_singular_elements(b.cm);
  if (s.size() != 1) throw PreconditionError("expected exactly one colour-singular element");
  return s.first();
}

// ------------------------------------------------- extension theorem checks

struct TheoremIResult {
  std::optional<RainbowCertificate> srct;
  ExtensionMinor deletion;
  std::optional<Graph> deletion_graph;
  std::vector<std::pair<ElementId, std::optional<RainbowCertificate>>> pairs;
};

auto check_theorem_i(const InstanceBundle& b, const ExtensionBundle& eb, bool always_pairs) -> TheoremIResult {
  TheoremIResult out;
  out.srct = find_T_collection(eb.ext, CertificateKind::TSRCT, {{}, true});
  if (out.srct && !always_pairs) return out;
  const auto e = unique_singular(b);
  out.deletion = delete_from_extension(eb.ext, ElementSet{e});
  if (!b.cographic && eb.graph) out.deletion_graph = delete_edges(*eb.graph, ElementSet{e});
  const auto circuits = enumerate_circuits(
      out.deletion.extension.matroid,
      static_cast<std::size_t>(kind_limit(CertificateKind::TSRCP, out.deletion.extension.base_rank,
                                          out.deletion.extension.matroid.rank())));
  eb.ext.t.for_each([&](ElementId x) {
    TConstraints c;
    c.avoid = out.deletion.remap.map(ElementSet{x});
    out.pairs.emplace_back(x, find_T_collection(out.deletion.extension, CertificateKind::TSRCP, c, circuits));
  });
  return out;
}

auto theorem_i_row(const InstanceBundle& b, const ExtensionBundle& eb) -> PendingRow {
  PendingRow p;
  p.row = make_row(b.id() + "|" + eb.placement, b.family, nu_of(b), b.cm.matroid, "T_SRCT|T_SRCP(M-e)",
                   "pairwise |Ci|+|Cj| <= r+2");
  auto res = check_theorem_i(b, eb, false);
  if (res.srct) {
    p.row.outcome = Outcome::Certificate;
    p.certificates.push_back(record(p.row.id, *res.srct, eb.ext, eb.graph, b.cographic));
    return p;
  }
  std::string missing;
  for (const auto& [x, cert] : res.pairs) {
    if (cert)
      p.certificates.push_back(record(p.row.id + "|avoid " + std::to_string(x), *cert, res.deletion.extension,
                                      res.deletion_graph, b.cographic));
    else
      missing += (missing.empty() ? "" : ",") + std::to_string(x);
  }
  if (missing.empty()) {
    p.row.outcome = Outcome::Certificate;
    p.row.detail = "no T-SRCT; T-SRCP in M-e avoiding each x in T";
  } else {
    p.row.outcome = Outcome::Violation;
    p.row.detail = "no T-SRCT and no T-SRCP in M-e avoiding x=" + missing;
    p.dump = dump(eb.ext, eb.graph, b.cographic, b.family, b.choices);
  }
  return p;
}

auto semi_row(const InstanceBundle& b, const ExtensionBundle& eb) -> PendingRow {
  PendingRow p;
  p.row = make_row(b.id() + "|" + eb.placement, b.family, nu_of(b), b.cm.matroid, "X_SEMI_SRCP", "|C1|+|C2| <= r+3");
  certify(p, find_T_collection(eb.ext, CertificateKind::XSemiSRCP), eb.ext, eb.graph, b.cographic, b.family,
          b.choices, "no x-semi-SRCP");
  return p;
}

auto t_pair_row(const InstanceBundle& b, const ExtensionBundle& eb, CertificateKind kind, const std::string& bound)
    -> PendingRow {
  PendingRow p;
  p.row = make_row(b.id() + "|" + eb.placement + "|" + kind_name(kind), b.family, nu_of(b), b.cm.matroid,
                   kind_name(kind), bound);
  certify(p, find_T_collection(eb.ext, kind, {{}, true}), eb.ext, eb.graph, b.cographic, b.family, b.choices,
          "no " + kind_name(kind));
  return p;
}

// ---------------------------------------------------------------- campaigns

void plan_main_graphic(Planner& p) {
  const auto& spec = p.spec();
  const auto lo = spec.min_n.value_or(1);
  const auto hi = spec.max_n.value_or(6);
  for (const auto& g : catalog(spec, "graphs_upto7.g6")) {
    const auto nu = g.num_vertices();
    if (nu < lo || nu > hi || g.num_components() != 1 || !g.is_simple() || g.num_edges() != 2 * nu) continue;
    const auto host = host_id(g);
    const auto eps = g.num_edges();
    auto m = std::make_shared<const BinaryMatroid>(cycle_matroid(g).matroid);
    auto gp = std::make_shared<const Graph>(g);
    for (auto i : p.choose(host, two_uniform_count(eps), 2000)) {
      p.add([m, gp, host, eps, i] {
        ColoredMatroid cm(*m, two_uniform_unrank(eps, i));
        PendingRow row;
        row.row = make_row(host + "#c" + std::to_string(i), "graphic eps=2nu", gp->num_vertices(), *m, "SRC4",
                           "sum |Ci| <= 2r+4");
        RainbowIndex idx(cm);
        certify(row, find_src4tuple(idx), as_extension(cm), *gp, false, "graphic eps=2nu", host,
                "no SRC 4-tuple");
        return ItemResult{{std::move(row)}, {}};
      });
    }
  }
}

void plan_main_cographic(Planner& p) {
  const auto& spec = p.spec();
  const auto lo = spec.min_n.value_or(1);
  const auto hi = spec.max_n.value_or(8);
  for (const auto& g : catalog(spec, "cubic8.g6")) {
    const auto nu = g.num_vertices();
    if (nu < lo || nu > hi || nu < 3 || g.num_components() != 1 || g.num_edges() != 2 * (nu - 2)) continue;
    auto m = std::make_shared<const BinaryMatroid>(bond_matroid(g).matroid);
    if (!simplicity_report(*m).is_simple) continue;
    const auto host = host_id(g);
    const auto eps = g.num_edges();
    auto gp = std::make_shared<const Graph>(g);
    for (auto i : p.choose(host, two_uniform_count(eps), 20000)) {
      p.add([m, gp, host, eps, i] {
        ColoredMatroid cm(*m, two_uniform_unrank(eps, i));
        PendingRow row;
        row.row = make_row(host + "#c" + std::to_string(i), "cographic eps=2(nu-2)", gp->num_vertices(), *m, "SRCP",
                           "|C1|+|C2| <= r+2");
        certify(row, find_srcp(cm), as_extension(cm), *gp, true, "cographic eps=2(nu-2)", host, "no SRCP");
        return ItemResult{{std::move(row)}, {}};
      });
    }
  }
}

void plan_theorem_i(Planner& p) {
  const auto lo = min_n(p.spec(), 3);
  const auto hi = p.spec().max_n.value_or(7);
  const auto cap = p.placements();
  for_stratified(p, lo, hi, 3000, [](const InstanceBundle& b) {
    ItemResult r;
    for (const auto& tri : all_triangles(b.graph->num_vertices()))
      r.rows.push_back(theorem_i_row(b, extend_with_triangle_or_element(b, tri)));
    return r;
  });
  const auto seed = p.spec().seed;
  for_cographic(p, lo, hi, std::nullopt, 2000, [cap, seed](const InstanceBundle& b) {
    ItemResult r;
    auto placements = split_chain_placements(b, cap, seed ^ fnv1a(b.id()));
    if (placements.empty()) ++r.tallies["cographic instances without a valid split-chain placement"];
    for (const auto& eb : placements) r.rows.push_back(theorem_i_row(b, eb));
    return r;
  });
}

void plan_theorem_ii(Planner& p) {
  const auto lo = min_n(p.spec(), 3);
  const auto hi = p.spec().max_n.value_or(7);
  const auto cap = 2 * p.placements();
  for_stratified(p, lo, hi, 3000, [](const InstanceBundle& b) {
    ItemResult r;
    const auto e = unique_singular(b);
    const auto& ge = b.graph->edge(e);
    const auto nu = static_cast<VertexId>(b.graph->num_vertices());
    for (VertexId u = 0; u < nu; ++u)
      for (VertexId v = u + 1; v < nu; ++v) {
        if ((ge.u == u && ge.v == v) || (ge.u == v && ge.v == u)) {
          r.rows.push_back(skipped(make_row(b.id() + "|x=" + std::to_string(u) + "-" + std::to_string(v), b.family,
                                            nu, b.cm.matroid, "X_SEMI_SRCP", "|C1|+|C2| <= r+3"),
                                   "x is parallel to e"));
          continue;
        }
        r.rows.push_back(semi_row(b, extend_with_triangle_or_element(b, ElementMode{u, v, std::nullopt})));
      }
    return r;
  });
  const auto seed = p.spec().seed;
  for_cographic(p, lo, hi, std::nullopt, 2000, [cap, seed](const InstanceBundle& b) {
    ItemResult r;
    const auto e = unique_singular(b);
    for (const auto& s : split_element_options(b, cap, seed ^ fnv1a(b.id()))) {
      auto eb = extend_with_triangle_or_element(b, SplitElementMode{s, std::nullopt});
      const auto x = eb.ext.t.first();
      auto base = make_row(b.id() + "|" + eb.placement, b.family, nu_of(b), b.cm.matroid, "X_SEMI_SRCP",
                           "|C1|+|C2| <= r+3");
      if (is_circuit(eb.ext.matroid, ElementSet{x})) {
        r.rows.push_back(skipped(std::move(base), "x is a loop of N"));
      } else if (is_circuit(eb.ext.matroid, ElementSet{x, e})) {
        r.rows.push_back(skipped(std::move(base), "x is parallel to e"));
      } else {
        r.rows.push_back(semi_row(b, eb));
      }
    }
    return r;
  });
}

/// The edges of T together with the colour-singular edges span a K4.
auto induces_k4(const Graph& g, const ElementSet& edges) -> bool {
  std::set<VertexId> vs;
  std::set<std::pair<VertexId, VertexId>> pairs;
  edges.for_each([&](ElementId e) {
    const auto& ed = g.edge(e);
    vs.insert(ed.u);
    vs.insert(ed.v);
    pairs.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
  });
  return vs.size() == 4 && pairs.size() == 6 && edges.size() == 6;
}

void plan_theorem_iii_graphic(Planner& p) {
  using Seq = std::vector<MergeChoice>;
  const auto lo = min_n(p.spec(), 3);
  const auto hi = p.spec().max_n.value_or(7);
  for (auto n = lo; n <= hi; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      if (n < k + 1) continue;
      auto key = [n, k](const Seq& s) { return gen_graphic_2r_minus_2(n, k, s).choices; };
      auto seqs = p.choose_sequences<Seq>(
          "graphic-k" + std::to_string(k) + " n=" + std::to_string(n), 500,
          [&](const std::function<bool(const Seq&)>& visit) { enumerate_merge_sequences(n, k, visit); },
          [&](std::mt19937_64& rng) { return sample_merge_sequence(n, k, rng); }, key);
      for (auto& s : seqs) {
        p.add([n, k, s = std::move(s)] {
          auto b = gen_graphic_2r_minus_2(n, k, s);
          ItemResult r;
          const auto singular = colour_singular_elements(b.cm);
          for (const auto& tri : all_triangles(n)) {
            auto eb = extend_with_triangle_or_element(b, tri);
            if (k == 3 && induces_k4(*eb.graph, eb.ext.t | singular)) {
              r.rows.push_back(skipped(make_row(b.id() + "|" + eb.placement + "|NEAR_T_SRCP", b.family, n,
                                                b.cm.matroid, "NEAR_T_SRCP", "|C1|+|C2| <= r+3"),
                                       "T with the colour-singular edges induces K4"));
            } else {
              r.rows.push_back(t_pair_row(b, eb, CertificateKind::NearTSRCP, "|C1|+|C2| <= r+3"));
            }
            if (k == 2) r.rows.push_back(t_pair_row(b, eb, CertificateKind::TSRCP, "|C1|+|C2| <= r+2"));
          }
          return r;
        });
      }
    }
}

void plan_theorem_iii_cographic(Planner& p) {
  const auto lo = min_n(p.spec(), 3);
  const auto hi = p.spec().max_n.value_or(6);
  const auto cap = p.placements();
  const auto seed = p.spec().seed;
  for (auto n = lo; n <= hi; ++n)
    for (std::size_t at = 0; at < n - 1; ++at) {
      for_cographic(p, n, n, at, 500, [cap, seed](const InstanceBundle& b) {
        ItemResult r;
        auto placements = split_chain_placements(b, cap, seed ^ fnv1a(b.id()));
        if (placements.empty()) ++r.tallies["cographic instances without a valid split-chain placement"];
        for (const auto& eb : placements) r.rows.push_back(t_pair_row(b, eb, CertificateKind::TSRCP, "|C1|+|C2| <= r+2"));
        return r;
      });
    }
}

void plan_distances(Planner& p) {
  const auto lo = min_n(p.spec(), 3);
  const auto hi = p.spec().max_n.value_or(8);
  for_stratified(p, lo, hi, 100000, [](const InstanceBundle& b) {
    const auto& g = *b.graph;
    const auto n = g.num_vertices();
    const auto d = rainbow_distances(g, b.cm.coloring);
    const auto limit = n / 2;
    std::size_t worst = 0;
    std::size_t tight = 0;
    std::string bad;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        const auto& duv = d[u * n + v];
        if (!duv) {
          bad = "no rainbow path between " + std::to_string(u) + " and " + std::to_string(v);
          continue;
        }
        worst = std::max(worst, *duv);
        if (*duv > limit) bad = "dist(" + std::to_string(u) + "," + std::to_string(v) + ") = " + std::to_string(*duv);
        if (*duv == limit) ++tight;
      }
    if (bad.empty() && n % 2 == 0 && tight > 1) bad = std::to_string(tight) + " pairs at distance n/2";
    PendingRow row;
    row.row = make_row(b.id(), b.family, n, b.cm.matroid, "RAINBOW_DISTANCE",
                       "dist <= floor(n/2); one tight pair at most for even n");
    if (bad.empty()) {
      row.row.outcome = Outcome::Holds;
      row.row.detail = "max " + std::to_string(worst) + ", tight pairs " + std::to_string(tight);
    } else {
      row.row.outcome = Outcome::Violation;
      row.row.detail = bad;
      row.dump = dump(as_extension(b.cm), g, false, b.family, b.choices);
    }
    return ItemResult{{std::move(row)}, {}};
  });
}

struct WorstPair {
  std::optional<PathPair> pair;
  std::array<VertexId, 2> sources{};
  std::array<VertexId, 2> targets{};
  std::size_t queries = 0;
  std::string failure;
};

void plan_paths(Planner& p) {
  const auto lo = min_n(p.spec(), 3);
  const auto hi = p.spec().max_n.value_or(7);
  for_stratified(p, lo, hi, 3000, [](const InstanceBundle& b) {
    const auto& g = *b.graph;
    const auto n = static_cast<VertexId>(g.num_vertices());
    RainbowPathIndex idx(g, b.cm.coloring);
    auto consider = [&](WorstPair& w, std::array<VertexId, 2> s, std::array<VertexId, 2> t, std::size_t bound) {
      ++w.queries;
      auto r = find_disjoint_rainbow_paths(idx, s, t, bound);
      if (!r) {
        if (w.failure.empty())
          w.failure = "no pair for sources " + std::to_string(s[0]) + "," + std::to_string(s[1]) + " targets " +
                      std::to_string(t[0]) + "," + std::to_string(t[1]);
        return;
      }
      if (!w.pair || r->total() > w.pair->total()) {
        w.pair = std::move(r);
        w.sources = s;
        w.targets = t;
      }
    };
    WorstPair same, distinct, twin;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId a = 0; a < n; ++a)
        for (VertexId c = a + 1; c < n; ++c)
          if (a != u && c != u) consider(same, {u, u}, {a, c}, n - 1);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId bb = a + 1; bb < n; ++bb)
        for (VertexId c = bb + 1; c < n; ++c)
          for (VertexId d = c + 1; d < n; ++d) {
            consider(distinct, {a, bb}, {c, d}, n - 2);
            consider(distinct, {a, c}, {bb, d}, n - 2);
            consider(distinct, {a, d}, {bb, c}, n - 2);
          }
    // The pair {v11, v22} is {0, 1} in this labelling and is excluded.
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (!(u == 0 && v == 1)) consider(twin, {u, u}, {v, v}, n);

    ItemResult r;
    auto emit = [&](const WorstPair& w, const std::string& kind, const std::string& bound_name, std::size_t bound) {
      PendingRow row;
      row.row = make_row(b.id() + "|" + kind, b.family, n, b.cm.matroid, kind, bound_name);
      if (w.queries == 0) {
        r.rows.push_back(skipped(std::move(row.row), "no vertex tuple of this shape"));
        return;
      }
      if (!w.failure.empty()) {
        row.row.outcome = Outcome::Violation;
        row.row.detail = w.failure;
        row.dump = dump(as_extension(b.cm), g, false, b.family, b.choices);
      } else {
        row.row.outcome = Outcome::Certificate;
        row.row.detail = "worst total " + std::to_string(w.pair->total()) + " over " + std::to_string(w.queries) + " tuples";
        row.certificates.push_back(
            path_record(row.row.id, g, b.cm.coloring, *w.pair, w.sources, w.targets, bound, bound_name));
      }
      r.rows.push_back(std::move(row));
    };
    emit(same, "PATHS_SAME_SOURCE", "|P1|+|P2| <= n-1", n - 1);
    emit(distinct, "PATHS_DISTINCT_ENDS", "|P1|+|P2| <= n-2", n - 2);
    emit(twin, "PATHS_SAME_ENDS", "|P1|+|P2| <= n", n);
    return r;
  });
}

void plan_theta(Planner& p) {
  const auto& spec = p.spec();
  const auto lo = spec.min_n.value_or(1);
  const auto hi = spec.max_n.value_or(5);
  for (const auto& g : catalog(spec, "graphs_upto7.g6")) {
    const auto nu = g.num_vertices();
    if (nu < lo || nu > hi || g.num_components() != 1 || !g.is_simple() || g.num_edges() != 2 * nu) continue;
    const auto host = host_id(g);
    const auto eps = g.num_edges();
    auto m = std::make_shared<const BinaryMatroid>(cycle_matroid(g).matroid);
    auto gp = std::make_shared<const Graph>(g);
    for (auto i : p.choose(host, two_uniform_count(eps), 1000)) {
      p.add([m, gp, host, eps, i] {
        ColoredMatroid cm(*m, two_uniform_unrank(eps, i));
        PendingRow row;
        row.row = make_row(host + "#c" + std::to_string(i), "graphic eps=2nu", gp->num_vertices(), *m, "THETA_OUTCOME",
                           "i: SRCP; ii: psi <= r+2; iii: chordal SRThCP");
        auto rep = find_theta_circuit_pair(cm);
        const std::optional<RainbowCertificate>* pick = nullptr;
        for (const auto* c : {&rep.srcp, &rep.psi_small, &rep.one_chord, &rep.two_chords})
          if (!pick && c->has_value()) pick = c;
        certify(row, pick ? *pick : std::nullopt, as_extension(cm), *gp, false, "graphic eps=2nu", host,
                "no outcome holds");
        if (pick) row.row.detail = "outcomes " + rep.outcome_labels();
        return ItemResult{{std::move(row)}, {}};
      });
    }
  }
}

void plan_stratification(Planner& p) {
  const auto& spec = p.spec();
  const auto lo = std::max<std::size_t>(spec.min_n.value_or(2), 2);
  const auto hi = spec.max_n.value_or(5);
  for (const auto& g : catalog(spec, "graphs_upto7.g6")) {
    const auto nu = g.num_vertices();
    if (nu < lo || nu > hi || g.num_components() != 1) continue;
    const auto host = host_id(g);
    const auto eps = g.num_edges();
    const auto r = nu - 1;
    auto m = std::make_shared<const BinaryMatroid>(cycle_matroid(g).matroid);
    auto circuits = std::make_shared<const std::vector<ElementSet>>(enumerate_circuits(*m));
    auto gp = std::make_shared<const Graph>(g);
    for (auto i : p.choose(host, exact_colouring_count(eps, r), 3000)) {
      p.add([m, circuits, gp, host, eps, r, i] {
        ColoredMatroid cm(*m, exact_colouring_unrank(eps, r, i));
        PendingRow row;
        row.row = make_row(host + "#c" + std::to_string(i), "graphic r-colouring", gp->num_vertices(), *m,
                           "STRATIFICATION|RAINBOW_CIRCUIT", "stratified iff circuit-achromatic");
        const auto ach = is_circuit_achromatic(cm, *circuits);
        const auto strat = find_stratification(cm);
        std::string bad;
        if (ach.achromatic != strat.has_value())
          bad = ach.achromatic ? "achromatic but no stratification" : "stratified but has a rainbow circuit";
        if (bad.empty()) {
          const auto cor = check_corollaries(cm);
          if (cor.parallel_cocircuit_applicable && !cor.parallel_class) bad = "no colour class is a parallel class";
          if (cor.parallel_cocircuit_applicable && !cor.cocircuit_class) bad = "no colour class is a cocircuit";
          if (cor.rainbow_circuit_applicable && !cor.rainbow_circuit)
            bad = "simple, r(M) colours, nothing colour-singular, yet no rainbow circuit";
        }
        if (!bad.empty()) {
          row.row.outcome = Outcome::Violation;
          row.row.detail = bad;
          row.dump = dump(as_extension(cm), *gp, false, "graphic r-colouring", host);
        } else if (strat) {
          row.row.outcome = Outcome::Certificate;
          row.row.detail = "stratified; parallel class and cocircuit classes present";
          auto rec = stratification_record(row.row.id, cm, *strat, *gp);
          tag_graph(rec["instance"], false);
          row.certificates.push_back(std::move(rec));
        } else {
          certify(row, find_rainbow_circuit(cm), as_extension(cm), *gp, false, "graphic r-colouring", host,
                  "has a rainbow circuit but the search found none");
          if (row.row.outcome == Outcome::Certificate) row.row.detail = "not achromatic";
        }
        return ItemResult{{std::move(row)}, {}};
      });
    }
  }
}

// ------------------------------------------------------------- sum corpus

struct Piece {
  std::string name;
  BinaryMatroid m;
};

auto graph_of(std::size_t nu, std::initializer_list<std::pair<VertexId, VertexId>> edges) -> Graph {
  Graph g(nu);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

auto pieces() -> std::vector<Piece> {
  std::vector<Piece> out;
  out.push_back({"K4", gen_named(NamedInstance::K4).cm.matroid});
  out.push_back({"K5", gen_named(NamedInstance::K5).cm.matroid});
  out.push_back({"K33", gen_named(NamedInstance::K33).cm.matroid});
  out.push_back({"R10", gen_named(NamedInstance::R10).cm.matroid});
  out.push_back({"octahedron", cycle_matroid(graph_of(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
                                                          {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}))
                                   .matroid});
  out.push_back({"W4", cycle_matroid(graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}}))
                           .matroid});
  out.push_back({"prism", cycle_matroid(graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4},
                                                     {2, 5}}))
                              .matroid});
  out.push_back({"K5-e", cycle_matroid(graph_of(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                                                    {3, 4}}))
                             .matroid});
  out.push_back({"M*(K33)", dual(gen_named(NamedInstance::K33).cm.matroid)});
  return out;
}

struct SumInstance {
  std::string name;
  int k = 2;
  BinaryMatroid m;
  std::array<ElementSet, 2> side;
  std::array<std::size_t, 2> piece_rank{};
};

auto first_triangle(const BinaryMatroid& m) -> std::optional<ElementSet> {
  for (const auto& c : enumerate_circuits(m, 3))
    if (c.size() == 3) return c;
  return std::nullopt;
}

auto sum_corpus() -> std::vector<SumInstance> {
  const auto ps = pieces();
  std::vector<SumInstance> out;
  auto push = [&](const Piece& a, const Piece& b, int k, const std::vector<std::pair<ElementId, ElementId>>& shared) {
    KSumResult res;
    try {
      res = k_sum(a.m, b.m, shared, k);
    } catch (const PreconditionError&) {
      return;
    }
    if (!simplicity_report(res.matroid).is_simple) return;
    SumInstance s;
    s.name = a.name + "+" + std::to_string(k) + "+" + b.name;
    s.k = k;
    for (auto id : res.first_to_sum)
      if (id) s.side[0].insert(*id);
    for (auto id : res.second_to_sum)
      if (id) s.side[1].insert(*id);
    s.piece_rank = {a.m.rank(), b.m.rank()};
    s.m = std::move(res.matroid);
    out.push_back(std::move(s));
  };
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i; j < ps.size(); ++j) push(ps[i], ps[j], 2, {{0, 0}});
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i; j < ps.size(); ++j) {
      if (ps[i].m.epsilon() < 7 || ps[j].m.epsilon() < 7) continue;
      auto ta = first_triangle(ps[i].m);
      auto tb = first_triangle(ps[j].m);
      if (!ta || !tb) continue;
      auto ea = ta->elements();
      auto eb = tb->elements();
      push(ps[i], ps[j], 3, {{ea[0], eb[0]}, {ea[1], eb[1]}, {ea[2], eb[2]}});
    }
  return out;
}

auto side_has_rainbow(const BinaryMatroid& m, const Coloring& c, const ElementSet& side) -> bool {
  for (const auto& circ : circuits_within(m, side))
    if (is_rainbow(c, circ)) return true;
  return false;
}

auto saturating_add(std::uint64_t a, std::uint64_t b) -> std::uint64_t {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

void plan_sum_lemma(Planner& p) {
  for (auto& s : sum_corpus()) {
    auto sp = std::make_shared<const SumInstance>(std::move(s));
    const auto eps = sp->m.epsilon();
    const auto r = sp->m.rank();
    // Colourings with r+1 to r+3 colours, indexed bucket by bucket.
    std::vector<std::pair<std::size_t, std::uint64_t>> buckets;
    std::uint64_t census = 0;
    for (auto k = r + 1; k <= std::min(eps, r + 3); ++k) {
      buckets.emplace_back(k, exact_colouring_count(eps, k));
      census = saturating_add(census, buckets.back().second);
    }
    for (auto i : p.choose(sp->name, census, 60)) {
      p.add([sp, buckets, i] {
        auto rest = i;
        std::size_t k = 0;
        for (const auto& [kk, cnt] : buckets) {
          if (rest < cnt) {
            k = kk;
            break;
          }
          rest -= cnt;
        }
        const auto eps = sp->m.epsilon();
        ColoredMatroid cm(sp->m, exact_colouring_unrank(eps, k, rest));
        PendingRow row;
        row.row = make_row(sp->name + "#c" + std::to_string(i), std::to_string(sp->k) + "-sum", std::nullopt, sp->m,
                           "SRCP", "|C1|+|C2| <= r+2");
        std::string unmet;
        for (int side = 0; side < 2; ++side)
          if (!side_has_rainbow(sp->m, cm.coloring, sp->side[side]))
            unmet = "side " + std::to_string(side + 1) + " has no rainbow circuit";
        if (unmet.empty() && sp->k == 2 && !(eps > sp->m.rank() + 3)) unmet = "eps(M) <= r(M)+3";
        if (unmet.empty() && sp->k == 3)
          for (int side = 0; side < 2; ++side)
            if (!(sp->side[side].size() > sp->piece_rank[side] + 1))
              unmet = "side " + std::to_string(side + 1) + " has eps <= r(Mi)+1";
        if (!unmet.empty()) return ItemResult{{skipped(std::move(row.row), "hypothesis fails: " + unmet)}, {}};
        certify(row, find_srcp(cm), as_extension(cm), std::nullopt, false, std::to_string(sp->k) + "-sum", sp->name,
                "no SRCP");
        return ItemResult{{std::move(row)}, {}};
      });
    }
  }
}

// ------------------------------------------------------------ observations

void plan_obs_singular(Planner& p, const std::vector<Graph>& graphs, std::size_t lo, std::size_t hi) {
  for (const auto& g : graphs) {
    const auto nu = g.num_vertices();
    if (nu < lo || nu > hi || g.num_components() != 1) continue;
    for (bool cographic : {false, true}) {
      auto m = std::make_shared<const BinaryMatroid>(cographic ? bond_matroid(g).matroid : cycle_matroid(g).matroid);
      const auto r = m->rank();
      if (r < 2 || m->epsilon() != 2 * r - 1 || !simplicity_report(*m).is_simple) continue;
      const auto host = std::string(cographic ? "bond " : "cycle ") + host_id(g);
      const auto eps = m->epsilon();
      auto circuits = std::make_shared<const std::vector<ElementSet>>(enumerate_circuits(*m));
      auto gp = std::make_shared<const Graph>(g);
      for (auto i : p.choose("obs-1.1 " + host, exact_colouring_count(eps, r), 2000)) {
        p.add([m, circuits, gp, host, eps, r, i, cographic] {
          ItemResult res;
          ColoredMatroid cm(*m, exact_colouring_unrank(eps, r, i));
          if (!cm.coloring.is_k_bounded(2)) {
            ++res.tallies["obs-1.1 colourings outside the hypothesis (not 2-bounded)"];
            return res;
          }
          if (!is_circuit_achromatic(cm, *circuits).achromatic) {
            ++res.tallies["obs-1.1 colourings outside the hypothesis (not achromatic)"];
            return res;
          }
          PendingRow row;
          row.row = make_row("obs-1.1 " + host + "#c" + std::to_string(i), cographic ? "cographic" : "graphic",
                             gp->num_vertices(), *m, "SINGULAR_COUNT", "exactly one colour-singular element");
          const auto singular = colour_singular_elements(cm).size();
          if (singular == 1) {
            row.row.outcome = Outcome::Holds;
            row.row.detail = "one colour-singular element";
          } else {
            row.row.outcome = Outcome::Violation;
            row.row.detail = std::to_string(singular) + " colour-singular elements";
            row.dump = dump(as_extension(cm), *gp, cographic, "obs-1.1", host);
          }
          res.rows.push_back(std::move(row));
          return res;
        });
      }
    }
  }
}

auto e_rainbow_row(const InstanceBundle& b, const ExtensionBundle& eb) -> PendingRow {
  PendingRow p;
  p.row = make_row("obs-1.2 " + b.id() + "|" + eb.placement, b.family, nu_of(b), b.cm.matroid, "E_RAINBOW",
                   "|C| <= r");
  certify(p, find_T_collection(eb.ext, CertificateKind::ERainbow), eb.ext, eb.graph, b.cographic, b.family, b.choices,
          "no e-rainbow circuit");
  return p;
}

void plan_obs_e_rainbow(Planner& p, std::size_t lo, std::size_t hi) {
  for_stratified(p, lo, hi, 3000, [](const InstanceBundle& b) {
    ItemResult r;
    const auto nu = static_cast<VertexId>(b.graph->num_vertices());
    for (VertexId u = 0; u < nu; ++u)
      for (VertexId v = u + 1; v < nu; ++v)
        r.rows.push_back(e_rainbow_row(b, extend_with_triangle_or_element(b, ElementMode{u, v, std::nullopt})));
    return r;
  });
  const auto cap = 2 * p.placements();
  const auto seed = p.spec().seed;
  for_cographic(p, lo, hi, std::nullopt, 2000, [cap, seed](const InstanceBundle& b) {
    ItemResult r;
    for (const auto& s : split_element_options(b, cap, seed ^ fnv1a(b.id())))
      r.rows.push_back(e_rainbow_row(b, extend_with_triangle_or_element(b, SplitElementMode{s, std::nullopt})));
    return r;
  });
}

void plan_obs_digon(Planner& p, const std::vector<Graph>& graphs, std::size_t lo, std::size_t hi) {
  for (const auto& g : graphs) {
    const auto nu = g.num_vertices();
    if (nu < std::max<std::size_t>(lo, 4) || nu > hi || g.num_components() != 1 || g.num_edges() != 2 * nu - 1)
      continue;
    for (EdgeId j = 0; j < g.num_edges(); ++j) {
      Graph h = g;
      const auto copy = h.add_edge(g.edge(j).u, g.edge(j).v);
      auto m = std::make_shared<const BinaryMatroid>(cycle_matroid(h).matroid);
      auto hp = std::make_shared<const Graph>(h);
      const auto host = host_id(g) + "+" + std::to_string(j);
      const auto eps = h.num_edges();
      for (auto i : p.choose("obs-12.1 " + host, two_uniform_count(eps), 300)) {
        p.add([m, hp, host, eps, i, j, copy] {
          ItemResult res;
          ColoredMatroid cm(*m, two_uniform_unrank(eps, i));
          std::size_t non_parallel = 0;
          for (const auto& cls : cm.coloring.classes())
            if (!is_circuit(*m, cls)) ++non_parallel;
          if (cm.coloring.colour(j) == cm.coloring.colour(copy) || non_parallel < 3) {
            ++res.tallies["obs-12.1 colourings outside the hypothesis"];
            return res;
          }
          PendingRow row;
          row.row = make_row("obs-12.1 " + host + "#c" + std::to_string(i), "graphic with digon", hp->num_vertices(),
                             *m, "SRCP", "|C1|+|C2| <= r+2");
          certify(row, find_srcp(cm), as_extension(cm), *hp, false, "obs-12.1", host, "no SRCP");
          res.rows.push_back(std::move(row));
          return res;
        });
      }
    }
  }
}

void plan_obs_triangle_class(Planner& p, const std::vector<Graph>& graphs, std::size_t lo, std::size_t hi) {
  for (const auto& g : graphs) {
    const auto nu = g.num_vertices();
    if (nu < lo || nu > hi || g.num_components() != 1 || g.num_edges() != 2 * nu - 2) continue;
    for (bool cographic : {false, true}) {
      auto m = std::make_shared<const BinaryMatroid>(cographic ? bond_matroid(g).matroid : cycle_matroid(g).matroid);
      if (m->epsilon() != 2 * m->rank()) continue;
      auto gp = std::make_shared<const Graph>(g);
      for (const auto& tri : enumerate_circuits(*m, 3)) {
        if (tri.size() != 3) continue;
        const auto rest = m->ground() - tri;
        const auto mrest = rest.size();
        std::vector<std::pair<std::size_t, std::uint64_t>> buckets;
        std::uint64_t census = 0;
        for (auto k = (mrest + 1) / 2; k <= std::min(mrest, (mrest + 1) / 2 + 1); ++k) {
          buckets.emplace_back(k, exact_colouring_count(mrest, k));
          census += buckets.back().second;
        }
        const auto host = std::string(cographic ? "bond " : "cycle ") + host_id(g) + " class" + tri.to_string();
        for (auto i : p.choose("obs-12.2 " + host, census, 300)) {
          p.add([m, gp, host, buckets, tri, rest, i, cographic] {
            ItemResult res;
            auto idx = i;
            std::size_t k = 0;
            for (const auto& [kk, cnt] : buckets) {
              if (idx < cnt) {
                k = kk;
                break;
              }
              idx -= cnt;
            }
            auto partial = exact_colouring_unrank(rest.size(), k, idx);
            if (!partial.is_k_bounded(2)) {
              ++res.tallies["obs-12.2 colourings outside the hypothesis (not 2-bounded)"];
              return res;
            }
            std::vector<ColourId> colours(m->epsilon(), static_cast<ColourId>(k));
            std::size_t pos = 0;
            rest.for_each([&](ElementId e) { colours[e] = partial.colour(static_cast<ElementId>(pos++)); });
            ColoredMatroid cm(*m, Coloring(colours).canonical());
            PendingRow row;
            row.row = make_row("obs-12.2 " + host + "#c" + std::to_string(i), cographic ? "cographic" : "graphic",
                               gp->num_vertices(), *m, "RAINBOW_CIRCUIT", "-");
            certify(row, find_rainbow_circuit(cm), as_extension(cm), *gp, cographic, "obs-12.2", host,
                    "no rainbow circuit");
            res.rows.push_back(std::move(row));
            return res;
          });
        }
      }
    }
  }
}

void plan_obs_three_sum(Planner& p) {
  for (auto& s : sum_corpus()) {
    if (s.k != 3 || s.m.epsilon() != 2 * (s.m.rank() + 1)) continue;
    auto sp = std::make_shared<const SumInstance>(std::move(s));
    const auto eps = sp->m.epsilon();
    for (auto i : p.choose("obs-12.3 " + sp->name, two_uniform_count(eps), 300)) {
      p.add([sp, eps, i] {
        ColoredMatroid cm(sp->m, two_uniform_unrank(eps, i));
        PendingRow row;
        row.row = make_row("obs-12.3 " + sp->name + "#c" + std::to_string(i), "3-sum", std::nullopt, sp->m,
                           "SRCP|ONE_SIDE_RAINBOW", "SRCP or exactly one side rainbow");
        if (auto cert = find_srcp(cm)) {
          certify(row, cert, as_extension(cm), std::nullopt, false, "3-sum", sp->name, "");
        } else {
          const int sides = int(side_has_rainbow(sp->m, cm.coloring, sp->side[0])) +
                            int(side_has_rainbow(sp->m, cm.coloring, sp->side[1]));
          if (sides == 1) {
            row.row.outcome = Outcome::Holds;
            row.row.detail = "no SRCP; exactly one side has a rainbow circuit";
          } else {
            row.row.outcome = Outcome::Violation;
            row.row.detail = "no SRCP and " + std::to_string(sides) + " sides have rainbow circuits";
            row.dump = dump(as_extension(cm), std::nullopt, false, "3-sum", sp->name);
          }
        }
        return ItemResult{{std::move(row)}, {}};
      });
    }
  }
}

void plan_observations(Planner& p) {
  const auto& spec = p.spec();
  const auto lo = min_n(spec, 3);
  const auto hi = spec.max_n.value_or(5);
  const auto graphs = catalog(spec, "graphs_upto7.g6");
  plan_obs_singular(p, graphs, lo, hi);
  plan_obs_e_rainbow(p, lo, hi);
  plan_obs_digon(p, graphs, lo, hi);
  plan_obs_triangle_class(p, graphs, lo, hi);
  plan_obs_three_sum(p);
}

// ----------------------------------------------------------------- K23+

void plan_k23(Planner& p) {
  for (auto which : {NamedInstance::K23Plus1, NamedInstance::K23Plus2}) {
    const auto name = which == NamedInstance::K23Plus1 ? std::string("K23_PLUS_1") : std::string("K23_PLUS_2");
    for (const auto& tri : all_triangles(5)) {
      const bool documented = tri.x1 == 2 && tri.x2 == 3 && tri.x3 == 4;
      p.add([which, name, tri, documented] {
        auto b = gen_named(which);
        b.choices = name;
        auto eb = extend_with_triangle_or_element(b, tri);
        if (!documented) return ItemResult{{theorem_i_row(b, eb)}, {}};
        PendingRow row;
        row.row = make_row(b.id() + "|" + eb.placement, b.family, 5, b.cm.matroid, "T_SRCT|T_SRCP(M-e)",
                           "no T-SRCT; T-SRCP avoiding e1 for every pair");
        auto res = check_theorem_i(b, eb, true);
        std::string mismatch;
        if (res.srct) {
          mismatch = "a T-SRCT exists";
          row.certificates.push_back(record(row.row.id, *res.srct, eb.ext, eb.graph, false));
        }
        std::string missing;
        for (const auto& [x, cert] : res.pairs) {
          if (cert)
            row.certificates.push_back(record(row.row.id + "|avoid " + std::to_string(x), *cert, res.deletion.extension,
                                              res.deletion_graph, false));
          else
            missing += (missing.empty() ? "" : ",") + std::to_string(x);
        }
        if (!missing.empty())
          mismatch += (mismatch.empty() ? "" : "; ") + std::string("no T-SRCP in M-e avoiding x=") + missing;
        if (mismatch.empty()) {
          row.row.outcome = Outcome::Expected;
          row.row.detail = "documented shape: no T-SRCT, T-SRCP avoiding e1 for every pair";
        } else {
          row.row.outcome = Outcome::Violation;
          row.row.detail = "documented shape not matched: " + mismatch;
          row.dump = dump(eb.ext, eb.graph, false, b.family, b.choices);
        }
        return ItemResult{{std::move(row)}, {}};
      });
    }
  }
}

}  // namespace

auto build_plan(const CampaignSpec& spec) -> Plan {
  Planner p(spec);
  switch (spec.name) {
    case CampaignName::MainTheoremGraphic:
      plan_main_graphic(p);
      break;
    case CampaignName::MainTheoremCographic:
      plan_main_cographic(p);
      break;
    case CampaignName::Theorem22I:
      plan_theorem_i(p);
      break;
    case CampaignName::Theorem22II:
      plan_theorem_ii(p);
      break;
    case CampaignName::Theorem22IIIGraphic:
      plan_theorem_iii_graphic(p);
      break;
    case CampaignName::Theorem22IIICographic:
      plan_theorem_iii_cographic(p);
      break;
    case CampaignName::LemmaDistances:
      plan_distances(p);
      break;
    case CampaignName::LemmaPaths:
      plan_paths(p);
      break;
    case CampaignName::ThetaOutcomes:
      plan_theta(p);
      break;
    case CampaignName::StratificationIff:
      plan_stratification(p);
      break;
    case CampaignName::SumLemma:
      plan_sum_lemma(p);
      break;
    case CampaignName::Observations:
      plan_observations(p);
      break;
    case CampaignName::K23Exception:
      plan_k23(p);
      break;
  }
  return p.take();
}

}  // namespace rainbow::detail
