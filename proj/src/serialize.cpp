#include "rainbow/serialize.hpp"

#include "rainbow/errors.hpp"

namespace rainbow {

auto set_to_json(const ElementSet& s) -> Json {
  Json out = Json::array();
  s.for_each([&](ElementId e) { out.push_back(e); });
  return out;
}

auto set_from_json(const Json& j) -> ElementSet {
  if (!j.is_array()) throw ParseError("element set must be a JSON array");
  ElementSet s;
  for (const auto& v : j) {
    auto e = v.get<std::int64_t>();
    if (e < 0 || e >= static_cast<std::int64_t>(ElementSet::kCapacity)) throw ParseError("element id out of range");
    s.insert(static_cast<ElementId>(e));
  }
  return s;
}

namespace {

auto matrix_json(const BinaryMatroid& m) -> Json {
  Json rows = Json::array();
  for (const auto& r : m.matrix().row_strings()) rows.push_back(r);
  return rows;
}

auto matroid_from_json(const Json& j) -> BinaryMatroid {
  const auto cols = j.at("cols").get<std::size_t>();
  std::string text = std::to_string(j.at("rows").size()) + " " + std::to_string(cols) + "\n";
  for (const auto& r : j.at("rows")) text += r.get<std::string>() + "\n";
  return BinaryMatroid::from_matrix(GF2Matrix::parse(text));
}

auto colours_from_json(const Json& j) -> Coloring { return Coloring(j.get<std::vector<ColourId>>()); }

}  // namespace

auto extension_to_json(const Extension& ext, const std::optional<Graph>& g) -> Json {
  Json out;
  out["cols"] = ext.matroid.epsilon();
  out["rows"] = matrix_json(ext.matroid);
  out["colours"] = ext.coloring.colours();
  out["t"] = set_to_json(ext.t);
  if (g) out["graph"] = g->to_edge_list();
  return out;
}

auto extension_from_json(const Json& j) -> Extension {
  return Extension(matroid_from_json(j), colours_from_json(j.at("colours")), set_from_json(j.at("t")));
}

auto certificate_to_json(const RainbowCertificate& cert) -> Json {
  Json out;
  out["kind"] = kind_name(cert.kind);
  Json cs = Json::array();
  for (const auto& c : cert.circuits) cs.push_back(set_to_json(c));
  out["circuits"] = cs;
  if (!cert.cycles.empty()) {
    Json cy = Json::array();
    for (const auto& c : cert.cycles) cy.push_back(set_to_json(c));
    out["cycles"] = cy;
  }
  if (!cert.avoid.empty()) out["avoid"] = set_to_json(cert.avoid);
  Json bounds = Json::object();
  for (const auto& b : cert.bounds) bounds[b.name] = {{"lhs", b.lhs}, {"rhs", b.rhs}};
  out["bounds"] = bounds;
  out["transcript"] = cert.transcript;
  return out;
}

auto certificate_from_json(const Json& j) -> RainbowCertificate {
  RainbowCertificate cert;
  cert.kind = parse_kind(j.at("kind").get<std::string>());
  for (const auto& c : j.at("circuits")) cert.circuits.push_back(set_from_json(c));
  if (j.contains("cycles"))
    for (const auto& c : j.at("cycles")) cert.cycles.push_back(set_from_json(c));
  if (j.contains("avoid")) cert.avoid = set_from_json(j.at("avoid"));
  for (const auto& [name, b] : j.at("bounds").items())
    cert.bounds.push_back({name, b.at("lhs").get<long long>(), b.at("rhs").get<long long>()});
  if (j.contains("transcript")) cert.transcript = j.at("transcript").get<std::vector<std::string>>();
  return cert;
}

auto certificate_record(const std::string& instance_id, const RainbowCertificate& cert, const Extension& ext,
                        const std::optional<Graph>& g) -> Json {
  require_verified(cert, ext);
  Json out;
  out["instance_id"] = instance_id;
  const auto body = certificate_to_json(cert);
  for (const auto& [k, v] : body.items()) out[k] = v;
  out["verified"] = true;
  out["instance"] = extension_to_json(ext, g);
  return out;
}

namespace {

auto path_json(const RainbowPath& p) -> Json { return {{"vertices", p.vertices}, {"edges", p.edges}}; }

auto path_from_json(const Json& j) -> RainbowPath {
  RainbowPath p;
  p.vertices = j.at("vertices").get<std::vector<VertexId>>();
  p.edges = j.at("edges").get<std::vector<EdgeId>>();
  return p;
}

}  // namespace

auto path_record(const std::string& instance_id, const Graph& g, const Coloring& c, const PathPair& p,
                 std::array<VertexId, 2> sources, std::array<VertexId, 2> targets, std::size_t bound,
                 const std::string& bound_name) -> Json {
  auto why = verify_path_pair(g, c, p, sources, targets, bound);
  if (!why.empty()) throw std::logic_error("rainbow path pair failed re-verification: " + why);
  Json out;
  out["instance_id"] = instance_id;
  out["kind"] = "RAINBOW_PATHS";
  out["paths"] = Json::array({path_json(p.first), path_json(p.second)});
  out["sources"] = sources;
  out["targets"] = targets;
  out["bounds"] = {{bound_name, {{"lhs", p.total()}, {"rhs", bound}}}};
  out["verified"] = true;
  out["instance"] = {{"graph", g.to_edge_list()}, {"colours", c.colours()}};
  return out;
}

auto stratification_record(const std::string& instance_id, const ColoredMatroid& cm, const Stratification& s,
                           const std::optional<Graph>& g) -> Json {
  auto why = check_stratification(cm, s);
  if (!why.empty()) throw std::logic_error("stratification failed re-verification: " + why);
  Json out;
  out["instance_id"] = instance_id;
  out["kind"] = "STRATIFICATION";
  out["order"] = s.order;
  out["prefix_ranks"] = s.prefix_ranks;
  out["verified"] = true;
  out["instance"] = extension_to_json(as_extension(cm), g);
  return out;
}

auto verify_record(const Json& record) -> std::string {
  try {
    const auto kind = record.at("kind").get<std::string>();
    const auto& inst = record.at("instance");
    if (kind == "RAINBOW_PATHS") {
      auto g = parse_graph(inst.at("graph").get<std::string>(), GraphFormat::EdgeList);
      auto c = colours_from_json(inst.at("colours"));
      PathPair p{path_from_json(record.at("paths").at(0)), path_from_json(record.at("paths").at(1))};
      auto sources = record.at("sources").get<std::array<VertexId, 2>>();
      auto targets = record.at("targets").get<std::array<VertexId, 2>>();
      const auto& bounds = record.at("bounds");
      if (bounds.size() != 1) return "path record needs exactly one bound";
      const auto& b = bounds.begin().value();
      if (b.at("lhs").get<std::size_t>() != p.total()) return "recorded path total is wrong";
      return verify_path_pair(g, c, p, sources, targets, b.at("rhs").get<std::size_t>());
    }
    if (kind == "STRATIFICATION") {
      auto ext = extension_from_json(inst);
      ColoredMatroid cm(ext.matroid, ext.coloring);
      Stratification s{record.at("order").get<std::vector<ColourId>>(),
                       record.at("prefix_ranks").get<std::vector<std::size_t>>()};
      return check_stratification(cm, s);
    }
    auto ext = extension_from_json(inst);
    if (inst.contains("graph")) {
      // The embedded graph must describe the same matroid as the embedded matrix.
      auto g = parse_graph(inst.at("graph").get<std::string>(), GraphFormat::EdgeList);
      if (g.num_edges() != ext.matroid.epsilon()) return "embedded graph has the wrong edge count";
    }
    return verify_certificate(certificate_from_json(record), ext);
  } catch (const std::exception& e) {
    return std::string("malformed record: ") + e.what();
  }
}

}  // namespace rainbow
