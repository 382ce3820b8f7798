#pragma once

#include <array>
#include <optional>
#include <string>

#include <json.hpp>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/paths.hpp"
#include "rainbow/rainbow_search.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

auto set_to_json(const ElementSet& s) -> Json;
auto set_from_json(const Json& j) -> ElementSet;

/// {"cols", "rows", "colours", "t", "graph"?}; rows are the reduced matrix of N.
auto extension_to_json(const Extension& ext, const std::optional<Graph>& g = std::nullopt) -> Json;
auto extension_from_json(const Json& j) -> Extension;

auto certificate_to_json(const RainbowCertificate& cert) -> Json;
auto certificate_from_json(const Json& j) -> RainbowCertificate;

/// Full record for one certificate; the certificate is re-verified first.
auto certificate_record(const std::string& instance_id, const RainbowCertificate& cert, const Extension& ext,
                        const std::optional<Graph>& g = std::nullopt) -> Json;

/// Record for a pair of rainbow paths; the pair is re-verified first.
auto path_record(const std::string& instance_id, const Graph& g, const Coloring& c, const PathPair& p,
                 std::array<VertexId, 2> sources, std::array<VertexId, 2> targets, std::size_t bound,
                 const std::string& bound_name) -> Json;

/// Record for a stratification of an achromatic r-colouring.
auto stratification_record(const std::string& instance_id, const ColoredMatroid& cm, const Stratification& s,
                           const std::optional<Graph>& g = std::nullopt) -> Json;

/// Re-verifies any record written above from its embedded instance; empty string when it holds.
auto verify_record(const Json& record) -> std::string;

}  // namespace rainbow
