#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "twh/twisted_cover.hpp"

namespace twh {

/// {"genus", "b", "labeled", "ends_in", "ends_out", "vertices": [{"level",
/// "valence"}], "edges": [{"src", "dst", "weight"}], "involution_edges",
/// "involution_vertices"}. Edge endpoints are vertex indices; in-end k is
/// written as src = -1-k and out-end k as dst = -1-k. ends_in / ends_out list
/// the weight of every end (two per part).
void to_json(nlohmann::json& j, const TwistedCover& cover);
void from_json(const nlohmann::json& j, TwistedCover& cover);

/// Graphviz digraph, left to right by level, weights as edge labels and
/// 4-valent vertices drawn as filled boxes.
std::string to_dot(const TwistedCover& cover, const std::string& name = "cover");

}  // namespace twh
