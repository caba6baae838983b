#pragma once

// JSON forms of instances, cuts and certificates, and instance digests.

#include "mwgap/dual.hpp"
#include "mwgap/simplex.hpp"

#include <json.hpp>

#include <string>

namespace mwgap {

using Json = nlohmann::json;

/// {"k", "n", "weights": [{"u", "v", "w": "p/q"}]}, nonzero edges in canonical order.
Json instance_to_json(const WeightFunction& w);
WeightFunction instance_from_json(const Json& j);

/// {"k", "n", "family", "labels": [{"x", "c"}]} in lexicographic point order.
/// A missing family is read as nonopposite when label k+1 occurs, else kway.
Json cut_to_json(const Cut& cut);
Cut cut_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

std::string cut_family_name(CutFamily f);
CutFamily parse_cut_family(const std::string& name);

/// Lowercase hex SHA-256 of the compact canonical instance JSON.
std::string instance_digest(const WeightFunction& w);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mwgap
