#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "genus_forge/coadjoint.hpp"
#include "genus_forge/localization.hpp"
#include "genus_forge/polytope.hpp"
#include "genus_forge/series.hpp"

namespace genus_forge {

using nlohmann::json;

/// {"n": int, "points": [{"label": str?, "weights": [int, ...]}, ...], "asserted_index": int?}
json fixed_points_to_json(const FixedPointData& fpd);
FixedPointData fixed_points_from_json(const json& j);

/// {"n", "k", "N", "terms": [{"partition": [...], "coefficient": "p/q"}], "provenance"}
json relation_to_json(const Relation& rel);
Relation relation_from_json(const json& j);

/// {"variable": "q", "level": N, "precision": T, "coeffs": [[exponent, "1/2 + 1/2*z"], ...]}
json series_to_json(const QSeries& s);
QSeries series_from_json(const json& j);

/// {"family": "A"|"B", "rank": m, "J": [indices]}
OrbitSpec orbit_from_json(const json& j);

/// Either {"f": [...]} or {"edges": [[[...], [...]], ...]}.
struct PolytopeInput {
  std::vector<long> f;
  std::vector<LatticeEdge> edges;
};
PolytopeInput polytope_from_json(const json& j);

/// Reads and parses a JSON file; throws ValidationError on I/O or syntax errors.
json read_json_file(const std::string& path);

}  // namespace genus_forge
