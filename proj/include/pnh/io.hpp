#pragma once

// JSON and OFF serialization.  Rationals are written as "p/q" strings
// (integers without a denominator); coordinates are in the simple-root basis.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pnh/face_poset.hpp"

namespace pnh {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const Vec& v);
/// 1-based simple-root indices of a mask.
Json mask_json(SimpleMask m);

Json root_system_json(const RootSystem& rs);
Json halfspaces_json(const HalfSpaceSystem& hs);
Json vertices_json(const VRep& v);
/// {"roots": [[coords]...], "flats": [[positive-root indices]...]}, loadable by load_building_set.
Json building_set_json(const BuildingSet& g);

/// Nodes {id, dim, coset_rep_id, flats, labels} and, if requested, covering edges [lower, upper].
Json face_poset_json(const FacePoset& poset, bool with_edges);

/// Reads the building-set format above.  Each listed root must be a root of rs
/// (either sign); each flat is the closure of its listed roots.  Throws
/// ParseError, then the validation errors of BuildingSet.
BuildingSet load_building_set(const RootSystem& rs, const WeylGroup& w, const nlohmann::json& doc);
BuildingSet load_building_set_file(const RootSystem& rs, const WeylGroup& w, const std::string& path);

/// Rank-3 mesh: vertices embedded isometrically in R^3, one polygon per
/// facet, ordered counterclockwise seen from outside.  Lossy.
void write_off(std::ostream& out, const RootSystem& rs, const VRep& v,
               const std::vector<std::vector<int>>& facet_sets, int digits = 12);

}  // namespace pnh
