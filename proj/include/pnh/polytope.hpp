#pragma once

// Vertices of the polytope and exact verification of its H- and
// V-descriptions against each other.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pnh/halfspaces.hpp"
#include "pnh/nested.hpp"

namespace pnh {

/// Solves (x, delta_A) = a - eps_{dim A} for A in s \ {V} and (x, delta) = a.
/// Throws SingularSystem when the normals are dependent.
Vec solve_vertex(const BuildingSet& g, std::span<const SimpleMask> s, std::span<const Rat> eps);

/// The chamber vertex of a maximal nested set; throws NotInChamber unless
/// (x, a_i) > 0 for every simple root.
Vec vertex(const BuildingSet& g, const NestedSet& s, std::span<const Rat> eps);

bool in_open_chamber(const RootSystem& rs, const Vec& x);

/// All points sigma v_S.  Vertex id = sigma * maximal.size() + position of S.
struct VRep {
    std::vector<NestedSet> maximal;
    std::vector<std::vector<SimpleMask>> maximal_masks;
    std::vector<Vec> chamber;    // v_S for each maximal nested set
    std::vector<Vec> points;     // indexed by vertex id
    std::vector<std::pair<int, int>> coincidences;  // pairs of ids with equal points

    std::size_t size() const { return points.size(); }
    int id(int sigma, int s) const { return sigma * static_cast<int>(maximal.size()) + s; }
    int sigma_of(int id) const { return id / static_cast<int>(maximal.size()); }
    int nested_of(int id) const { return id % static_cast<int>(maximal.size()); }
};

VRep all_vertices(const BuildingSet& g, std::span<const Rat> eps, const WeylGroup& w);

/// Whether sigma v_T lies on half-space h according to the incidence
/// characterization (without evaluating coordinates).
bool predicted_tight(const WeylGroup& w, const HalfSpace& h, int sigma, std::span<const SimpleMask> t);

struct HVReport {
    std::size_t pairs_total = 0;
    std::size_t pairs_checked = 0;
    std::size_t tight = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kFullCheckLimit = 10'000'000;

/// Every vertex lies in every half-space, with equality exactly where predicted.
/// Checks all pairs when there are at most `limit` of them, otherwise `limit`
/// pairs drawn with the given seed.  Throws VerificationFailed with a witness.
HVReport verify_hrep_vrep(const WeylGroup& w, const HalfSpaceSystem& hs, const VRep& v,
                          std::size_t limit = kFullCheckLimit, std::uint64_t seed = 0);

struct NestohedronReport {
    std::size_t chamber_vertices = 0;
    std::size_t non_nested_checked = 0;     // independent non-nested T
    std::size_t outside_chamber = 0;        // of those, v_T outside the open chamber
    std::size_t predicted_violations = 0;   // (T, B) pairs confirmed
    std::size_t interior_checks = 0;        // (S, A) pairs with v_S strictly inside HS_A
};

NestohedronReport nestohedron_check(const BuildingSet& g, std::span<const Rat> eps);

/// For each half-space, the sorted ids of the vertices on its boundary.
/// Throws EmptyFacet if some half-space touches no vertex.
std::vector<std::vector<int>> facet_vertex_sets(const HalfSpaceSystem& hs, const VRep& v);

/// sum (-1)^i f_i over i = 0..d equals 1 (f_d = 1 for the polytope itself).
bool euler_check(std::span<const Int> fvector);

}  // namespace pnh
