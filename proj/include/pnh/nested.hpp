#pragma once

// Nested sets of the fund part of a building set, and of combinatorial
// building sets.

#include <span>
#include <vector>

#include "pnh/flats.hpp"

namespace pnh {

inline constexpr std::size_t kDefaultNestedCap = 5'000'000;

/// Positions in BuildingSet::fund(), ascending; always contains V (the last position).
using NestedSet = std::vector<int>;

/// Definition check: every antichain of two or more members sums outside G.
bool is_nested(const BuildingSet& g, std::span<const SimpleMask> members);
bool is_nested(const BuildingSet& g, const NestedSet& s);

/// Every nested set containing V, in depth-first order over fund().
std::vector<NestedSet> enumerate_nested_sets(const BuildingSet& g, std::size_t cap = kDefaultNestedCap);
/// The nested sets of size rank.
std::vector<NestedSet> enumerate_maximal_nested_sets(const BuildingSet& g, std::size_t cap = kDefaultNestedCap);

/// Members of s containing no other member of s, as fund positions.
std::vector<int> minimal_elements(const BuildingSet& g, const NestedSet& s);
std::vector<SimpleMask> masks_of(const BuildingSet& g, const NestedSet& s);

/// Conditions a)-c) for a family of members of a combinatorial building set.
bool is_nested(const CombinatorialBuildingSet& b, std::span<const SimpleMask> family);
/// All nested sets of b (each containing the maximal members), sorted masks each.
std::vector<std::vector<SimpleMask>> enumerate_nested_sets(const CombinatorialBuildingSet& b,
                                                           std::size_t cap = kDefaultNestedCap);

/// The combinatorial image of the fund part; alias of BuildingSet::combinatorial.
inline CombinatorialBuildingSet to_combinatorial(const BuildingSet& g) { return g.combinatorial(); }

}  // namespace pnh
