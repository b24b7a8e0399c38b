#pragma once

// Flats of a root arrangement and building sets of flats.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pnh/root_set.hpp"
#include "pnh/root_system.hpp"
#include "pnh/weyl.hpp"

namespace pnh {

inline constexpr std::size_t kDefaultFlatCap = std::size_t{1} << 20;

/// The flat spanned by the given positive roots.
Flat flat_closure(const RootSystem& rs, const RootSet& roots);
Flat flat_closure(const RootSystem& rs, std::span<const int> root_indices);
Flat flat_sum(const RootSystem& rs, const Flat& a, const Flat& b);
Flat whole_space(const RootSystem& rs);

/// Irreducible pieces of the root subsystem in a, sorted.
std::vector<Flat> irreducible_components(const RootSystem& rs, const Flat& a);

/// The flat spanned by the simple roots in mask.
Flat fundamental_flat(const RootSystem& rs, SimpleMask mask);
/// Simple roots contained in f.
SimpleMask simple_mask(const RootSystem& rs, const Flat& f);
/// True when f is spanned by simple roots.
bool is_fundamental(const RootSystem& rs, const Flat& f);

/// Every flat of the arrangement, sorted.  Throws TooManyFlats past `cap`.
std::vector<Flat> all_flats(const RootSystem& rs, std::size_t cap = kDefaultFlatCap);

/// Image of a root set under a diagram automorphism.
RootSet act(const RootSystem& rs, const DiagramAutomorphism& gamma, const RootSet& roots);

/// A family of subsets of simple-root indices (bit i = a_{i+1}).
struct CombinatorialBuildingSet {
    SimpleMask ground = 0;
    std::vector<SimpleMask> members;  // sorted by (popcount, value)

    bool contains(SimpleMask m) const;
    /// Checks closure under overlapping unions and that singletons are present.
    bool satisfies_axioms() const;
    std::vector<SimpleMask> maximal_members() const;
};

void sort_masks(std::vector<SimpleMask>& masks);

class BuildingSet {
public:
    /// Validates `family` as a W-invariant building set containing V.
    BuildingSet(const RootSystem& rs, const WeylGroup& w, std::vector<Flat> family, std::string label,
                std::size_t flat_cap = kDefaultFlatCap);

    const RootSystem& root_system() const { return rs_; }
    const std::string& label() const { return label_; }
    const std::vector<Flat>& flats() const { return flats_; }
    bool contains(const Flat& f) const { return members_.contains(f.roots); }
    bool contains(const RootSet& roots) const { return members_.contains(roots); }

    /// The members spanned by simple roots, sorted; the last one is V.
    const std::vector<Flat>& fund() const { return fund_; }
    const std::vector<SimpleMask>& fund_masks() const { return fund_masks_; }
    bool fund_contains(SimpleMask m) const { return fund_index_.contains(m); }
    /// Position of the mask in fund(), or -1.
    int fund_index(SimpleMask m) const;
    SimpleMask full_mask() const { return full_mask_; }

    /// Maximal members contained in c (c must be a flat of the arrangement).
    std::vector<Flat> decomposition(const Flat& c) const;
    /// Decomposition of a fundamental flat, as masks of fund members.
    const std::vector<SimpleMask>& fund_decomposition(SimpleMask mask) const;
    /// Every flat spanned by simple roots, as masks sorted like fund().
    const std::vector<SimpleMask>& all_fund_masks() const { return all_fund_masks_; }

    /// Indices into diagram_automorphisms(root_system()) of those mapping the family onto itself.
    const std::vector<int>& preserving_automorphisms() const { return preserving_; }

    CombinatorialBuildingSet combinatorial() const;

private:
    RootSystem rs_;
    std::string label_;
    std::vector<Flat> flats_;
    std::unordered_set<RootSet, RootSetHash> members_;
    std::vector<Flat> fund_;
    std::vector<SimpleMask> fund_masks_;
    std::unordered_map<SimpleMask, int> fund_index_;
    SimpleMask full_mask_ = 0;
    std::unordered_map<RootSet, std::vector<Flat>, RootSetHash> decomposition_;
    std::vector<SimpleMask> all_fund_masks_;
    std::map<SimpleMask, std::vector<SimpleMask>> fund_decomposition_;
    std::vector<int> preserving_;
};

BuildingSet build_maximal(const RootSystem& rs, const WeylGroup& w, std::size_t cap = kDefaultFlatCap);
BuildingSet build_minimal(const RootSystem& rs, const WeylGroup& w, std::size_t cap = kDefaultFlatCap);
/// Flats of A1^n spanned by intervals of consecutive simple roots.
BuildingSet interval_building_set(const RootSystem& rs, const WeylGroup& w);
BuildingSet validate_building_set(const RootSystem& rs, const WeylGroup& w, std::vector<Flat> family);

/// The fund members of g.
inline const std::vector<Flat>& g_fund(const BuildingSet& g) { return g.fund(); }
inline std::vector<Flat> g_decomposition(const BuildingSet& g, const Flat& c) { return g.decomposition(c); }

/// The members of a building set contained in one of its members A, re-indexed
/// over the root system of A.
struct RestrictedBuildingSet {
    std::vector<int> simple_indices;  // ambient simple roots spanning the (conjugated) flat
    int conjugator = 0;               // w with w(A) spanned by simple roots
    std::vector<int> root_map;        // sub positive root -> ambient positive root
    std::unique_ptr<WeylGroup> weyl;
    std::unique_ptr<BuildingSet> building;
};

RestrictedBuildingSet restricted_building_set(const BuildingSet& g, const WeylGroup& w, const Flat& a);

/// {(C + D)/D : C in G_fund} on the simple roots outside D.
CombinatorialBuildingSet quotient_building_set(const BuildingSet& g, SimpleMask d);

}  // namespace pnh
