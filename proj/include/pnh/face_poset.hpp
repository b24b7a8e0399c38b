#pragma once

// Faces as pairs (coset of a label group, labelled nested set): dimensions,
// vertex sets, the order relation, counting, facet factorization and the
// action of diagram automorphisms on the defining half-spaces.

#include <compare>
#include <optional>
#include <vector>

#include "pnh/polytope.hpp"

namespace pnh {

struct LabelledNestedSet {
    NestedSet nested;         // fund positions, ascending, containing V
    std::vector<int> labels;  // minimal members carrying their parabolic label, ascending

    friend bool operator==(const LabelledNestedSet&, const LabelledNestedSet&) = default;
    friend auto operator<=>(const LabelledNestedSet&, const LabelledNestedSet&) = default;
};

struct FacePair {
    int coset = 0;  // canonical representative of sigma H
    LabelledNestedSet s;

    friend bool operator==(const FacePair&, const FacePair&) = default;
    friend auto operator<=>(const FacePair&, const FacePair&) = default;
};

class FacePoset {
public:
    FacePoset(const BuildingSet& g, const WeylGroup& w);

    const BuildingSet& building() const { return *g_; }
    const WeylGroup& weyl() const { return *w_; }
    int rank() const { return g_->root_system().rank(); }

    /// Every nested set with every admissible labelling.
    const std::vector<LabelledNestedSet>& labelled_sets() const { return labelled_; }
    const std::vector<NestedSet>& maximal() const { return maximal_; }

    /// Simple roots generating the label group.
    SimpleMask label_mask(const LabelledNestedSet& s) const;
    int face_dimension(const LabelledNestedSet& s) const;
    int face_dimension(const FacePair& p) const { return face_dimension(p.s); }

    /// A face from any coset element.
    FacePair make_face(int sigma, LabelledNestedSet s) const;

    /// All faces, optionally of one dimension, ordered by labelled set then coset.
    std::vector<FacePair> enumerate_faces(std::optional<int> dim = std::nullopt,
                                          std::size_t cap = kDefaultNestedCap) const;

    /// Face counts indexed by dimension 0..rank.
    std::vector<Int> f_vector() const;

    /// Vertex ids {sigma h v_T : h in H, T maximal containing S}, sorted.
    std::vector<int> face_vertices(const FacePair& p) const;
    /// Vertex ids on the defining hyperplanes singled out for p, from the
    /// boundary sets of the half-spaces.
    std::vector<int> incidence_vertices(const FacePair& p, const HalfSpaceSystem& hs,
                                        const std::vector<std::vector<int>>& facet_sets) const;
    /// Ids of those hyperplanes; empty for the whole polytope.
    std::vector<int> supporting_halfspaces(const FacePair& p, const HalfSpaceSystem& hs) const;

    /// q <= p via coset containment and the elementary moves on labelled nested sets.
    bool is_face_leq(const FacePair& q, const FacePair& p) const;

    /// Every vertex lies on exactly rank many facets.
    bool is_simple() const;
    /// Number of facets through the chamber vertex of maximal nested set t.
    int facets_through(const NestedSet& t) const;

    bool is_crossing_facet(const FacePair& p) const;

private:
    bool moves_reach(const LabelledNestedSet& from, const LabelledNestedSet& to) const;

    const BuildingSet* g_;
    const WeylGroup* w_;
    std::vector<NestedSet> nested_;
    std::vector<NestedSet> maximal_;
    std::vector<LabelledNestedSet> labelled_;
};

/// The labelled sets {V, A_1, ..., A_k} with every A_i labelled.
std::vector<FacePair> crossing_facets(const FacePoset& poset);

struct FacetFactorization {
    SimpleMask d = 0;                           // union of the labelled members
    CombinatorialBuildingSet quotient;
    std::vector<RestrictedBuildingSet> factors;  // one per labelled member, in order
    Int quotient_vertices;                       // maximal nested sets of the quotient
    Int predicted_vertices;                      // product of the factors' vertex counts
    std::size_t facet_vertices = 0;              // vertices of the facet itself
    bool lattice_checked = false;                // face-lattice isomorphism verified
};

/// Splits a crossing facet into a nestohedron times smaller polytopes.  With
/// check_lattice the face-lattice isomorphism is verified as well.
/// Throws NotCrossingFacet or VerificationFailed.
FacetFactorization facet_factors(const FacePoset& poset, const FacePair& facet, bool check_lattice);

/// The permutation of half-space ids induced by x -> w gamma x.  Throws
/// BuildingNotInvariant if gamma does not preserve the building set and
/// VerificationFailed if the images disagree with the predicted ones.
std::vector<int> aut_action_on_halfspaces(const BuildingSet& g, const WeylGroup& w, const HalfSpaceSystem& hs,
                                          int element, int gamma);

/// Order of a permutation.
std::uint64_t permutation_order(const std::vector<int>& perm);

}  // namespace pnh
