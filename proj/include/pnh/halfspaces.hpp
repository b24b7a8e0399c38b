#pragma once

// Projections of the Weyl vector, ratio tables, suitable epsilon lists and
// the half-spaces cutting out the polytope.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pnh/exact.hpp"
#include "pnh/flats.hpp"
#include "pnh/weyl.hpp"

namespace pnh {

struct FlatData {
    Flat flat;
    Vec pi;          // semisum of the positive roots in the flat (delta for V)
    Vec delta_perp;  // delta - pi (delta for V)
};

/// For flats spanned by simple roots the projection invariants are checked.
FlatData flat_data(const RootSystem& rs, const Flat& a);
/// Sum of the semisums of the fundamental flats in `parts`.
Vec pi_sum(const RootSystem& rs, std::span<const SimpleMask> parts);

class RatioTable {
public:
    /// R^A_B for fund members B strictly inside A, keyed by fund positions (A, B).
    std::map<std::pair<int, int>, Rat> pairs;
    /// by_dims[i][j] = max of R^A_B over dim A = i, dim B = j (absent when no pair exists).
    std::vector<std::vector<std::optional<Rat>>> by_dims;

    /// R^i_j, defaulting to 1 when no pair has these dimensions.
    Rat at(int i, int j) const;
};

RatioTable ratio_table(const BuildingSet& g);

struct SuitableList {
    Rat a;
    std::vector<Rat> eps;  // eps[d - 1] is the value for dimension d
};

/// t_1 = 1, t_i = (2 R^i_{i-1} + 1) t_{i-1}, eps_i = a t_i / t_n.
SuitableList suitable_list(const BuildingSet& g, const Rat& a);
/// The reason eps fails the suitability inequalities, or nullopt.
std::optional<std::string> suitability_violation(const BuildingSet& g, std::span<const Rat> eps);

struct LemmaInstance {
    SimpleMask whole;
    std::vector<SimpleMask> parts;
    Rat lhs;  // eps_{dim B}
    Rat rhs;  // sum of R eps_{dim B_i}
};

struct LemmaReport {
    std::size_t checked = 0;
    std::vector<LemmaInstance> instances;
};

/// Checks the inequality for every non-redundant decomposition inside G_fund.
/// Throws LemmaViolated naming the first failing decomposition.
LemmaReport verify_epsilon_lemma(const BuildingSet& g, std::span<const Rat> eps);

/// Non-redundant ways of writing `whole` as a union of two or more of the
/// given masks (each strictly inside whole).
std::vector<std::vector<SimpleMask>> non_redundant_decompositions(SimpleMask whole,
                                                                  std::span<const SimpleMask> candidates);

enum class HalfSpaceKind { Whole, Member, Composite };
const char* kind_name(HalfSpaceKind k);

/// {x : (x, normal) <= offset}, the image under `sigma` of a fundamental half-space.
struct HalfSpace {
    HalfSpaceKind kind;
    SimpleMask origin;                // V, A or B
    std::vector<SimpleMask> parts;    // fund decomposition of B (Composite only)
    int fundamental = 0;              // index into the fundamental list
    int sigma = 0;                    // canonical coset representative
    Vec normal;
    Rat offset;
    Vec functional;                   // gram * normal, so that (x, normal) = dot(x, functional)
};

/// The fundamental half-spaces: H_V, then H_A in fund order, then H_B for
/// fundamental flats outside G in flat order.
std::vector<HalfSpace> fundamental_halfspaces(const BuildingSet& g, std::span<const Rat> eps);

class HalfSpaceSystem {
public:
    HalfSpaceSystem(const BuildingSet& g, const WeylGroup& w, std::span<const Rat> eps);

    const std::vector<HalfSpace>& fundamental() const { return fundamental_; }
    const std::vector<HalfSpace>& all() const { return all_; }
    std::size_t size() const { return all_.size(); }
    const HalfSpace& operator[](std::size_t i) const { return all_[i]; }

    /// Simple roots generating the stabilizer of fundamental half-space f.
    SimpleMask stabilizer_mask(int f) const { return stabilizer_[f]; }
    /// Fundamental position of the half-space with this kind and origin, or -1.
    int fundamental_index(HalfSpaceKind kind, SimpleMask origin) const;
    /// Id of sigma applied to fundamental half-space f.
    int id(int f, int sigma) const;
    /// Id of the half-space with this normal and offset (up to positive scaling), or -1.
    int lookup(const Vec& normal, const Rat& offset) const;

private:
    const WeylGroup* w_;
    std::vector<HalfSpace> fundamental_;
    std::vector<HalfSpace> all_;
    std::vector<SimpleMask> stabilizer_;
    std::vector<std::unordered_map<int, int>> by_rep_;
    std::unordered_map<Vec, int, VecHash> by_key_;
};

}  // namespace pnh
