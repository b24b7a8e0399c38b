#pragma once

// Classical root systems (types A, B, C, D and products) in simple-root
// coordinates.
//
// Cartan convention: A_ij = 2(a_i, a_j) / (a_i, a_i), and the simple
// reflections act by s_i(a_j) = a_j - A_ij a_i.  In B_m the last simple root
// is short, in C_m the last simple root is long.  Within every irreducible
// component the short roots have squared length 2 (roots of simply-laced
// components count as short), so all components share one short length.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pnh/exact.hpp"

namespace pnh {

enum class RootType { A, B, C, D };

char type_letter(RootType t);

struct ComponentSpec {
    RootType type;
    int rank;
    friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

/// Parses "A3", "B4", "A1^5", "A2xA1" into a component list.
std::vector<ComponentSpec> parse_root_spec(std::string_view text);

struct Component {
    RootType type;
    int rank;
    int offset;  // index of the first simple root of the component
};

class RootSystem {
public:
    /// Builds the root system of an indecomposable-or-not Cartan matrix whose
    /// components are of classical type.  Throws UnsupportedType otherwise.
    static RootSystem from_cartan(const IntMat& cartan);

    int rank() const { return rank_; }
    const std::vector<Component>& components() const { return components_; }
    std::string name() const;

    const Mat& gram() const { return gram_; }
    const IntMat& cartan() const { return cartan_; }

    /// Positive roots ordered by height; the first rank() entries are the simple roots.
    const std::vector<Vec>& positive_roots() const { return positive_roots_; }
    const std::vector<std::vector<int>>& positive_root_coords() const { return root_coords_; }
    int num_positive_roots() const { return static_cast<int>(root_coords_.size()); }

    const std::vector<Vec>& weights() const { return weights_; }
    const Vec& delta() const { return delta_; }

    /// Inner product through the Gram matrix.
    Rat inner(const Vec& x, const Vec& y) const;
    /// Returns c with (x, v) == dot(x, c) for every x.
    Vec covector(const Vec& v) const { return gram_ * v; }
    /// Coefficients of v in the fundamental-weight basis: 2(v, a_i)/(a_i, a_i).
    Vec weight_coords(const Vec& v) const;

    /// +(k+1) if coords is the k-th positive root, -(k+1) if it is its
    /// negative, 0 if it is not a root.
    int signed_root_index(std::span<const int> coords) const;

private:
    RootSystem() = default;
    void self_check() const;

    int rank_ = 0;
    std::vector<Component> components_;
    IntMat cartan_;
    Mat gram_;
    std::vector<std::vector<int>> root_coords_;
    std::vector<Vec> positive_roots_;
    std::vector<Vec> weights_;
    Vec delta_;
    std::map<std::vector<int>, int> root_lookup_;
};

RootSystem build_root_system(std::span<const ComponentSpec> spec);
RootSystem build_root_system(std::string_view spec);

/// The weights w_1..w_n with 2(a_j, w_i)/(a_j, a_j) = [i == j].
std::vector<Vec> fundamental_weights(const RootSystem& rs);

struct DiagramAutomorphism {
    std::vector<int> perm;  // a_i -> a_perm[i]
    IntMat matrix;          // the induced map on root coordinates
};

/// All permutations of the simple roots preserving the Cartan and Gram
/// matrices, identity first.
std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs);

}  // namespace pnh
