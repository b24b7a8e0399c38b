#pragma once

// The Weyl group as an explicit list of integer matrices acting on
// simple-root coordinates, with parabolic subgroups and coset machinery.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "pnh/exact.hpp"
#include "pnh/root_set.hpp"
#include "pnh/root_system.hpp"

namespace pnh {

/// Simple-root index set; bit i stands for a_{i+1}.
using SimpleMask = std::uint32_t;

/// A subgroup together with its left cosets gH, each named by its
/// lexicographically smallest element.
struct ParabolicSubgroup {
    RootSet roots;                 // positive roots whose reflections generate it
    std::vector<int> members;      // sorted element ids
    std::vector<int> coset_rep;    // element id -> canonical representative of gH
    std::vector<int> coset_reps;   // distinct canonical representatives, sorted by id

    int order() const { return static_cast<int>(members.size()); }
    int index() const { return static_cast<int>(coset_reps.size()); }
    bool contains(int g) const;
};

class WeylGroup {
public:
    static constexpr std::size_t kDefaultCap = 50000;
    static constexpr std::size_t kTableLimit = 1000;

    /// Enumerates W by closure under the simple reflections.  Throws
    /// GroupTooLarge when the classical order exceeds `cap`.
    explicit WeylGroup(const RootSystem& rs, std::size_t cap = kDefaultCap);

    WeylGroup(const WeylGroup&) = delete;
    WeylGroup& operator=(const WeylGroup&) = delete;

    const RootSystem& root_system() const { return rs_; }
    int rank() const { return rs_.rank(); }
    int order() const { return static_cast<int>(elements_.size()); }

    static constexpr int identity() { return 0; }
    int generator(int i) const { return generators_[i]; }
    const IntMat& matrix(int g) const { return elements_[g]; }
    /// A reduced word in the simple reflections (0-based letters).
    const std::vector<int>& word(int g) const { return words_[g]; }
    int length(int g) const { return static_cast<int>(words_[g].size()); }

    int multiply(int g, int h) const;
    int inverse(int g) const { return inverse_[g]; }
    /// Element id of a matrix, or -1 when it is not in W.
    int find(const IntMat& m) const;

    /// Position of g in the lexicographic order of the matrix entries.
    int lex_rank(int g) const { return lex_rank_[g]; }

    /// Signed index of g(beta_k), in the convention of RootSystem::signed_root_index.
    int root_image(int g, int k) const { return root_perm_[static_cast<std::size_t>(g) * num_roots_ + k]; }

    /// Element id of the reflection in the k-th positive root.
    int reflection(int k) const { return reflections_[k]; }

    Vec act(int g, const Vec& v) const { return elements_[g].apply(v); }
    RootSet act(int g, const RootSet& roots) const;
    Flat act(int g, const Flat& f) const { return {act(g, f.roots), f.dim}; }

    /// gamma g gamma^{-1} for a diagram automorphism gamma.
    int conjugate(int g, const DiagramAutomorphism& gamma) const;

    /// The subgroup generated by the simple reflections in `mask`; cached.
    const ParabolicSubgroup& standard_parabolic(SimpleMask mask) const;

    /// The canonical representative of g H.
    int canonical_coset_rep(int g, const ParabolicSubgroup& h) const { return h.coset_rep[g]; }

private:
    void build_multiplication_table();

    RootSystem rs_;
    int num_roots_ = 0;
    std::vector<IntMat> elements_;
    std::unordered_map<IntMat, int, IntMatHash> index_;
    std::vector<std::vector<int>> words_;
    std::vector<int> right_;     // right_[g * n + i] = g s_i
    std::vector<int> inverse_;
    std::vector<int> table_;     // full product table when |W| <= kTableLimit
    std::vector<int> lex_rank_;
    std::vector<int> root_perm_;
    std::vector<int> reflections_;
    std::vector<int> generators_;

    mutable std::mutex cache_mutex_;
    mutable std::map<SimpleMask, std::unique_ptr<ParabolicSubgroup>> parabolic_cache_;
};

/// The product of the classical orders of the components of rs.
std::uint64_t predicted_order(const RootSystem& rs);

/// Subgroup generated by the reflections in the given positive roots.
ParabolicSubgroup parabolic_subgroup(const WeylGroup& w, const RootSet& roots);

/// [W : H].
inline int coset_index(const WeylGroup& w, const ParabolicSubgroup& h) { return w.order() / h.order(); }

}  // namespace pnh
