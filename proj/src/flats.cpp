#include "pnh/flats.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "pnh/error.hpp"

namespace pnh {

namespace {

Flat closure_of_basis(const RootSystem& rs, const SpanBasis& basis) {
    Flat f;
    const auto& roots = rs.positive_roots();
    for (int k = 0; k < rs.num_positive_roots(); ++k)
        if (basis.contains(roots[k])) f.roots.set(k);
    f.dim = basis.dim();
    return f;
}

// Flat plus a list of independent roots spanning it.
struct SpannedFlat {
    Flat flat;
    std::vector<int> basis;
};

SpanBasis make_basis(const RootSystem& rs, const std::vector<int>& indices) {
    SpanBasis b(static_cast<std::size_t>(rs.rank()));
    for (int k : indices) b.add(rs.positive_roots()[k]);
    return b;
}

}  // namespace

Flat flat_closure(const RootSystem& rs, const RootSet& roots) {
    SpanBasis basis(static_cast<std::size_t>(rs.rank()));
    for (int k : roots.indices()) basis.add(rs.positive_roots()[k]);
    return closure_of_basis(rs, basis);
}

Flat flat_closure(const RootSystem& rs, std::span<const int> root_indices) {
    RootSet s;
    for (int k : root_indices) {
        if (k < 0 || k >= rs.num_positive_roots()) throw Error("root index out of range");
        s.set(k);
    }
    return flat_closure(rs, s);
}

Flat flat_sum(const RootSystem& rs, const Flat& a, const Flat& b) {
    return flat_closure(rs, a.roots | b.roots);
}

Flat whole_space(const RootSystem& rs) {
    Flat v;
    for (int k = 0; k < rs.num_positive_roots(); ++k) v.roots.set(k);
    v.dim = rs.rank();
    return v;
}

std::vector<Flat> irreducible_components(const RootSystem& rs, const Flat& a) {
    const auto idx = a.roots.indices();
    const auto& roots = rs.positive_roots();
    std::vector<int> parent(idx.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root_of = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (sgn(rs.inner(roots[idx[i]], roots[idx[j]])) != 0) parent[root_of(i)] = root_of(j);
    std::map<int, RootSet> groups;
    for (std::size_t i = 0; i < idx.size(); ++i) groups[root_of(i)].set(idx[i]);
    std::vector<Flat> out;
    for (const auto& [_, set] : groups) out.push_back(flat_closure(rs, set));
    std::sort(out.begin(), out.end());
    return out;
}

Flat fundamental_flat(const RootSystem& rs, SimpleMask mask) {
    Flat f;
    const auto& coords = rs.positive_root_coords();
    for (int k = 0; k < rs.num_positive_roots(); ++k) {
        bool inside = true;
        for (int i = 0; i < rs.rank() && inside; ++i) inside = coords[k][i] == 0 || ((mask >> i) & 1U);
        if (inside) f.roots.set(k);
    }
    f.dim = std::popcount(mask);
    return f;
}

SimpleMask simple_mask(const RootSystem& rs, const Flat& f) {
    SimpleMask m = 0;
    for (int i = 0; i < rs.rank(); ++i)
        if (f.roots.test(i)) m |= SimpleMask{1} << i;
    return m;
}

bool is_fundamental(const RootSystem& rs, const Flat& f) {
    return fundamental_flat(rs, simple_mask(rs, f)).roots == f.roots;
}

std::vector<Flat> all_flats(const RootSystem& rs, std::size_t cap) {
    const int m = rs.num_positive_roots();
    std::unordered_map<RootSet, std::size_t, RootSetHash> seen;
    std::vector<SpannedFlat> queue;
    auto push = [&](SpannedFlat s) {
        if (seen.contains(s.flat.roots)) return;
        if (queue.size() >= cap) throw TooManyFlats("more than " + std::to_string(cap) + " flats");
        seen.emplace(s.flat.roots, queue.size());
        queue.push_back(std::move(s));
    };
    push({Flat{}, {}});
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (int k = 0; k < m; ++k) {
            if (queue[q].flat.roots.test(k)) continue;
            auto basis_idx = queue[q].basis;
            basis_idx.push_back(k);
            const SpanBasis basis = make_basis(rs, basis_idx);
            push({closure_of_basis(rs, basis), std::move(basis_idx)});
        }
    }
    std::vector<Flat> out;
    out.reserve(queue.size());
    for (auto& s : queue) out.push_back(s.flat);
    std::sort(out.begin(), out.end());
    return out;
}

RootSet act(const RootSystem& rs, const DiagramAutomorphism& gamma, const RootSet& roots) {
    RootSet out;
    const auto& coords = rs.positive_root_coords();
    for (int k : roots.indices()) {
        const int image = rs.signed_root_index(gamma.matrix.apply(coords[k]));
        if (image <= 0) throw Error("diagram automorphism does not permute the positive roots");
        out.set(image - 1);
    }
    return out;
}

// ---------------------------------------------------------------- combinatorial

void sort_masks(std::vector<SimpleMask>& masks) {
    std::sort(masks.begin(), masks.end(), [](SimpleMask a, SimpleMask b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        // lowest differing bit set first, matching the flat order
        const SimpleMask diff = a ^ b;
        return (a & diff & (~diff + 1)) != 0;
    });
}

bool CombinatorialBuildingSet::contains(SimpleMask m) const {
    return std::find(members.begin(), members.end(), m) != members.end();
}

bool CombinatorialBuildingSet::satisfies_axioms() const {
    for (SimpleMask m : members)
        if ((m & ~ground) != 0 || m == 0) return false;
    for (int i = 0; i < 32; ++i)
        if (((ground >> i) & 1U) && !contains(SimpleMask{1} << i)) return false;
    for (SimpleMask a : members)
        for (SimpleMask b : members)
            if ((a & b) != 0 && !contains(a | b)) return false;
    return true;
}

std::vector<SimpleMask> CombinatorialBuildingSet::maximal_members() const {
    std::vector<SimpleMask> out;
    for (SimpleMask a : members) {
        bool maximal = true;
        for (SimpleMask b : members)
            if (b != a && (a & ~b) == 0) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

// ---------------------------------------------------------------- BuildingSet

BuildingSet::BuildingSet(const RootSystem& rs, const WeylGroup& w, std::vector<Flat> family, std::string label,
                         std::size_t flat_cap)
    : rs_(rs), label_(std::move(label)) {
    const int n = rs_.rank();
    full_mask_ = n == 32 ? ~SimpleMask{0} : (SimpleMask{1} << n) - 1;
    for (auto& f : family) {
        const Flat closed = flat_closure(rs_, f.roots);
        if (closed.roots != f.roots) throw NotBuilding("family member is not closed under the span");
        f.dim = closed.dim;
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    flats_ = std::move(family);
    for (const auto& f : flats_) members_.insert(f.roots);

    const Flat v = whole_space(rs_);
    if (!contains(v)) throw MissingV("the building set does not contain the whole space");
    for (int k = 0; k < rs_.num_positive_roots(); ++k) {
        if (!contains(RootSet::single(k))) {
            throw NotBuilding("the line spanned by positive root #" + std::to_string(k + 1) + " is missing");
        }
    }
    for (const auto& f : flats_)
        for (int i = 0; i < n; ++i)
            if (!contains(w.act(w.generator(i), f.roots))) throw NotWInvariant("family is not invariant under s_" + std::to_string(i + 1));

    for (const auto& c : all_flats(rs_, flat_cap)) {
        if (c.dim == 0) continue;
        std::vector<Flat> inside;
        for (const auto& g : flats_)
            if (g.roots.subset_of(c.roots)) inside.push_back(g);
        std::vector<Flat> maximal;
        for (const auto& g : inside) {
            bool is_max = true;
            for (const auto& h : inside)
                if (h.roots != g.roots && g.roots.subset_of(h.roots)) is_max = false;
            if (is_max) maximal.push_back(g);
        }
        int dims = 0;
        RootSet all;
        for (const auto& g : maximal) {
            dims += g.dim;
            all |= g.roots;
        }
        if (dims != c.dim || flat_closure(rs_, all).dim != c.dim) {
            std::string witness;
            for (int k : c.roots.indices()) witness += (witness.empty() ? "" : ",") + std::to_string(k + 1);
            throw NotBuilding("flat {" + witness + "} is not the direct sum of the maximal members it contains");
        }
        decomposition_.emplace(c.roots, std::move(maximal));
    }

    for (const auto& f : flats_) {
        if (!is_fundamental(rs_, f)) continue;
        fund_.push_back(f);
    }
    for (std::size_t i = 0; i < fund_.size(); ++i) {
        const SimpleMask m = simple_mask(rs_, fund_[i]);
        fund_masks_.push_back(m);
        fund_index_.emplace(m, static_cast<int>(i));
    }

    for (SimpleMask m = 1; m != 0 && m <= full_mask_; ++m) {
        all_fund_masks_.push_back(m);
        std::vector<SimpleMask> parts;
        for (SimpleMask f : fund_masks_) {
            if ((f & ~m) != 0) continue;
            bool is_max = true;
            for (SimpleMask h : fund_masks_)
                if (h != f && (h & ~m) == 0 && (f & ~h) == 0) is_max = false;
            if (is_max) parts.push_back(f);
        }
        sort_masks(parts);
        // must agree with the decomposition over all members
        const auto& full = decomposition_.at(fundamental_flat(rs_, m).roots);
        std::vector<SimpleMask> check;
        for (const auto& g : full) {
            if (!is_fundamental(rs_, g)) throw Error("decomposition of a fundamental flat has a non-fundamental part");
            check.push_back(simple_mask(rs_, g));
        }
        sort_masks(check);
        if (check != parts) throw Error("fundamental decomposition mismatch");
        fund_decomposition_.emplace(m, std::move(parts));
        if (m == full_mask_) break;
    }
    std::sort(all_fund_masks_.begin(), all_fund_masks_.end(), [&](SimpleMask a, SimpleMask b) {
        return fundamental_flat(rs_, a) < fundamental_flat(rs_, b);
    });

    const auto autos = diagram_automorphisms(rs_);
    for (std::size_t k = 0; k < autos.size(); ++k) {
        bool ok = true;
        for (const auto& f : flats_) {
            if (!contains(act(rs_, autos[k], f.roots))) {
                ok = false;
                break;
            }
        }
        if (ok) preserving_.push_back(static_cast<int>(k));
    }
}

int BuildingSet::fund_index(SimpleMask m) const {
    const auto it = fund_index_.find(m);
    return it == fund_index_.end() ? -1 : it->second;
}

std::vector<Flat> BuildingSet::decomposition(const Flat& c) const {
    const auto it = decomposition_.find(c.roots);
    if (it == decomposition_.end()) throw Error("decomposition requested for a non-flat");
    return it->second;
}

const std::vector<SimpleMask>& BuildingSet::fund_decomposition(SimpleMask mask) const {
    return fund_decomposition_.at(mask);
}

CombinatorialBuildingSet BuildingSet::combinatorial() const {
    CombinatorialBuildingSet b;
    b.ground = full_mask_;
    b.members = fund_masks_;
    sort_masks(b.members);
    if (!b.satisfies_axioms()) throw Error("fund part violates the combinatorial building-set axioms");
    return b;
}

BuildingSet build_maximal(const RootSystem& rs, const WeylGroup& w, std::size_t cap) {
    auto flats = all_flats(rs, cap);
    flats.erase(flats.begin());  // the zero flat
    return BuildingSet(rs, w, std::move(flats), "maximal", cap);
}

BuildingSet build_minimal(const RootSystem& rs, const WeylGroup& w, std::size_t cap) {
    std::vector<Flat> family;
    const Flat v = whole_space(rs);
    for (const auto& f : all_flats(rs, cap)) {
        if (f.dim == 0) continue;
        if (f.roots == v.roots || irreducible_components(rs, f).size() == 1) family.push_back(f);
    }
    return BuildingSet(rs, w, std::move(family), "minimal", cap);
}

BuildingSet interval_building_set(const RootSystem& rs, const WeylGroup& w) {
    const int n = rs.rank();
    if (rs.num_positive_roots() != n) throw UnsupportedType("interval building sets are defined for A1^n only");
    std::vector<Flat> family;
    for (int lo = 0; lo < n; ++lo)
        for (int hi = lo; hi < n; ++hi) {
            SimpleMask m = 0;
            for (int i = lo; i <= hi; ++i) m |= SimpleMask{1} << i;
            family.push_back(fundamental_flat(rs, m));
        }
    return BuildingSet(rs, w, std::move(family), "interval");
}

BuildingSet validate_building_set(const RootSystem& rs, const WeylGroup& w, std::vector<Flat> family) {
    return BuildingSet(rs, w, std::move(family), "custom");
}

// ---------------------------------------------------------------- restriction and quotient

RestrictedBuildingSet restricted_building_set(const BuildingSet& g, const WeylGroup& w, const Flat& a) {
    const RootSystem& rs = g.root_system();
    if (!g.contains(a)) throw Error("restriction to a flat outside the building set");
    RestrictedBuildingSet out;
    out.conjugator = -1;
    for (int x = 0; x < w.order() && out.conjugator < 0; ++x) {
        const Flat image = w.act(x, a);
        if (is_fundamental(rs, image)) out.conjugator = x;
    }
    if (out.conjugator < 0) throw Error("flat is not conjugate to a fundamental flat");
    const Flat fa = w.act(out.conjugator, a);
    const SimpleMask mask = simple_mask(rs, fa);
    for (int i = 0; i < rs.rank(); ++i)
        if ((mask >> i) & 1U) out.simple_indices.push_back(i);

    const int k = static_cast<int>(out.simple_indices.size());
    IntMat cartan(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) cartan(i, j) = rs.cartan()(out.simple_indices[i], out.simple_indices[j]);
    const RootSystem sub = RootSystem::from_cartan(cartan);

    std::vector<int> ambient_to_sub(rs.num_positive_roots(), -1);
    for (int r = 0; r < sub.num_positive_roots(); ++r) {
        std::vector<int> coords(rs.rank(), 0);
        for (int i = 0; i < k; ++i) coords[out.simple_indices[i]] = sub.positive_root_coords()[r][i];
        const int id = rs.signed_root_index(coords);
        if (id <= 0) throw Error("sub-root missing from the ambient system");
        out.root_map.push_back(id - 1);
        ambient_to_sub[id - 1] = r;
    }
    if (static_cast<int>(out.root_map.size()) != fa.roots.count()) throw Error("restricted root count mismatch");

    std::vector<Flat> family;
    for (const auto& c : g.flats()) {
        const Flat image = w.act(out.conjugator, c);
        if (!image.roots.subset_of(fa.roots)) continue;
        Flat f;
        for (int r : image.roots.indices()) f.roots.set(ambient_to_sub[r]);
        f.dim = c.dim;
        family.push_back(f);
    }
    out.weyl = std::make_unique<WeylGroup>(sub);
    out.building = std::make_unique<BuildingSet>(sub, *out.weyl, std::move(family), g.label());
    return out;
}

CombinatorialBuildingSet quotient_building_set(const BuildingSet& g, SimpleMask d) {
    // d must be a direct sum of fund members
    SimpleMask covered = 0;
    for (SimpleMask f : g.fund_masks())
        if ((f & ~d) == 0) covered |= f;
    if (covered != d) throw Error("quotient by a flat that is not a sum of fund members");
    CombinatorialBuildingSet b;
    b.ground = g.full_mask() & ~d;
    for (SimpleMask c : g.fund_masks()) {
        const SimpleMask r = c & ~d;
        if (r != 0 && !b.contains(r)) b.members.push_back(r);
    }
    sort_masks(b.members);
    if (!b.satisfies_axioms()) throw Error("quotient family violates the building-set axioms");
    return b;
}

}  // namespace pnh
