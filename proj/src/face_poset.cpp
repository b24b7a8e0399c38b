#include "pnh/face_poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "pnh/error.hpp"

namespace pnh {

namespace {

bool sorted_contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

bool subset(SimpleMask a, SimpleMask b) { return (a & ~b) == 0; }

// Valid labelled sets: nested, labels minimal, V labelled only when alone.
bool valid_labels(const BuildingSet& g, const LabelledNestedSet& s) {
    const int v = static_cast<int>(g.fund().size()) - 1;
    const auto minimal = minimal_elements(g, s.nested);
    for (int l : s.labels) {
        if (!sorted_contains(s.nested, l)) return false;
        if (std::find(minimal.begin(), minimal.end(), l) == minimal.end()) return false;
        if (l == v && s.nested.size() != 1) return false;
    }
    return true;
}

// Compresses the bits of `mask` onto the positions listed in `indices`.
SimpleMask local_mask(SimpleMask mask, const std::vector<int>& indices) {
    SimpleMask out = 0;
    for (std::size_t k = 0; k < indices.size(); ++k)
        if ((mask >> indices[k]) & 1U) out |= SimpleMask{1} << k;
    return out;
}

}  // namespace

FacePoset::FacePoset(const BuildingSet& g, const WeylGroup& w) : g_(&g), w_(&w) {
    nested_ = enumerate_nested_sets(g);
    const int n = rank();
    const int v = static_cast<int>(g.fund().size()) - 1;
    for (const auto& s : nested_) {
        if (static_cast<int>(s.size()) == n) maximal_.push_back(s);
        if (s.size() == 1) {
            labelled_.push_back({s, {}});
            labelled_.push_back({s, {v}});
            continue;
        }
        const auto minimal = minimal_elements(g, s);
        const std::uint64_t subsets = std::uint64_t{1} << minimal.size();
        for (std::uint64_t bits = 0; bits < subsets; ++bits) {
            LabelledNestedSet ls{s, {}};
            for (std::size_t k = 0; k < minimal.size(); ++k)
                if ((bits >> k) & 1U) ls.labels.push_back(minimal[k]);
            std::sort(ls.labels.begin(), ls.labels.end());
            labelled_.push_back(std::move(ls));
        }
    }
    std::sort(labelled_.begin(), labelled_.end());
}

SimpleMask FacePoset::label_mask(const LabelledNestedSet& s) const {
    SimpleMask m = 0;
    for (int l : s.labels) m |= g_->fund_masks()[l];
    return m;
}

int FacePoset::face_dimension(const LabelledNestedSet& s) const {
    return rank() - static_cast<int>(s.nested.size()) + static_cast<int>(s.labels.size());
}

FacePair FacePoset::make_face(int sigma, LabelledNestedSet s) const {
    const ParabolicSubgroup& h = w_->standard_parabolic(label_mask(s));
    return {h.coset_rep[sigma], std::move(s)};
}

std::vector<FacePair> FacePoset::enumerate_faces(std::optional<int> dim, std::size_t cap) const {
    std::vector<FacePair> out;
    for (const auto& s : labelled_) {
        if (dim && face_dimension(s) != *dim) continue;
        const ParabolicSubgroup& h = w_->standard_parabolic(label_mask(s));
        if (out.size() + h.coset_reps.size() > cap) throw TooMany("more than " + std::to_string(cap) + " faces");
        for (int rep : h.coset_reps) out.push_back({rep, s});
    }
    return out;
}

std::vector<Int> FacePoset::f_vector() const {
    std::vector<Int> f(rank() + 1, 0);
    for (const auto& s : labelled_) {
        const ParabolicSubgroup& h = w_->standard_parabolic(label_mask(s));
        f[face_dimension(s)] += h.index();
    }
    return f;
}

std::vector<int> FacePoset::face_vertices(const FacePair& p) const {
    const ParabolicSubgroup& h = w_->standard_parabolic(label_mask(p.s));
    const int count = static_cast<int>(maximal_.size());
    std::vector<int> containing;
    for (int t = 0; t < count; ++t)
        if (std::includes(maximal_[t].begin(), maximal_[t].end(), p.s.nested.begin(), p.s.nested.end()))
            containing.push_back(t);
    std::vector<int> out;
    for (int x : h.members) {
        const int sigma = w_->multiply(p.coset, x);
        for (int t : containing) out.push_back(sigma * count + t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FacePoset::supporting_halfspaces(const FacePair& p, const HalfSpaceSystem& hs) const {
    const auto& masks = g_->fund_masks();
    const int v = static_cast<int>(masks.size()) - 1;
    std::vector<int> out;
    auto add = [&](HalfSpaceKind kind, SimpleMask origin) {
        const int f = hs.fundamental_index(kind, origin);
        if (f < 0) throw VerificationFailed("no fundamental half-space for mask " + std::to_string(origin));
        out.push_back(hs.id(f, p.coset));
    };
    if (sorted_contains(p.s.labels, v)) return out;
    if (p.s.labels.empty()) {
        add(HalfSpaceKind::Whole, g_->full_mask());
        for (int b : p.s.nested)
            if (b != v) add(HalfSpaceKind::Member, masks[b]);
        return out;
    }
    const SimpleMask d = label_mask(p.s);
    add(p.s.labels.size() == 1 ? HalfSpaceKind::Member : HalfSpaceKind::Composite, d);
    for (int b : p.s.nested) {
        if (b == v || sorted_contains(p.s.labels, b)) continue;
        SimpleMask outside = 0;
        for (int a : p.s.labels)
            if (!subset(masks[a], masks[b])) outside |= masks[a];
        if (outside == 0) {
            add(HalfSpaceKind::Member, masks[b]);
        } else {
            add(HalfSpaceKind::Composite, masks[b] | outside);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FacePoset::incidence_vertices(const FacePair& p, const HalfSpaceSystem& hs,
                                               const std::vector<std::vector<int>>& facet_sets) const {
    const auto ids = supporting_halfspaces(p, hs);
    if (ids.empty()) {
        std::vector<int> all(static_cast<std::size_t>(w_->order()) * maximal_.size());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> cur = facet_sets[ids.front()];
    for (std::size_t k = 1; k < ids.size(); ++k) {
        std::vector<int> next;
        const auto& other = facet_sets[ids[k]];
        std::set_intersection(cur.begin(), cur.end(), other.begin(), other.end(), std::back_inserter(next));
        cur = std::move(next);
    }
    return cur;
}

bool FacePoset::moves_reach(const LabelledNestedSet& from, const LabelledNestedSet& to) const {
    const auto& masks = g_->fund_masks();
    const int target_dim = face_dimension(to);
    std::set<LabelledNestedSet> seen{from};
    std::deque<LabelledNestedSet> queue{from};
    auto push = [&](LabelledNestedSet next) {
        std::sort(next.nested.begin(), next.nested.end());
        std::sort(next.labels.begin(), next.labels.end());
        if (face_dimension(next) < target_dim) return;
        if (!std::includes(to.nested.begin(), to.nested.end(), next.nested.begin(), next.nested.end())) return;
        if (!valid_labels(*g_, next)) return;
        if (seen.insert(next).second) queue.push_back(std::move(next));
    };
    while (!queue.empty()) {
        LabelledNestedSet cur = std::move(queue.front());
        queue.pop_front();
        if (cur == to) return true;
        if (face_dimension(cur) == target_dim) continue;
        std::vector<int> extra;
        std::set_difference(to.nested.begin(), to.nested.end(), cur.nested.begin(), cur.nested.end(),
                            std::back_inserter(extra));

        // a new unlabelled member
        for (int c : extra) {
            LabelledNestedSet next = cur;
            next.nested.push_back(c);
            push(std::move(next));
        }
        // forget a label
        for (std::size_t k = 0; k < cur.labels.size(); ++k) {
            LabelledNestedSet next = cur;
            next.labels.erase(next.labels.begin() + static_cast<std::ptrdiff_t>(k));
            push(std::move(next));
        }
        // replace a labelled member's label by labelled members inside it
        for (int b : cur.labels) {
            std::vector<int> inside;
            for (int c : extra)
                if (subset(masks[c], masks[b]) && masks[c] != masks[b]) inside.push_back(c);
            const std::uint64_t subsets = std::uint64_t{1} << inside.size();
            for (std::uint64_t bits = 1; bits < subsets; ++bits) {
                LabelledNestedSet next = cur;
                std::erase(next.labels, b);
                bool antichain = true;
                std::vector<int> chosen;
                for (std::size_t k = 0; k < inside.size(); ++k)
                    if ((bits >> k) & 1U) chosen.push_back(inside[k]);
                for (int x : chosen)
                    for (int y : chosen)
                        if (x != y && subset(masks[x], masks[y])) antichain = false;
                if (!antichain) continue;
                for (int x : chosen) {
                    next.nested.push_back(x);
                    next.labels.push_back(x);
                }
                push(std::move(next));
            }
        }
    }
    return false;
}

bool FacePoset::is_face_leq(const FacePair& q, const FacePair& p) const {
    const SimpleMask dq = label_mask(q.s);
    const SimpleMask dp = label_mask(p.s);
    if (!subset(dq, dp)) return false;
    if (!std::includes(q.s.nested.begin(), q.s.nested.end(), p.s.nested.begin(), p.s.nested.end())) return false;
    const ParabolicSubgroup& hp = w_->standard_parabolic(dp);
    if (!hp.contains(w_->multiply(w_->inverse(p.coset), q.coset))) return false;
    return moves_reach(p.s, q.s);
}

int FacePoset::facets_through(const NestedSet& t) const {
    const auto& masks = g_->fund_masks();
    std::vector<int> proper(t.begin(), t.end() - 1);
    int count = 0;
    const std::uint64_t subsets = std::uint64_t{1} << proper.size();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        bool antichain = true;
        for (std::size_t i = 0; i < proper.size() && antichain; ++i) {
            if (!((bits >> i) & 1U)) continue;
            for (std::size_t j = 0; j < proper.size(); ++j)
                if (i != j && ((bits >> j) & 1U) && subset(masks[proper[i]], masks[proper[j]])) antichain = false;
        }
        if (antichain) ++count;
    }
    return count;
}

bool FacePoset::is_simple() const {
    return std::all_of(maximal_.begin(), maximal_.end(), [&](const NestedSet& t) { return facets_through(t) == rank(); });
}

bool FacePoset::is_crossing_facet(const FacePair& p) const {
    const int v = static_cast<int>(g_->fund().size()) - 1;
    if (p.s.nested.size() < 2 || p.s.nested.back() != v) return false;
    const std::vector<int> proper(p.s.nested.begin(), p.s.nested.end() - 1);
    return proper == p.s.labels && std::binary_search(labelled_.begin(), labelled_.end(), p.s);
}

std::vector<FacePair> crossing_facets(const FacePoset& poset) {
    std::vector<FacePair> out;
    for (const auto& f : poset.enumerate_faces(poset.rank() - 1))
        if (poset.is_crossing_facet(f)) out.push_back(f);
    return out;
}

namespace {

Int maximal_nested_count(const CombinatorialBuildingSet& b) {
    const int ground = std::popcount(b.ground);
    Int count = 0;
    for (const auto& s : enumerate_nested_sets(b))
        if (static_cast<int>(s.size()) == ground) ++count;
    return count;
}

struct ProductFace {
    std::vector<SimpleMask> quotient;
    std::vector<FacePair> parts;

    friend bool operator==(const ProductFace&, const ProductFace&) = default;
    friend auto operator<=>(const ProductFace&, const ProductFace&) = default;
};

}  // namespace

FacetFactorization facet_factors(const FacePoset& poset, const FacePair& facet, bool check_lattice) {
    if (!poset.is_crossing_facet(facet)) throw NotCrossingFacet("not a facet of the form {V, A_1, ..., A_k} with every A_i labelled");
    const BuildingSet& g = poset.building();
    const WeylGroup& w = poset.weyl();
    const auto& masks = g.fund_masks();

    FacetFactorization out;
    out.d = poset.label_mask(facet.s);
    out.quotient = quotient_building_set(g, out.d);
    out.quotient_vertices = maximal_nested_count(out.quotient);
    out.predicted_vertices = out.quotient_vertices;
    std::vector<FacePoset> sub;
    sub.reserve(facet.s.labels.size());
    for (int a : facet.s.labels) {
        out.factors.push_back(restricted_building_set(g, w, g.fund()[a]));
        const auto& f = out.factors.back();
        if (f.conjugator != w.identity()) throw VerificationFailed("a labelled member is not spanned by simple roots");
        sub.emplace_back(*f.building, *f.weyl);
        out.predicted_vertices *= Int(f.weyl->order()) * Int(static_cast<unsigned long>(sub.back().maximal().size()));
    }
    out.facet_vertices = poset.face_vertices(facet).size();
    if (Int(static_cast<unsigned long>(out.facet_vertices)) != out.predicted_vertices) {
        throw VerificationFailed("facet has " + std::to_string(out.facet_vertices) + " vertices but the factors give " +
                                 out.predicted_vertices.get_str());
    }
    if (!check_lattice) return out;

    std::vector<FacePair> interval;
    for (const auto& q : poset.enumerate_faces())
        if (poset.is_face_leq(q, facet)) interval.push_back(q);

    const ParabolicSubgroup& hp = w.standard_parabolic(out.d);
    auto image = [&](const FacePair& q) {
        ProductFace pf;
        for (int k : q.s.nested) {
            const SimpleMask r = masks[k] & ~out.d;
            if (r != 0 && std::find(pf.quotient.begin(), pf.quotient.end(), r) == pf.quotient.end())
                pf.quotient.push_back(r);
        }
        sort_masks(pf.quotient);
        const int h = w.multiply(w.inverse(facet.coset), q.coset);
        if (!hp.contains(h)) throw VerificationFailed("a subface leaves the facet's coset");
        const IntMat& m = w.matrix(h);
        for (std::size_t i = 0; i < out.factors.size(); ++i) {
            const auto& idx = out.factors[i].simple_indices;
            const SimpleMask am = masks[facet.s.labels[i]];
            LabelledNestedSet ls;
            for (int k : q.s.nested)
                if (subset(masks[k], am)) ls.nested.push_back(out.factors[i].building->fund_index(local_mask(masks[k], idx)));
            for (int k : q.s.labels)
                if (subset(masks[k], am)) ls.labels.push_back(out.factors[i].building->fund_index(local_mask(masks[k], idx)));
            std::sort(ls.nested.begin(), ls.nested.end());
            std::sort(ls.labels.begin(), ls.labels.end());
            const int size = static_cast<int>(idx.size());
            IntMat block(size);
            for (int r = 0; r < size; ++r)
                for (int c = 0; c < size; ++c) block(r, c) = m(idx[r], idx[c]);
            const int e = out.factors[i].weyl->find(block);
            if (e < 0) throw VerificationFailed("a block of the coset element is not in the factor's Weyl group");
            pf.parts.push_back(sub[i].make_face(e, std::move(ls)));
        }
        return pf;
    };

    std::vector<ProductFace> images;
    std::set<ProductFace> distinct;
    for (const auto& q : interval) {
        images.push_back(image(q));
        distinct.insert(images.back());
    }
    if (distinct.size() != interval.size()) throw VerificationFailed("the map to the product is not injective");

    const auto quotient_sets = enumerate_nested_sets(out.quotient);
    std::size_t product = quotient_sets.size();
    std::vector<std::set<FacePair>> sub_faces;
    for (const auto& s : sub) {
        const auto faces = s.enumerate_faces();
        sub_faces.emplace_back(faces.begin(), faces.end());
        product *= faces.size();
    }
    if (product != interval.size()) {
        throw VerificationFailed("facet has " + std::to_string(interval.size()) + " faces, the product " +
                                 std::to_string(product));
    }
    for (const auto& pf : images) {
        if (std::find(quotient_sets.begin(), quotient_sets.end(), pf.quotient) == quotient_sets.end())
            throw VerificationFailed("a subface maps outside the quotient's nested sets");
        for (std::size_t i = 0; i < sub.size(); ++i)
            if (!sub_faces[i].contains(pf.parts[i])) throw VerificationFailed("a subface maps outside a factor");
    }

    auto product_leq = [&](const ProductFace& x, const ProductFace& y) {
        for (SimpleMask m : y.quotient)
            if (std::find(x.quotient.begin(), x.quotient.end(), m) == x.quotient.end()) return false;
        for (std::size_t i = 0; i < sub.size(); ++i)
            if (!sub[i].is_face_leq(x.parts[i], y.parts[i])) return false;
        return true;
    };
    for (std::size_t a = 0; a < interval.size(); ++a)
        for (std::size_t b = 0; b < interval.size(); ++b)
            if (poset.is_face_leq(interval[a], interval[b]) != product_leq(images[a], images[b]))
                throw VerificationFailed("the map to the product does not preserve the order");
    out.lattice_checked = true;
    return out;
}

std::vector<int> aut_action_on_halfspaces(const BuildingSet& g, const WeylGroup& w, const HalfSpaceSystem& hs,
                                          int element, int gamma) {
    const auto autos = diagram_automorphisms(g.root_system());
    if (gamma < 0 || gamma >= static_cast<int>(autos.size())) throw OutOfRange("no such diagram automorphism");
    const auto& keep = g.preserving_automorphisms();
    if (std::find(keep.begin(), keep.end(), gamma) == keep.end())
        throw BuildingNotInvariant("the diagram automorphism does not preserve the building set");
    const DiagramAutomorphism& gm = autos[gamma];

    auto permute = [&](SimpleMask m) {
        SimpleMask out = 0;
        for (int i = 0; i < w.rank(); ++i)
            if ((m >> i) & 1U) out |= SimpleMask{1} << gm.perm[i];
        return out;
    };

    std::vector<int> perm(hs.size(), -1);
    std::vector<char> hit(hs.size(), 0);
    for (std::size_t k = 0; k < hs.size(); ++k) {
        const HalfSpace& h = hs[k];
        const Vec normal = w.act(element, gm.matrix.apply(h.normal));
        const int j = hs.lookup(normal, h.offset);
        if (j < 0) throw VerificationFailed("the image of half-space #" + std::to_string(k) + " is not a half-space");
        const int f = hs.fundamental_index(h.kind, permute(h.origin));
        if (f < 0 || hs.id(f, w.multiply(element, w.conjugate(h.sigma, gm))) != j)
            throw VerificationFailed("half-space #" + std::to_string(k) + " is not sent where predicted");
        if (hit[j]) throw VerificationFailed("two half-spaces share an image");
        hit[j] = 1;
        perm[k] = j;
    }
    return perm;
}

std::uint64_t permutation_order(const std::vector<int>& perm) {
    std::vector<char> done(perm.size(), 0);
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (done[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(perm[j])) {
            done[j] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

}  // namespace pnh
