#include "pnh/nested.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "pnh/error.hpp"

namespace pnh {

namespace {

bool comparable(SimpleMask a, SimpleMask b) {
    return (a & ~b) == 0 || (b & ~a) == 0;
}

// True if adding x to `current` creates no antichain whose union lies in the family.
bool extends_nested(SimpleMask x, std::span<const SimpleMask> current,
                    const std::function<bool(SimpleMask)>& in_family) {
    std::vector<SimpleMask> incomparable;
    for (SimpleMask y : current)
        if (!comparable(x, y)) incomparable.push_back(y);
    const std::size_t k = incomparable.size();
    if (k > 24) throw TooMany("nested-set check with too many incomparable members");
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << k); ++pick) {
        SimpleMask sum = x;
        bool antichain = true;
        for (std::size_t i = 0; i < k && antichain; ++i) {
            if (!((pick >> i) & 1U)) continue;
            for (std::size_t j = i + 1; j < k && antichain; ++j)
                if (((pick >> j) & 1U) && comparable(incomparable[i], incomparable[j])) antichain = false;
            sum |= incomparable[i];
        }
        if (antichain && in_family(sum)) return false;
    }
    return true;
}

bool nested_by_definition(std::span<const SimpleMask> members, const std::function<bool(SimpleMask)>& in_family) {
    const std::size_t k = members.size();
    if (k > 24) throw TooMany("nested-set check on too many members");
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << k); ++pick) {
        if (std::popcount(pick) < 2) continue;
        SimpleMask sum = 0;
        bool antichain = true;
        for (std::size_t i = 0; i < k && antichain; ++i) {
            if (!((pick >> i) & 1U)) continue;
            for (std::size_t j = i + 1; j < k && antichain; ++j)
                if (((pick >> j) & 1U) && comparable(members[i], members[j])) antichain = false;
            sum |= members[i];
        }
        if (antichain && in_family(sum)) return false;
    }
    return true;
}

// Depth-first enumeration of subsets of `candidates` that stay nested when
// added to `base`.  Each result lists positions into candidates.
void enumerate(std::span<const SimpleMask> candidates, std::vector<SimpleMask>& current,
               std::vector<int>& chosen, std::size_t from, const std::function<bool(SimpleMask)>& in_family,
               std::size_t cap, const std::function<void(const std::vector<int>&)>& emit, std::size_t& count) {
    if (++count > cap) throw TooMany("more than " + std::to_string(cap) + " nested sets");
    emit(chosen);
    for (std::size_t i = from; i < candidates.size(); ++i) {
        if (!extends_nested(candidates[i], current, in_family)) continue;
        current.push_back(candidates[i]);
        chosen.push_back(static_cast<int>(i));
        enumerate(candidates, current, chosen, i + 1, in_family, cap, emit, count);
        chosen.pop_back();
        current.pop_back();
    }
}

}  // namespace

bool is_nested(const BuildingSet& g, std::span<const SimpleMask> members) {
    return nested_by_definition(members, [&](SimpleMask m) { return g.fund_contains(m); });
}

bool is_nested(const BuildingSet& g, const NestedSet& s) {
    const auto masks = masks_of(g, s);
    return is_nested(g, masks);
}

std::vector<SimpleMask> masks_of(const BuildingSet& g, const NestedSet& s) {
    std::vector<SimpleMask> out;
    out.reserve(s.size());
    for (int i : s) out.push_back(g.fund_masks()[i]);
    return out;
}

std::vector<NestedSet> enumerate_nested_sets(const BuildingSet& g, std::size_t cap) {
    const auto& masks = g.fund_masks();
    const int v = static_cast<int>(masks.size()) - 1;
    std::vector<SimpleMask> candidates(masks.begin(), masks.end() - 1);
    std::vector<NestedSet> out;
    std::vector<SimpleMask> current{masks[v]};
    std::vector<int> chosen;
    std::size_t count = 0;
    enumerate(candidates, current, chosen, 0, [&](SimpleMask m) { return g.fund_contains(m); }, cap,
              [&](const std::vector<int>& picked) {
                  NestedSet s = picked;
                  s.push_back(v);
                  out.push_back(std::move(s));
              },
              count);
    return out;
}

std::vector<NestedSet> enumerate_maximal_nested_sets(const BuildingSet& g, std::size_t cap) {
    const std::size_t n = static_cast<std::size_t>(g.root_system().rank());
    std::vector<NestedSet> out;
    for (auto& s : enumerate_nested_sets(g, cap))
        if (s.size() == n) out.push_back(std::move(s));
    return out;
}

std::vector<int> minimal_elements(const BuildingSet& g, const NestedSet& s) {
    std::vector<int> out;
    for (int a : s) {
        const SimpleMask ma = g.fund_masks()[a];
        bool minimal = true;
        for (int b : s)
            if (b != a && (g.fund_masks()[b] & ~ma) == 0) minimal = false;
        if (minimal) out.push_back(a);
    }
    return out;
}

bool is_nested(const CombinatorialBuildingSet& b, std::span<const SimpleMask> family) {
    for (SimpleMask m : family)
        if (!b.contains(m)) return false;
    for (SimpleMask x : family)
        for (SimpleMask y : family)
            if (!comparable(x, y) && (x & y) != 0) return false;
    for (SimpleMask top : b.maximal_members())
        if (std::find(family.begin(), family.end(), top) == family.end()) return false;
    return nested_by_definition(family, [&](SimpleMask m) { return b.contains(m); });
}

std::vector<std::vector<SimpleMask>> enumerate_nested_sets(const CombinatorialBuildingSet& b, std::size_t cap) {
    const auto tops = b.maximal_members();
    std::vector<SimpleMask> candidates;
    for (SimpleMask m : b.members)
        if (std::find(tops.begin(), tops.end(), m) == tops.end()) candidates.push_back(m);
    std::vector<std::vector<SimpleMask>> out;
    std::vector<SimpleMask> current = tops;
    std::vector<int> chosen;
    std::size_t count = 0;
    enumerate(candidates, current, chosen, 0, [&](SimpleMask m) { return b.contains(m); }, cap,
              [&](const std::vector<int>& picked) {
                  std::vector<SimpleMask> s;
                  for (int i : picked) s.push_back(candidates[i]);
                  s.insert(s.end(), tops.begin(), tops.end());
                  sort_masks(s);
                  out.push_back(std::move(s));
              },
              count);
    return out;
}

}  // namespace pnh
