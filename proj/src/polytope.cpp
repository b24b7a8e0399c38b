#include "pnh/polytope.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <unordered_map>

#include "pnh/error.hpp"

namespace pnh {

namespace {

// A rational vector as integer numerators over one positive denominator.
struct ScaledVec {
    std::vector<Int> num;
    Int den;
};

ScaledVec scale(std::span<const Rat> v) {
    ScaledVec s;
    s.den = 1;
    for (const auto& x : v) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& x : v) s.num.push_back(Int(x.get_num() * (s.den / x.get_den())));
    return s;
}

// Functional and offset of a half-space with a common integer scale.
struct ScaledHalfSpace {
    std::vector<Int> f;
    Int c;
};

ScaledHalfSpace scale(const HalfSpace& h) {
    std::vector<Rat> all(h.functional.begin(), h.functional.end());
    all.push_back(h.offset);
    ScaledVec s = scale(all);
    ScaledHalfSpace out;
    out.c = s.num.back();
    s.num.pop_back();
    out.f = std::move(s.num);
    return out;
}

// sign of offset - (x, normal)
int slack_sign(const ScaledHalfSpace& h, const ScaledVec& x) {
    Int lhs = 0;
    for (std::size_t i = 0; i < h.f.size(); ++i) lhs += h.f[i] * x.num[i];
    const Int rhs = h.c * x.den;
    return cmp(rhs, lhs) < 0 ? -1 : (rhs == lhs ? 0 : 1);
}

std::string describe(const HalfSpace& h) {
    std::ostringstream os;
    os << kind_name(h.kind) << "[mask " << h.origin << "] moved by element #" << h.sigma;
    return os.str();
}

bool contains_mask(std::span<const SimpleMask> t, SimpleMask m) {
    return std::find(t.begin(), t.end(), m) != t.end();
}

}  // namespace

Vec solve_vertex(const BuildingSet& g, std::span<const SimpleMask> s, std::span<const Rat> eps) {
    const RootSystem& rs = g.root_system();
    const int n = rs.rank();
    if (static_cast<int>(s.size()) != n) throw SingularSystem("a vertex needs exactly rank many flats");
    const Rat& a = eps[n - 1];
    Mat m(n, n);
    Vec rhs(n);
    int row = 0;
    for (SimpleMask mask : s) {
        Vec normal;
        Rat offset;
        if (mask == g.full_mask()) {
            normal = rs.delta();
            offset = a;
        } else {
            normal = rs.delta() - pi_sum(rs, std::span<const SimpleMask>(&mask, 1));
            offset = a - eps[std::popcount(mask) - 1];
        }
        const Vec c = rs.covector(normal);
        for (int j = 0; j < n; ++j) m(row, j) = c[j];
        rhs[row] = offset;
        ++row;
    }
    return solve_linear_system(m, rhs);
}

bool in_open_chamber(const RootSystem& rs, const Vec& x) {
    const Vec c = rs.covector(x);
    return std::all_of(c.begin(), c.end(), [](const Rat& v) { return sgn(v) > 0; });
}

Vec vertex(const BuildingSet& g, const NestedSet& s, std::span<const Rat> eps) {
    const auto masks = masks_of(g, s);
    Vec x = solve_vertex(g, masks, eps);
    if (!in_open_chamber(g.root_system(), x)) throw NotInChamber("a chamber vertex lies outside the open chamber");
    return x;
}

VRep all_vertices(const BuildingSet& g, std::span<const Rat> eps, const WeylGroup& w) {
    VRep v;
    v.maximal = enumerate_maximal_nested_sets(g);
    for (const auto& s : v.maximal) {
        v.maximal_masks.push_back(masks_of(g, s));
        v.chamber.push_back(vertex(g, s, eps));
    }
    v.points.reserve(static_cast<std::size_t>(w.order()) * v.maximal.size());
    std::unordered_map<Vec, int, VecHash> seen;
    for (int sigma = 0; sigma < w.order(); ++sigma) {
        for (std::size_t s = 0; s < v.maximal.size(); ++s) {
            Vec p = w.act(sigma, v.chamber[s]);
            const int id = static_cast<int>(v.points.size());
            const auto [it, inserted] = seen.emplace(p, id);
            if (!inserted) v.coincidences.emplace_back(it->second, id);
            v.points.push_back(std::move(p));
        }
    }
    return v;
}

bool predicted_tight(const WeylGroup& w, const HalfSpace& h, int sigma, std::span<const SimpleMask> t) {
    switch (h.kind) {
        case HalfSpaceKind::Whole:
            return sigma == h.sigma;
        case HalfSpaceKind::Member:
            return contains_mask(t, h.origin) && w.standard_parabolic(h.origin).coset_rep[sigma] == h.sigma;
        case HalfSpaceKind::Composite:
            for (SimpleMask p : h.parts)
                if (!contains_mask(t, p)) return false;
            return w.standard_parabolic(h.origin).coset_rep[sigma] == h.sigma;
    }
    return false;
}

HVReport verify_hrep_vrep(const WeylGroup& w, const HalfSpaceSystem& hs, const VRep& v, std::size_t limit,
                          std::uint64_t seed) {
    HVReport report;
    report.pairs_total = v.size() * hs.size();
    report.seed = seed;
    std::vector<ScaledHalfSpace> hsc;
    for (const auto& h : hs.all()) hsc.push_back(scale(h));
    std::vector<ScaledVec> vsc;
    for (const auto& p : v.points) vsc.push_back(scale(p.coords()));

    auto check = [&](std::size_t vid, std::size_t hid) {
        const int s = slack_sign(hsc[hid], vsc[vid]);
        const int sigma = v.sigma_of(static_cast<int>(vid));
        const bool expect = predicted_tight(w, hs[hid], sigma, v.maximal_masks[v.nested_of(static_cast<int>(vid))]);
        ++report.pairs_checked;
        if (s < 0) {
            throw VerificationFailed("vertex #" + std::to_string(vid) + " violates half-space " + describe(hs[hid]));
        }
        if ((s == 0) != expect) {
            throw VerificationFailed("vertex #" + std::to_string(vid) + (s == 0 ? " lies on " : " misses ") +
                                     describe(hs[hid]) + " contrary to the incidence rule");
        }
        if (s == 0) ++report.tight;
    };

    if (report.pairs_total <= limit) {
        for (std::size_t vid = 0; vid < v.size(); ++vid)
            for (std::size_t hid = 0; hid < hs.size(); ++hid) check(vid, hid);
    } else {
        report.sampled = true;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick_v(0, v.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_h(0, hs.size() - 1);
        for (std::size_t k = 0; k < limit; ++k) check(pick_v(rng), pick_h(rng));
    }
    return report;
}

NestohedronReport nestohedron_check(const BuildingSet& g, std::span<const Rat> eps) {
    const RootSystem& rs = g.root_system();
    const int n = rs.rank();
    const Rat& a = eps[n - 1];
    NestohedronReport report;

    const auto maximal = enumerate_maximal_nested_sets(g);
    std::vector<Vec> chamber;
    for (const auto& s : maximal) {
        chamber.push_back(vertex(g, s, eps));
        ++report.chamber_vertices;
    }

    auto member_value = [&](const Vec& x, SimpleMask m) {
        return rs.inner(x, rs.delta() - pi_sum(rs, std::span<const SimpleMask>(&m, 1)));
    };
    auto member_offset = [&](SimpleMask m) { return a - eps[std::popcount(m) - 1]; };

    // other member half-spaces are strictly slack at each chamber vertex
    for (std::size_t k = 0; k < maximal.size(); ++k) {
        const auto masks = masks_of(g, maximal[k]);
        for (SimpleMask m : g.fund_masks()) {
            if (contains_mask(masks, m)) continue;
            ++report.interior_checks;
            if (member_value(chamber[k], m) >= member_offset(m)) {
                throw VerificationFailed("a chamber vertex is not strictly inside HS of mask " + std::to_string(m));
            }
        }
    }

    // independent non-nested families of rank size miss the nestohedron
    const auto& fund = g.fund_masks();
    const int proper = static_cast<int>(fund.size()) - 1;
    std::vector<int> pick;
    auto visit = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == n - 1) {
            std::vector<SimpleMask> t;
            for (int i : pick) t.push_back(fund[i]);
            t.push_back(g.full_mask());
            if (is_nested(g, t)) return;
            Vec x;
            try {
                x = solve_vertex(g, t, eps);
            } catch (const SingularSystem&) {
                return;
            }
            ++report.non_nested_checked;
            if (!in_open_chamber(rs, x)) {
                ++report.outside_chamber;
                const Vec c = rs.covector(x);
                bool found = false;
                for (int i = 0; i < n; ++i) {
                    if (sgn(c[i]) > 0) continue;
                    const SimpleMask line = SimpleMask{1} << i;
                    if (!(member_value(x, line) > member_offset(line))) {
                        throw VerificationFailed("v_T outside the chamber satisfies HS of the line a" +
                                                 std::to_string(i + 1));
                    }
                    found = true;
                }
                if (!found) throw VerificationFailed("v_T outside the chamber with no negative coordinate");
                ++report.predicted_violations;
                return;
            }
            bool any = false;
            for (SimpleMask b : fund) {
                if (non_redundant_decompositions(b, t).empty()) continue;
                if (contains_mask(t, b)) {
                    throw VerificationFailed("a member of T is a non-redundant sum of other members of T");
                }
                if (!(member_value(x, b) > member_offset(b))) {
                    throw VerificationFailed("v_T is not cut off by the half-space of mask " + std::to_string(b));
                }
                any = true;
                ++report.predicted_violations;
            }
            if (!any) throw VerificationFailed("non-nested T without a member that is a sum of its elements");
            return;
        }
        for (int i = from; i < proper; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    visit(visit, 0);
    return report;
}

std::vector<std::vector<int>> facet_vertex_sets(const HalfSpaceSystem& hs, const VRep& v) {
    std::vector<ScaledVec> vsc;
    for (const auto& p : v.points) vsc.push_back(scale(p.coords()));
    std::vector<std::vector<int>> out(hs.size());
    for (std::size_t hid = 0; hid < hs.size(); ++hid) {
        const ScaledHalfSpace h = scale(hs[hid]);
        for (std::size_t vid = 0; vid < v.size(); ++vid)
            if (slack_sign(h, vsc[vid]) == 0) out[hid].push_back(static_cast<int>(vid));
        if (out[hid].empty()) throw EmptyFacet("half-space #" + std::to_string(hid) + " touches no vertex");
    }
    return out;
}

bool euler_check(std::span<const Int> fvector) {
    Int sum = 0;
    for (std::size_t i = 0; i < fvector.size(); ++i) sum += (i % 2 == 0) ? fvector[i] : Int(-fvector[i]);
    return sum == 1;
}

}  // namespace pnh
