#include "pnh/halfspaces.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pnh/error.hpp"

namespace pnh {

namespace {

Vec semisum(const RootSystem& rs, const RootSet& roots) {
    Vec s(static_cast<std::size_t>(rs.rank()));
    for (int k : roots.indices()) s += rs.positive_roots()[k];
    s *= Rat(1, 2);
    return s;
}

std::string mask_string(SimpleMask m) {
    std::ostringstream os;
    os << '<';
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (!((m >> i) & 1U)) continue;
        os << (first ? "" : ",") << "a" << (i + 1);
        first = false;
    }
    os << '>';
    return os.str();
}

Rat max_coefficient(const Vec& v) {
    Rat best = 0;
    for (const auto& x : v) best = std::max(best, x);
    return best;
}

Rat min_positive_coefficient(const Vec& v) {
    std::optional<Rat> best;
    for (const auto& x : v)
        if (sgn(x) > 0 && (!best || x < *best)) best = x;
    if (!best) throw Error("semisum without positive coefficient");
    return *best;
}

}  // namespace

FlatData flat_data(const RootSystem& rs, const Flat& a) {
    const int n = rs.rank();
    FlatData d{a, {}, {}};
    if (a.dim == n) {
        d.pi = rs.delta();
        d.delta_perp = rs.delta();
        return d;
    }
    d.pi = semisum(rs, a.roots);
    d.delta_perp = rs.delta() - d.pi;
    if (is_fundamental(rs, a)) {
        const SimpleMask mask = simple_mask(rs, a);
        const Vec c = rs.weight_coords(d.delta_perp);
        for (int i = 0; i < n; ++i) {
            const bool inside = (mask >> i) & 1U;
            if (inside && sgn(c[i]) != 0) throw Error("delta_A is not orthogonal to the simple roots of A");
            if (!inside && c[i] < 1) throw Error("delta_A has a weight coefficient below 1");
        }
    }
    return d;
}

Vec pi_sum(const RootSystem& rs, std::span<const SimpleMask> parts) {
    Vec s(static_cast<std::size_t>(rs.rank()));
    for (SimpleMask m : parts) s += semisum(rs, fundamental_flat(rs, m).roots);
    return s;
}

// ---------------------------------------------------------------- ratios and epsilons

Rat RatioTable::at(int i, int j) const {
    if (i < static_cast<int>(by_dims.size()) && j < static_cast<int>(by_dims[i].size()) && by_dims[i][j]) {
        return *by_dims[i][j];
    }
    return 1;
}

RatioTable ratio_table(const BuildingSet& g) {
    const RootSystem& rs = g.root_system();
    const int n = rs.rank();
    RatioTable t;
    t.by_dims.assign(n + 1, std::vector<std::optional<Rat>>(n + 1));
    const auto& fund = g.fund();
    std::vector<Vec> pis;
    for (const auto& f : fund) pis.push_back(flat_data(rs, f).pi);
    for (std::size_t a = 0; a < fund.size(); ++a) {
        for (std::size_t b = 0; b < fund.size(); ++b) {
            if (a == b || !fund[b].roots.subset_of(fund[a].roots)) continue;
            const Rat r = max_coefficient(pis[a]) / min_positive_coefficient(pis[b]);
            t.pairs.emplace(std::pair{static_cast<int>(a), static_cast<int>(b)}, r);
            auto& slot = t.by_dims[fund[a].dim][fund[b].dim];
            if (!slot || *slot < r) slot = r;
        }
    }
    return t;
}

SuitableList suitable_list(const BuildingSet& g, const Rat& a) {
    if (sgn(a) <= 0) throw InvalidEpsilons("a must be positive");
    const int n = g.root_system().rank();
    const RatioTable r = ratio_table(g);
    std::vector<Rat> t(n);
    t[0] = 1;
    for (int i = 2; i <= n; ++i) t[i - 1] = (2 * r.at(i, i - 1) + 1) * t[i - 2];
    SuitableList out{a, {}};
    for (int i = 0; i < n; ++i) out.eps.push_back(a * t[i] / t[n - 1]);
    if (auto bad = suitability_violation(g, out.eps)) throw Error("generated list is not suitable: " + *bad);
    return out;
}

std::optional<std::string> suitability_violation(const BuildingSet& g, std::span<const Rat> eps) {
    const int n = g.root_system().rank();
    if (static_cast<int>(eps.size()) != n) {
        return "expected " + std::to_string(n) + " values, got " + std::to_string(eps.size());
    }
    for (int i = 0; i < n; ++i)
        if (sgn(eps[i]) <= 0) return "eps_" + std::to_string(i + 1) + " is not positive";
    const RatioTable r = ratio_table(g);
    for (int i = 2; i <= n; ++i) {
        if (eps[i - 1] <= eps[i - 2]) return "eps_" + std::to_string(i) + " <= eps_" + std::to_string(i - 1);
        const Rat bound = 2 * r.at(i, i - 1) * eps[i - 2];
        if (eps[i - 1] <= bound) {
            return "eps_" + std::to_string(i) + " = " + to_string(eps[i - 1]) + " is not above 2 R^" +
                   std::to_string(i) + "_" + std::to_string(i - 1) + " eps_" + std::to_string(i - 1) + " = " +
                   to_string(bound);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<SimpleMask>> non_redundant_decompositions(SimpleMask whole,
                                                                  std::span<const SimpleMask> candidates) {
    std::vector<SimpleMask> inside;
    for (SimpleMask c : candidates)
        if (c != whole && (c & ~whole) == 0) inside.push_back(c);
    std::vector<std::vector<SimpleMask>> out;
    std::vector<SimpleMask> chosen;
    const int max_parts = std::popcount(whole);

    auto all_have_private = [&](const std::vector<SimpleMask>& parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            SimpleMask others = 0;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (j != i) others |= parts[j];
            if ((parts[i] & ~others) == 0) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t from, SimpleMask covered) -> void {
        if (chosen.size() >= 2 && covered == whole) out.push_back(chosen);
        if (static_cast<int>(chosen.size()) == max_parts) return;
        for (std::size_t i = from; i < inside.size(); ++i) {
            if ((inside[i] & ~covered) == 0) continue;
            chosen.push_back(inside[i]);
            if (all_have_private(chosen)) self(self, i + 1, covered | inside[i]);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

LemmaReport verify_epsilon_lemma(const BuildingSet& g, std::span<const Rat> eps) {
    const int n = g.root_system().rank();
    if (static_cast<int>(eps.size()) != n) throw InvalidEpsilons("epsilon list has the wrong length");
    const RatioTable r = ratio_table(g);
    LemmaReport report;
    for (SimpleMask whole : g.fund_masks()) {
        const int dim_b = std::popcount(whole);
        for (auto& parts : non_redundant_decompositions(whole, g.fund_masks())) {
            Rat rhs = 0;
            for (SimpleMask p : parts) {
                const int d = std::popcount(p);
                rhs += r.at(dim_b, d) * eps[d - 1];
            }
            const Rat lhs = eps[dim_b - 1];
            ++report.checked;
            if (lhs <= rhs) {
                std::string w = mask_string(whole) + " =";
                for (std::size_t i = 0; i < parts.size(); ++i) w += (i ? " + " : " ") + mask_string(parts[i]);
                throw LemmaViolated("epsilon inequality fails for " + w + ": " + to_string(lhs) + " <= " +
                                    to_string(rhs));
            }
            report.instances.push_back({whole, std::move(parts), lhs, rhs});
        }
    }
    return report;
}

// ---------------------------------------------------------------- half-spaces

const char* kind_name(HalfSpaceKind k) {
    switch (k) {
        case HalfSpaceKind::Whole: return "H_V";
        case HalfSpaceKind::Member: return "H_A";
        case HalfSpaceKind::Composite: return "Hbar_B";
    }
    return "?";
}

std::vector<HalfSpace> fundamental_halfspaces(const BuildingSet& g, std::span<const Rat> eps) {
    const RootSystem& rs = g.root_system();
    const int n = rs.rank();
    if (static_cast<int>(eps.size()) != n) throw InvalidEpsilons("epsilon list has the wrong length");
    const Rat& a = eps[n - 1];
    std::vector<HalfSpace> out;
    auto push = [&](HalfSpaceKind kind, SimpleMask origin, std::vector<SimpleMask> parts, Vec normal, Rat offset) {
        if (sgn(offset) <= 0) throw InvalidEpsilons("a half-space offset is not positive");
        HalfSpace h{kind, origin, std::move(parts), static_cast<int>(out.size()), WeylGroup::identity(),
                    std::move(normal), std::move(offset), {}};
        h.functional = rs.covector(h.normal);
        out.push_back(std::move(h));
    };

    push(HalfSpaceKind::Whole, g.full_mask(), {}, rs.delta(), a);
    for (std::size_t i = 0; i + 1 < g.fund().size(); ++i) {
        const FlatData d = flat_data(rs, g.fund()[i]);
        push(HalfSpaceKind::Member, g.fund_masks()[i], {}, d.delta_perp, a - eps[g.fund()[i].dim - 1]);
    }
    for (SimpleMask m : g.all_fund_masks()) {
        if (g.fund_contains(m)) continue;
        const auto& parts = g.fund_decomposition(m);
        Rat offset = a;
        for (SimpleMask p : parts) offset -= eps[std::popcount(p) - 1];
        push(HalfSpaceKind::Composite, m, parts, rs.delta() - pi_sum(rs, parts), offset);
    }
    return out;
}

namespace {

Vec hyperplane_key(const Vec& normal, const Rat& offset) {
    std::vector<Rat> k(normal.begin(), normal.end());
    k.push_back(offset);
    Rat lead = 0;
    for (const auto& x : k)
        if (sgn(x) != 0) {
            lead = x;
            break;
        }
    for (auto& x : k) x /= lead;
    return Vec(std::move(k));
}

}  // namespace

HalfSpaceSystem::HalfSpaceSystem(const BuildingSet& g, const WeylGroup& w, std::span<const Rat> eps)
    : w_(&w), fundamental_(fundamental_halfspaces(g, eps)) {
    for (const auto& h : fundamental_) {
        const SimpleMask stab = h.kind == HalfSpaceKind::Whole ? 0 : h.origin;
        stabilizer_.push_back(stab);
        const ParabolicSubgroup& p = w.standard_parabolic(stab);

        // the normal is the average of the delta-orbit under its stabilizer
        // and is moved by every element outside the stabilizer
        if (h.kind != HalfSpaceKind::Whole) {
            Vec avg(static_cast<std::size_t>(w.rank()));
            for (int s : p.members) avg += w.act(s, g.root_system().delta());
            avg *= Rat(1, p.order());
            if (avg != h.normal) throw Error("half-space normal is not the projection of delta");
        }
        for (int s = 0; s < w.order(); ++s) {
            if ((w.act(s, h.normal) == h.normal) != p.contains(s)) {
                throw Error("half-space stabilizer differs from the parabolic subgroup");
            }
        }

        by_rep_.emplace_back();
        for (int rep : p.coset_reps) {
            HalfSpace image = h;
            image.sigma = rep;
            image.normal = w.act(rep, h.normal);
            image.functional = g.root_system().covector(image.normal);
            const int id = static_cast<int>(all_.size());
            if (!by_key_.emplace(hyperplane_key(image.normal, image.offset), id).second) {
                throw Error("two half-space orbits share a hyperplane");
            }
            by_rep_.back().emplace(rep, id);
            all_.push_back(std::move(image));
        }
    }
}

int HalfSpaceSystem::fundamental_index(HalfSpaceKind kind, SimpleMask origin) const {
    for (std::size_t f = 0; f < fundamental_.size(); ++f)
        if (fundamental_[f].kind == kind && fundamental_[f].origin == origin) return static_cast<int>(f);
    return -1;
}

int HalfSpaceSystem::id(int f, int sigma) const {
    const ParabolicSubgroup& p = w_->standard_parabolic(stabilizer_[f]);
    return by_rep_[f].at(p.coset_rep[sigma]);
}

int HalfSpaceSystem::lookup(const Vec& normal, const Rat& offset) const {
    const auto it = by_key_.find(hyperplane_key(normal, offset));
    return it == by_key_.end() ? -1 : it->second;
}

}  // namespace pnh
