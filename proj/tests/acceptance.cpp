// Acceptance run: one PASS/FAIL line per criterion, with its time budget.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "pnh/error.hpp"
#include "pnh/face_poset.hpp"
#include "pnh/fvector_formulas.hpp"

using namespace pnh;

namespace {

struct Setup {
    RootSystem rs;
    std::unique_ptr<WeylGroup> w;
    std::unique_ptr<BuildingSet> g;
    std::vector<Rat> eps;
    std::unique_ptr<HalfSpaceSystem> hs;
    VRep v;
    std::unique_ptr<FacePoset> poset;

    Setup(const std::string& type, bool maximal)
        : rs(build_root_system(std::string_view(type))), w(std::make_unique<WeylGroup>(rs)) {
        g = std::make_unique<BuildingSet>(maximal ? build_maximal(rs, *w) : build_minimal(rs, *w));
        eps = suitable_list(*g, 1).eps;
        hs = std::make_unique<HalfSpaceSystem>(*g, *w, eps);
        v = all_vertices(*g, eps, *w);
        poset = std::make_unique<FacePoset>(*g, *w);
    }
};

std::string fv(const std::vector<Int>& f) {
    std::string s;
    for (const auto& x : f) s += (s.empty() ? "" : ",") + x.get_str();
    return "(" + s + ")";
}

void expect(bool cond, const std::string& what) {
    if (!cond) throw VerificationFailed(what);
}

SimpleMask mask(std::initializer_list<int> simple) {
    SimpleMask out = 0;
    for (int i : simple) out |= SimpleMask{1} << (i - 1);
    return out;
}

std::string capture(const std::string& command) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) throw VerificationFailed("cannot run " + command);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    return out;
}

std::string c1() {
    Setup s("A2", false);
    const auto f = s.poset->f_vector();
    expect(f == std::vector<Int>{12, 12, 1}, "f-vector " + fv(f));
    const auto rep = verify_hrep_vrep(*s.w, *s.hs, s.v);
    expect(!rep.sampled && rep.pairs_checked == 144, "not exhaustive");
    expect(rep.tight == 24, "tight pairs " + std::to_string(rep.tight));
    return "f = " + fv(f) + ", 144 pairs exact, 24 tight as predicted";
}

std::string c2() {
    Setup s("B2", false);
    const auto f = s.poset->f_vector();
    expect(s.v.size() == 16 && f[0] == 16 && f[1] == 16, "f-vector " + fv(f));
    verify_hrep_vrep(*s.w, *s.hs, s.v);
    return "f = " + fv(f);
}

std::string c3() {
    Setup s("A3", false);
    const auto f = s.poset->f_vector();
    expect(s.v.size() == 120 && f == std::vector<Int>{120, 192, 74, 1}, "f-vector " + fv(f));
    expect(s.hs->size() == 74, "half-spaces " + std::to_string(s.hs->size()));
    expect(f[0] - f[1] + f[2] == 2, "Euler");
    for (int k = 0; k <= 2; ++k) expect(minimal_face_count(4, k) == f[2 - k], "formula at k = " + std::to_string(k));
    const auto rep = verify_hrep_vrep(*s.w, *s.hs, s.v);
    expect(!rep.sampled && rep.pairs_checked == 120 * 74, "not exhaustive");
    return "f = " + fv(f) + ", V-E+F = 2, formula matches, 8880 pairs exact";
}

std::string c4() {
    Setup hi("A3", true);
    Setup lo("A3", false);
    const auto f = hi.poset->f_vector();
    expect(hi.v.size() == 144 && f == std::vector<Int>{144, 216, 74, 1}, "f-vector " + fv(f));
    expect(hi.poset->is_simple(), "maximal not simple");
    expect(!lo.poset->is_simple(), "minimal simple");
    return "f = " + fv(f) + ", maximal simple, minimal not simple";
}

std::string c5() {
    std::ostringstream os;
    for (int n = 3; n <= 5; ++n)
        for (bool maximal : {false, true}) {
            const RootSystem rs = build_root_system("A" + std::to_string(n - 1));
            const WeylGroup w(rs);
            const BuildingSet g = maximal ? build_maximal(rs, w) : build_minimal(rs, w);
            const auto f = FacePoset(g, w).f_vector();
            for (int k = 0; k <= n - 2; ++k) {
                const Int closed = maximal ? maximal_face_count(n, k) : minimal_face_count(n, k);
                expect(closed == f[n - 2 - k], "n = " + std::to_string(n) + " k = " + std::to_string(k));
            }
            os << (os.str().empty() ? "" : "; ") << "A" << n - 1 << (maximal ? " max " : " min ") << fv(f);
        }
    return os.str();
}

const std::vector<std::pair<std::string, bool>>& lemma_configs() {
    static const std::vector<std::pair<std::string, bool>> configs = {
        {"A2", false}, {"A3", false}, {"A3", true}, {"B3", false}, {"B3", true},
        {"A1^3", false}, {"A1^3", true}, {"D4", false}};
    return configs;
}

std::string c6() {
    std::size_t checked = 0;
    for (const auto& [type, maximal] : lemma_configs()) {
        const RootSystem rs = build_root_system(std::string_view(type));
        const WeylGroup w(rs);
        const BuildingSet g = maximal ? build_maximal(rs, w) : build_minimal(rs, w);
        checked += verify_epsilon_lemma(g, suitable_list(g, 1).eps).checked;
    }
    const RootSystem a2 = build_root_system("A2");
    const WeylGroup w(a2);
    const BuildingSet g = build_minimal(a2, w);
    std::string witness;
    try {
        verify_epsilon_lemma(g, std::vector<Rat>{Rat(1, 3), Rat(1)});
    } catch (const LemmaViolated& e) {
        witness = e.what();
    }
    expect(!witness.empty(), "planted list accepted");
    return std::to_string(checked) + " decompositions pass; planted list rejected with \"" + witness + "\"";
}

std::string c7() {
    std::size_t count = 0;
    for (const auto& [type, maximal] : lemma_configs()) {
        const RootSystem rs = build_root_system(std::string_view(type));
        const WeylGroup w(rs);
        const BuildingSet g = maximal ? build_maximal(rs, w) : build_minimal(rs, w);
        const auto eps = suitable_list(g, 1).eps;
        for (const auto& s : enumerate_maximal_nested_sets(g)) {
            expect(in_open_chamber(rs, vertex(g, s, eps)), "vertex outside the chamber");
            ++count;
        }
    }
    const RootSystem a3 = build_root_system("A3");
    const WeylGroup w(a3);
    const BuildingSet g = build_minimal(a3, w);
    const auto rep = nestohedron_check(g, suitable_list(g, 1).eps);
    expect(rep.non_nested_checked > 0, "no excluded families");
    return std::to_string(count) + " chamber vertices strictly inside; A3 minimal: " +
           std::to_string(rep.non_nested_checked) + " excluded points, " + std::to_string(rep.predicted_violations) +
           " predicted strict violations";
}

std::string c8() {
    Setup s("A3", false);
    const auto& g = *s.g;
    const int whole = static_cast<int>(g.fund().size()) - 1;
    const int l1 = g.fund_index(mask({1}));
    const int l3 = g.fund_index(mask({3}));
    const int a12 = g.fund_index(mask({1, 2}));

    const auto sq = facet_factors(*s.poset, s.poset->make_face(0, {{l1, l3, whole}, {l1, l3}}), true);
    expect(sq.quotient_vertices == 1 && sq.factors.size() == 2, "square shape");
    for (const auto& f : sq.factors) expect(f.weyl->order() == 2 && f.building->fund().size() == 1, "segment factor");
    expect(sq.facet_vertices == 4 && sq.lattice_checked, "square lattice");

    const auto hex = facet_factors(*s.poset, s.poset->make_face(0, {{a12, whole}, {a12}}), true);
    expect(hex.factors.size() == 1 && hex.factors[0].weyl->order() == 6, "A2 factor");
    const std::size_t dodecagon = hex.factors[0].weyl->order() * enumerate_maximal_nested_sets(*hex.factors[0].building).size();
    expect(dodecagon == 12 && hex.lattice_checked, "A2-type lattice");
    const std::string quotient = hex.quotient_vertices == 1 ? "point" : hex.quotient_vertices == 2 ? "segment" : "other";

    std::size_t crossing = 0;
    for (bool maximal : {false, true}) {
        Setup b3("B3", maximal);
        for (const auto& p : crossing_facets(*b3.poset)) {
            facet_factors(*b3.poset, p, false);
            ++crossing;
        }
    }
    return "square = point x segment x segment; A2-type facet = " + quotient + " x dodecagon (" +
           std::to_string(hex.facet_vertices) + " vertices; criterion text says segment, see notes); lattices verified; " +
           std::to_string(crossing) + " B3 crossing facets match vertex products";
}

std::string c9() {
    std::size_t maps = 0;
    std::uint64_t triality = 0;
    for (const auto& [type, maximal] : std::vector<std::pair<std::string, bool>>{{"A3", false}, {"A3", true}, {"D4", false}}) {
        Setup s(type, maximal);
        const auto autos = diagram_automorphisms(s.rs);
        for (int gamma : s.g->preserving_automorphisms())
            for (int x = 0; x < s.w->order(); ++x) {
                const auto perm = aut_action_on_halfspaces(*s.g, *s.w, *s.hs, x, gamma);
                ++maps;
                const auto& p = autos[gamma].perm;
                const bool three_cycle = type == "D4" && x == 0 && p[0] != 0 && p[p[0]] != 0;
                if (three_cycle) triality = permutation_order(perm);
            }
    }
    expect(triality == 3, "triality order " + std::to_string(triality));
    return std::to_string(maps) + " maps w.gamma permute the half-spaces; triality has order 3";
}

std::string c10() {
    std::size_t pairs = 0;
    for (const auto& [type, maximal] : std::vector<std::pair<std::string, bool>>{{"A2", false}, {"A3", false}, {"A3", true}}) {
        Setup s(type, maximal);
        const auto faces = s.poset->enumerate_faces();
        std::vector<std::vector<int>> verts;
        for (const auto& p : faces) verts.push_back(s.poset->face_vertices(p));
        for (std::size_t x = 0; x < faces.size(); ++x)
            for (std::size_t y = 0; y < faces.size(); ++y) {
                const bool geo = std::includes(verts[y].begin(), verts[y].end(), verts[x].begin(), verts[x].end());
                expect(geo == s.poset->is_face_leq(faces[x], faces[y]), type + ": order disagrees with containment");
                ++pairs;
            }
    }
    return std::to_string(pairs) + " face pairs agree";
}

std::string c11() {
    Setup lo("B3", false);
    Setup hi("B3", true);
    expect(lo.v.maximal.size() == 5 && lo.v.size() == 240, "minimal");
    expect(hi.v.maximal.size() == 6 && hi.v.size() == 288, "maximal");
    return "pentagons: 48 x 5 = 240; hexagons: 48 x 6 = 288";
}

std::string c12() {
    const std::string cmd = std::string("\"") + PNH_BINARY + "\" build --type B3 --building minimal --a 1";
    const std::string a = capture(cmd);
    const std::string b = capture(cmd);
    expect(!a.empty() && a == b, "outputs differ");
    return std::to_string(a.size()) + " identical bytes";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double budget;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "A2 dodecagon", 1, c1},
        {2, "B2 16-gon", 1, c2},
        {3, "A3 minimal", 10, c3},
        {4, "A3 maximal and simplicity", 10, c4},
        {5, "closed forms equal enumeration, n = 3..5", 300, c5},
        {6, "epsilon inequality verifier", 30, c6},
        {7, "chamber membership and excluded points", 60, c7},
        {8, "facet factorization", 30, c8},
        {9, "diagram automorphisms permute half-spaces", 60, c9},
        {10, "order relation equals containment", 120, c10},
        {11, "B3 chamber nestohedra", 60, c11},
        {12, "deterministic build output", 60, c12},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && secs > c.budget) {
            ok = false;
            detail += "; over the time budget";
        }
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.title << " (" << std::fixed
                  << std::setprecision(2) << secs << " s, budget " << std::setprecision(0) << c.budget
                  << " s): " << detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
