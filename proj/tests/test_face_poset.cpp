#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pnh/error.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

struct Geometry {
    Fixture f;
    HalfSpaceSystem hs;
    VRep v;
    std::vector<std::vector<int>> facets;
    FacePoset poset;

    Geometry(const std::string& type, bool maximal)
        : f(type, maximal),
          hs(*f.g, *f.w, f.eps),
          v(all_vertices(*f.g, f.eps, *f.w)),
          facets(facet_vertex_sets(hs, v)),
          poset(*f.g, *f.w) {}

    int fund(std::initializer_list<int> simple) const { return f.g->fund_index(m(simple)); }
    int whole() const { return static_cast<int>(f.g->fund().size()) - 1; }
};

std::vector<Int> counts(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_SUITE("face_poset") {
    TEST_CASE("f-vectors") {
        CHECK(Geometry("A2", false).poset.f_vector() == counts({12, 12, 1}));
        CHECK(Geometry("B2", false).poset.f_vector() == counts({16, 16, 1}));
        CHECK(Geometry("A3", false).poset.f_vector() == counts({120, 192, 74, 1}));
        CHECK(Geometry("A3", true).poset.f_vector() == counts({144, 216, 74, 1}));
    }

    TEST_CASE("enumeration agrees with the counts and the geometry") {
        for (const char* type : {"A2", "A3", "B3", "A1^3"})
            for (bool maximal : {false, true}) {
                CAPTURE(type);
                const Geometry geo(type, maximal);
                const auto f = geo.poset.f_vector();
                const int n = geo.f.rs.rank();
                for (int d = 0; d <= n; ++d)
                    CHECK(Int(static_cast<unsigned long>(geo.poset.enumerate_faces(d).size())) == f[d]);
                CHECK(f[0] == Int(static_cast<unsigned long>(geo.v.size())));
                CHECK(f[n - 1] == Int(static_cast<unsigned long>(geo.hs.size())));
                CHECK(f[n] == 1);
                CHECK(euler_check(f));
            }
    }

    TEST_CASE("A2 edges by shape") {
        const Geometry geo("A2", false);
        std::map<LabelledNestedSet, int> shapes;
        for (const auto& p : geo.poset.enumerate_faces(1)) ++shapes[p.s];
        CHECK(shapes[{{geo.whole()}, {}}] == 6);
        CHECK(shapes[{{geo.fund({1}), geo.whole()}, {geo.fund({1})}}] == 3);
        CHECK(shapes[{{geo.fund({2}), geo.whole()}, {geo.fund({2})}}] == 3);
    }

    TEST_CASE("the whole polytope is one face") {
        const Geometry geo("B3", true);
        const auto top = geo.poset.enumerate_faces(3);
        REQUIRE(top.size() == 1);
        CHECK(top[0].s.nested == NestedSet{geo.whole()});
        CHECK(top[0].s.labels == std::vector<int>{geo.whole()});
        CHECK(geo.poset.face_vertices(top[0]).size() == geo.v.size());
    }

    TEST_CASE("dimensions") {
        const Geometry geo("A3", false);
        CHECK(geo.poset.face_dimension(LabelledNestedSet{{geo.whole()}, {}}) == 2);
        CHECK(geo.poset.face_dimension(LabelledNestedSet{{geo.fund({1, 2}), geo.whole()}, {geo.fund({1, 2})}}) == 2);
        CHECK(geo.poset.face_dimension(
                  LabelledNestedSet{{geo.fund({1}), geo.fund({3}), geo.whole()}, {geo.fund({1}), geo.fund({3})}}) == 2);
    }

    TEST_CASE("face vertices") {
        const Geometry a2("A2", false);
        const FacePair vertex = a2.poset.make_face(0, {{a2.fund({1}), a2.whole()}, {}});
        CHECK(a2.poset.face_vertices(vertex).size() == 1);
        const FacePair edge = a2.poset.make_face(0, {{a2.fund({1}), a2.whole()}, {a2.fund({1})}});
        CHECK(a2.poset.face_vertices(edge).size() == 2);

        const Geometry a3("A3", false);
        const FacePair square =
            a3.poset.make_face(0, {{a3.fund({1}), a3.fund({3}), a3.whole()}, {a3.fund({1}), a3.fund({3})}});
        CHECK(a3.poset.face_vertices(square).size() == 4);
    }

    TEST_CASE("vertex sets agree with hyperplane incidences") {
        for (const char* type : {"A2", "B2", "A3", "B3", "A1^3"})
            for (bool maximal : {false, true}) {
                CAPTURE(type);
                const Geometry geo(type, maximal);
                for (const auto& p : geo.poset.enumerate_faces())
                    CHECK(geo.poset.face_vertices(p) == geo.poset.incidence_vertices(p, geo.hs, geo.facets));
            }
    }

    TEST_CASE("order relation examples") {
        const Geometry a2("A2", false);
        const FacePair vertex = a2.poset.make_face(0, {{a2.fund({1}), a2.whole()}, {}});
        const FacePair edge = a2.poset.make_face(0, {{a2.whole()}, {}});
        CHECK(a2.poset.is_face_leq(vertex, vertex));
        CHECK(a2.poset.is_face_leq(vertex, edge));
        CHECK_FALSE(a2.poset.is_face_leq(edge, vertex));

        const Geometry a3("A3", false);
        const FacePair e = a3.poset.make_face(0, {{a3.fund({1}), a3.whole()}, {}});
        const FacePair facet = a3.poset.make_face(0, {{a3.fund({1}), a3.whole()}, {a3.fund({1})}});
        CHECK(a3.poset.face_dimension(e) == 1);
        CHECK(a3.poset.is_face_leq(e, facet));
    }

    TEST_CASE("order relation equals vertex containment") {
        for (const char* type : {"A2", "B2", "A3", "A1^3"})
            for (bool maximal : {false, true}) {
                CAPTURE(type);
                const Geometry geo(type, maximal);
                const auto faces = geo.poset.enumerate_faces();
                std::vector<std::vector<int>> verts;
                for (const auto& p : faces) verts.push_back(geo.poset.face_vertices(p));
                std::size_t mismatches = 0;
                for (std::size_t x = 0; x < faces.size(); ++x)
                    for (std::size_t y = 0; y < faces.size(); ++y) {
                        const bool geo_leq =
                            std::includes(verts[y].begin(), verts[y].end(), verts[x].begin(), verts[x].end());
                        if (geo_leq != geo.poset.is_face_leq(faces[x], faces[y])) ++mismatches;
                    }
                CHECK(mismatches == 0);
            }
    }

    TEST_CASE("simplicity") {
        for (const char* type : {"A2", "A3", "B3", "A1^3", "D4"}) {
            CAPTURE(type);
            const Geometry lo(type, false);
            const Geometry hi(type, true);
            CHECK(hi.poset.is_simple());
            CHECK(lo.poset.is_simple() == (lo.f.g->flats().size() == hi.f.g->flats().size()));
            for (const Geometry* geo : {&lo, &hi}) {
                std::vector<int> through(geo->v.size(), 0);
                for (const auto& s : geo->facets)
                    for (int id : s) ++through[id];
                for (std::size_t t = 0; t < geo->v.maximal.size(); ++t)
                    CHECK(through[geo->v.id(0, static_cast<int>(t))] == geo->poset.facets_through(geo->v.maximal[t]));
            }
        }
        CHECK(Geometry("A2", false).poset.is_simple());
        CHECK_FALSE(Geometry("A3", false).poset.is_simple());
    }

    TEST_CASE("facet factorization") {
        const Geometry a3("A3", false);
        const FacePair square =
            a3.poset.make_face(0, {{a3.fund({1}), a3.fund({3}), a3.whole()}, {a3.fund({1}), a3.fund({3})}});
        const auto sq = facet_factors(a3.poset, square, true);
        CHECK(sq.quotient_vertices == 1);
        REQUIRE(sq.factors.size() == 2);
        for (const auto& f : sq.factors) CHECK(f.weyl->order() == 2);
        CHECK(sq.facet_vertices == 4);
        CHECK(sq.lattice_checked);

        const FacePair hex = a3.poset.make_face(0, {{a3.fund({1, 2}), a3.whole()}, {a3.fund({1, 2})}});
        const auto h = facet_factors(a3.poset, hex, true);
        CHECK(h.quotient.ground == m({3}));
        CHECK(h.quotient_vertices == 1);
        REQUIRE(h.factors.size() == 1);
        CHECK(h.factors[0].weyl->order() == 6);
        CHECK(h.facet_vertices == 12);
        CHECK(h.lattice_checked);

        const FacePair chamber = a3.poset.make_face(5, {{a3.whole()}, {}});
        CHECK_THROWS_AS(facet_factors(a3.poset, chamber, false), NotCrossingFacet);

        for (bool maximal : {false, true}) {
            const Geometry b3("B3", maximal);
            for (const auto& p : crossing_facets(b3.poset)) CHECK_NOTHROW(facet_factors(b3.poset, p, false));
        }
    }

    TEST_CASE("automorphisms permute half-spaces") {
        const Geometry a2("A2", false);
        const auto swap = aut_action_on_halfspaces(*a2.f.g, *a2.f.w, a2.hs, 0, 1);
        const int whole = a2.hs.id(a2.hs.fundamental_index(HalfSpaceKind::Whole, m({1, 2})), 0);
        const int l1 = a2.hs.id(a2.hs.fundamental_index(HalfSpaceKind::Member, m({1})), 0);
        const int l2 = a2.hs.id(a2.hs.fundamental_index(HalfSpaceKind::Member, m({2})), 0);
        CHECK(swap[whole] == whole);
        CHECK(swap[l1] == l2);
        CHECK(swap[l2] == l1);

        const Geometry a3("A3", true);
        for (int x = 0; x < a3.f.w->order(); ++x) {
            const auto perm = aut_action_on_halfspaces(*a3.f.g, *a3.f.w, a3.hs, x, 0);
            for (std::size_t k = 0; k < perm.size(); ++k)
                CHECK(a3.hs[perm[k]].normal == a3.f.w->act(x, a3.hs[k].normal));
        }

        const Geometry d4("D4", false);
        std::set<std::uint64_t> orders;
        for (int gamma : d4.f.g->preserving_automorphisms())
            orders.insert(permutation_order(aut_action_on_halfspaces(*d4.f.g, *d4.f.w, d4.hs, 0, gamma)));
        CHECK(orders.contains(3));
    }

    TEST_CASE("non-invariant building sets are rejected") {
        const RootSystem rs = build_root_system("A1^3");
        const WeylGroup w(rs);
        std::vector<Flat> family;
        for (const auto& f : all_flats(rs))
            if (f.dim == 1 || f.dim == 3 || f.roots == fundamental_flat(rs, m({1, 2})).roots) family.push_back(f);
        const BuildingSet g = validate_building_set(rs, w, family);
        const auto eps = suitable_list(g, 1).eps;
        const HalfSpaceSystem hs(g, w, eps);
        const auto autos = diagram_automorphisms(rs);
        int moved = -1;
        for (std::size_t k = 0; k < autos.size(); ++k)
            if (autos[k].perm[2] != 2) moved = static_cast<int>(k);
        REQUIRE(moved >= 0);
        CHECK_THROWS_AS(aut_action_on_halfspaces(g, w, hs, 0, moved), BuildingNotInvariant);
    }

    TEST_CASE("permutation order") {
        CHECK(permutation_order({0, 1, 2}) == 1);
        CHECK(permutation_order({1, 2, 0, 4, 3}) == 6);
    }
}
