#include <doctest.h>

#include <set>

#include "pnh/error.hpp"
#include "support.hpp"

using namespace testing_support;

TEST_SUITE("weyl") {
    TEST_CASE("group orders") {
        const std::vector<std::pair<std::string, int>> cases = {
            {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"C3", 48}, {"D4", 192}, {"A1^3", 8}, {"A4", 120}};
        for (const auto& [type, order] : cases) {
            CAPTURE(type);
            const RootSystem rs = build_root_system(std::string_view(type));
            const WeylGroup w(rs);
            CHECK(w.order() == order);
            int longest = 0;
            for (int g = 0; g < w.order(); ++g) longest = std::max(longest, w.length(g));
            CHECK(longest == rs.num_positive_roots());
        }
    }

    TEST_CASE("elements are isometries and the table is consistent") {
        const RootSystem rs = build_root_system("B3");
        const WeylGroup w(rs);
        const Mat gram = rs.gram();
        for (int g = 0; g < w.order(); ++g) {
            const Mat mg = w.matrix(g).to_rational();
            CHECK(mg.transpose() * gram * mg == gram);
            CHECK(w.multiply(g, w.inverse(g)) == w.identity());
            CHECK(w.find(w.matrix(g)) == g);
        }
        for (int g = 0; g < w.order(); g += 5)
            for (int h = 0; h < w.order(); h += 7) CHECK(w.matrix(w.multiply(g, h)) == w.matrix(g) * w.matrix(h));
    }

    TEST_CASE("the cap is enforced") {
        const RootSystem rs = build_root_system("B6");
        CHECK_THROWS_AS(WeylGroup(rs, 1000), GroupTooLarge);
    }

    TEST_CASE("parabolic subgroups of A3") {
        const RootSystem rs = build_root_system("A3");
        const WeylGroup w(rs);
        CHECK(w.standard_parabolic(m({1})).order() == 2);
        CHECK(w.standard_parabolic(m({1, 2})).order() == 6);
        CHECK(w.standard_parabolic(m({1, 3})).order() == 4);
        CHECK(coset_index(w, w.standard_parabolic(m({1}))) == 12);
        CHECK(coset_index(w, w.standard_parabolic(m({1, 2}))) == 4);
        CHECK(coset_index(w, w.standard_parabolic(0)) == 24);
        const auto general = parabolic_subgroup(w, fundamental_flat(rs, m({1, 2})).roots);
        CHECK(general.members == w.standard_parabolic(m({1, 2})).members);
    }

    TEST_CASE("canonical coset representatives") {
        const RootSystem rs = build_root_system("A3");
        const WeylGroup w(rs);
        const auto& h = w.standard_parabolic(m({1, 3}));
        const auto& trivial = w.standard_parabolic(0);
        std::set<int> reps;
        for (int g = 0; g < w.order(); ++g) {
            CHECK(w.canonical_coset_rep(g, trivial) == g);
            reps.insert(h.coset_rep[g]);
            for (int x : h.members) CHECK(h.coset_rep[w.multiply(g, x)] == h.coset_rep[g]);
        }
        CHECK(reps.size() == 6);
        for (int x : h.members) CHECK(h.coset_rep[x] == h.coset_rep[w.identity()]);
    }

    TEST_CASE("actions") {
        const RootSystem rs = build_root_system("A2");
        const WeylGroup w(rs);
        const Vec a1{q(1), q(0)};
        const Vec w2 = fundamental_weights(rs)[1];
        CHECK(w.act(w.identity(), a1) == a1);
        CHECK(w.act(w.generator(0), a1) == -a1);
        CHECK(w.act(w.generator(0), w2) == w2);
    }

    TEST_CASE("conjugation by a diagram automorphism") {
        const RootSystem rs = build_root_system("A3");
        const WeylGroup w(rs);
        const auto autos = diagram_automorphisms(rs);
        const auto& gamma = autos[1];
        for (int g = 0; g < w.order(); ++g) {
            const IntMat expected = gamma.matrix * w.matrix(g) * gamma.matrix;
            CHECK(w.matrix(w.conjugate(g, gamma)) == expected);
        }
    }
}
