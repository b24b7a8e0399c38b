#include <doctest.h>

#include <set>

#include "pnh/error.hpp"
#include "support.hpp"

using namespace testing_support;

TEST_SUITE("halfspaces") {
    TEST_CASE("projections") {
        const RootSystem a2 = build_root_system("A2");
        const FlatData line = flat_data(a2, fundamental_flat(a2, m({1})));
        CHECK(line.pi == Vec{q(1, 2), q(0)});
        CHECK(line.delta_perp == Vec{q(1, 2), q(1)});
        CHECK(line.delta_perp == q(3, 2) * fundamental_weights(a2)[1]);
        const FlatData whole = flat_data(a2, whole_space(a2));
        CHECK(whole.pi == a2.delta());
        CHECK(whole.delta_perp == a2.delta());

        const RootSystem a3 = build_root_system("A3");
        CHECK(flat_data(a3, fundamental_flat(a3, m({1, 3}))).pi == Vec{q(1, 2), q(0), q(1, 2)});
    }

    TEST_CASE("projection is orthogonal to the flat") {
        for (const char* type : {"B3", "C3", "D4"}) {
            const Fixture f(type, true);
            for (SimpleMask mask : f.g->all_fund_masks()) {
                if (mask == f.g->full_mask()) continue;
                const FlatData d = flat_data(f.rs, fundamental_flat(f.rs, mask));
                for (int i = 0; i < f.rs.rank(); ++i)
                    if ((mask >> i) & 1U) CHECK(f.rs.inner(d.delta_perp, Vec::unit(f.rs.rank(), i)) == 0);
            }
        }
    }

    TEST_CASE("ratios and suitable lists") {
        const Fixture a2("A2", false);
        CHECK(ratio_table(*a2.g).at(2, 1) == 2);
        CHECK(a2.eps == std::vector<Rat>{q(1, 5), q(1)});
        CHECK_FALSE(suitability_violation(*a2.g, a2.eps));

        const Fixture a11("A1^2", false);
        for (const auto& [key, r] : ratio_table(*a11.g).pairs) CHECK(r == 1);
        CHECK(a11.eps == std::vector<Rat>{q(1, 3), q(1)});

        const Fixture a3("A3", true);
        const auto sl = suitable_list(*a3.g, q(7, 2));
        CHECK(sl.eps.back() == q(7, 2));
        for (std::size_t i = 1; i < sl.eps.size(); ++i)
            CHECK(sl.eps[i] > 2 * ratio_table(*a3.g).at(static_cast<int>(i) + 1, static_cast<int>(i)) * sl.eps[i - 1]);
    }

    TEST_CASE("the epsilon inequality") {
        const Fixture a2("A2", false);
        const auto rep = verify_epsilon_lemma(*a2.g, a2.eps);
        REQUIRE(rep.instances.size() == 1);
        CHECK(rep.instances[0].lhs == 1);
        CHECK(rep.instances[0].rhs == q(4, 5));
        const std::vector<Rat> bad{q(1, 3), q(1)};
        CHECK(suitability_violation(*a2.g, bad));
        CHECK_THROWS_AS(verify_epsilon_lemma(*a2.g, bad), LemmaViolated);
        try {
            verify_epsilon_lemma(*a2.g, bad);
        } catch (const LemmaViolated& e) {
            CHECK(std::string(e.what()).find("4/3") != std::string::npos);
        }

        const Fixture b3("B3", true);
        CHECK(verify_epsilon_lemma(*b3.g, b3.eps).checked > 0);
    }

    TEST_CASE("half-space counts by orbit-stabilizer") {
        const std::vector<std::tuple<std::string, bool, std::size_t>> cases = {
            {"A1", false, 2}, {"A2", false, 12}, {"B2", false, 16}, {"A3", false, 74}, {"A3", true, 74}};
        for (const auto& [type, maximal, count] : cases) {
            CAPTURE(type);
            const Fixture f(type, maximal);
            const HalfSpaceSystem hs(*f.g, *f.w, f.eps);
            CHECK(hs.size() == count);
            // brute force: apply every group element to every fundamental half-space
            std::set<std::pair<std::vector<Rat>, Rat>> distinct;
            for (const auto& h : hs.fundamental())
                for (int x = 0; x < f.w->order(); ++x) {
                    const Vec n = f.w->act(x, h.normal);
                    distinct.insert({n.coords(), h.offset});
                }
            CHECK(distinct.size() == count);
            for (const auto& h : hs.all()) CHECK(h.offset > 0);
        }
    }

    TEST_CASE("stabilizers are parabolic") {
        const Fixture f("A3", false);
        const HalfSpaceSystem hs(*f.g, *f.w, f.eps);
        for (std::size_t k = 0; k < hs.fundamental().size(); ++k) {
            const auto& h = hs.fundamental()[k];
            const auto& p = f.w->standard_parabolic(hs.stabilizer_mask(static_cast<int>(k)));
            for (int x = 0; x < f.w->order(); ++x) CHECK((f.w->act(x, h.normal) == h.normal) == p.contains(x));
        }
    }

    TEST_CASE("lookups") {
        const Fixture f("B3", false);
        const HalfSpaceSystem hs(*f.g, *f.w, f.eps);
        for (std::size_t k = 0; k < hs.size(); ++k) {
            CHECK(hs.lookup(hs[k].normal, hs[k].offset) == static_cast<int>(k));
            CHECK(hs.lookup(q(3) * hs[k].normal, q(3) * hs[k].offset) == static_cast<int>(k));
        }
        CHECK(hs.lookup(f.rs.delta(), q(12345)) == -1);
    }

    TEST_CASE("non-redundant decompositions") {
        const std::vector<SimpleMask> parts{m({1}), m({2}), m({1, 2})};
        const auto d = non_redundant_decompositions(m({1, 2, 3}), std::vector<SimpleMask>{m({1}), m({2, 3}), m({1, 2})});
        CHECK(d.size() == 2);
        CHECK(non_redundant_decompositions(m({1, 2}), parts).size() == 1);
    }
}
