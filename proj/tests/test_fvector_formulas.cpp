#include <doctest.h>

#include "pnh/error.hpp"
#include "pnh/fvector_formulas.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

// Brackets placed on a word of length l: count sets of k nested or disjoint
// proper intervals of length >= 2, by recursion on the outermost brackets.
Int brute_parenthesizations(int l, int k) {
    std::vector<std::pair<int, int>> intervals;
    for (int a = 0; a < l; ++a)
        for (int b = a + 2; b <= l; ++b)
            if (b - a < l) intervals.emplace_back(a, b);
    Int count = 0;
    std::vector<std::pair<int, int>> chosen;
    auto compatible = [](std::pair<int, int> x, std::pair<int, int> y) {
        const bool disjoint = x.second <= y.first || y.second <= x.first;
        const bool nested = (x.first <= y.first && y.second <= x.second) || (y.first <= x.first && x.second <= y.second);
        return disjoint || nested;
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            ++count;
            return;
        }
        for (std::size_t i = from; i < intervals.size(); ++i) {
            bool ok = true;
            for (const auto& c : chosen) ok = ok && compatible(c, intervals[i]);
            if (!ok) continue;
            chosen.push_back(intervals[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

Int catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace

TEST_SUITE("fvector_formulas") {
    TEST_CASE("partitions") {
        const auto p4 = partitions(4);
        CHECK(p4.size() == 5);
        for (const auto& p : p4) {
            if (p.parts == std::vector<int>{2, 1, 1}) CHECK(p.weight == 3);
            if (p.parts == std::vector<int>{2, 2}) CHECK(p.weight == 1);
        }
        const auto p1 = partitions(1);
        REQUIRE(p1.size() == 1);
        CHECK(p1[0].parts == std::vector<int>{1});
        CHECK(p1[0].weight == 1);
        CHECK(partitions(10).size() == 42);
        CHECK(partitions(20).size() == 627);
    }

    TEST_CASE("parenthesization counts") {
        CHECK(cayley_count(4, 1) == 5);
        CHECK(cayley_count(4, 2) == 5);
        CHECK(cayley_count(7, 0) == 1);
        for (int l = 2; l <= 8; ++l) {
            CHECK(cayley_count(l, l - 2) == catalan(l - 1));
            for (int k = 0; k <= l - 2; ++k) CHECK(cayley_count(l, k) == brute_parenthesizations(l, k));
        }
        CHECK_THROWS_AS(cayley_count(3, 2), OutOfRange);
        CHECK_THROWS_AS(cayley_count(3, -1), OutOfRange);
    }

    TEST_CASE("closed forms for n = 4") {
        CHECK(minimal_face_count(4, 0) == 74);
        CHECK(minimal_face_count(4, 1) == 192);
        CHECK(minimal_face_count(4, 2) == 120);
        CHECK(maximal_face_count(4, 0) == 74);
        CHECK(maximal_face_count(4, 1) == 216);
        CHECK(maximal_face_count(4, 2) == 144);
        CHECK_THROWS_AS(minimal_face_count(4, 3), OutOfRange);
        CHECK_THROWS_AS(maximal_face_count(1, 0), OutOfRange);
    }

    TEST_CASE("vertex counts factor through nested sets") {
        for (int n = 2; n <= 7; ++n) {
            CHECK(minimal_face_count(n, n - 2) == catalan(n - 1) * factorial(n));
            CHECK(maximal_face_count(n, n - 2) == factorial(n - 1) * factorial(n));
        }
    }

    TEST_CASE("the segment") {
        CHECK(minimal_face_count(2, 0) == 2);
        CHECK(maximal_face_count(2, 0) == 2);
        const Fixture f("A1", false);
        CHECK(FacePoset(*f.g, *f.w).f_vector()[0] == 2);
    }

    TEST_CASE("closed forms equal enumeration") {
        for (int n = 3; n <= 5; ++n)
            for (bool maximal : {false, true}) {
                const Fixture f("A" + std::to_string(n - 1), maximal);
                const auto fv = FacePoset(*f.g, *f.w).f_vector();
                for (int k = 0; k <= n - 2; ++k) {
                    const int dim = n - 2 - k;
                    CHECK(fv[dim] == (maximal ? maximal_face_count(n, k) : minimal_face_count(n, k)));
                }
            }
    }
}
