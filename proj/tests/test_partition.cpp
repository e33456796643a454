#include <set>

#include "doctest.h"
#include "ptdt/errors.hpp"
#include "ptdt/half_integer.hpp"
#include "ptdt/partition.hpp"
#include "support.hpp"

using namespace ptdt;

TEST_CASE("partition construction strips zeros and rejects increasing parts") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({0}).empty());
    CHECK_THROWS_AS(Partition({1, 2}), domain_error);
    CHECK_THROWS_AS(Partition({2, -1}), domain_error);
    CHECK(Partition({4, 2, 1}).weight() == 7);
    CHECK(Partition({4, 2, 1}).part(4) == 0);
    CHECK(Partition::parse("4,2,1") == Partition({4, 2, 1}));
    CHECK(Partition::parse("") == Partition{});
}

TEST_CASE("half integers") {
    CHECK(HalfInteger::parse("13/2").doubled == 13);
    CHECK(HalfInteger::parse("6").doubled == 12);
    CHECK(HalfInteger::parse("-1/2").doubled == -1);
    CHECK(HalfInteger::parse("2.5").doubled == 5);
    CHECK(HalfInteger::parse("-0.5").doubled == -1);
    CHECK(HalfInteger::from_doubled(-3).to_string() == "-3/2");
    CHECK(HalfInteger::from_doubled(-3).floor() == -2);
    CHECK(HalfInteger::from_doubled(-3).ceil() == -1);
    CHECK(HalfInteger::from_doubled(7).ceil() == 4);
    CHECK_THROWS_AS(HalfInteger::parse("1/3"), domain_error);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
    CHECK(conjugate(Partition({5, 3, 1, 1})) == Partition({4, 2, 2, 1, 1}));
    for (const auto& p : testing::partitions_up_to(12)) REQUIRE(conjugate(conjugate(p)) == p);
}

TEST_CASE("interlacing") {
    CHECK(interlaces(Partition({5, 3, 1, 1}), Partition({3, 2, 1})));
    CHECK(interlaces(Partition({2, 1}), Partition({2, 1})));
    CHECK_FALSE(interlaces(Partition({1}), Partition({2})));
    CHECK_FALSE(interlaces(Partition({3, 1}), Partition({2, 2})));
}

TEST_CASE("interlacing chains place as a plane partition") {
    // Diagonals d = -1, 0, 1 as λ ≺ ν ≻ µ; check every row/column inequality directly.
    auto parts = testing::partitions_in_box(3, 3);
    for (const auto& nu : parts) {
        for (const auto& lam : parts) {
            if (!interlaces(nu, lam)) continue;
            for (const auto& mu : parts) {
                if (!interlaces(nu, mu)) continue;
                auto value = [&](int i, int j) {
                    int d = j - i;
                    int k = std::min(i, j);
                    if (d == 0) return nu.part(k);
                    if (d == -1) return lam.part(k);
                    if (d == 1) return mu.part(k);
                    return 0;
                };
                for (int i = 1; i <= 5; ++i)
                    for (int j = 1; j <= 5; ++j) {
                        if (std::abs(i - j) > 1) continue;
                        REQUIRE(value(i, j) >= value(i + 1, j));
                        REQUIRE(value(i, j) >= value(i, j + 1));
                    }
            }
        }
    }
}

TEST_CASE("hook lengths") {
    Partition l{4, 2, 1};
    CHECK(hook_length(l, {1, 2}, HookRegion::inside) == 4);
    CHECK(hook_length(l, {5, 2}, HookRegion::outside) == 4);
    CHECK(hook_length(Partition{}, {1, 1}, HookRegion::outside) == 1);
    CHECK(hook_length(Partition{}, {3, 4}, HookRegion::outside) == 6);
    CHECK_THROWS_AS(hook_length(l, {1, 2}, HookRegion::outside), domain_error);
    CHECK_THROWS_AS(hook_length(l, {1, 5}, HookRegion::inside), domain_error);
}

TEST_CASE("hook lengths agree with explicit arm and leg sets") {
    for (const auto& l : testing::partitions_up_to(10)) {
        for (int i = 1; i <= 8; ++i)
            for (int j = 1; j <= 8; ++j) {
                Cell c{i, j};
                std::set<Cell> hook{c};
                if (contains(l, c)) {
                    for (int jj = j + 1; contains(l, {i, jj}); ++jj) hook.insert({i, jj});
                    for (int ii = i + 1; contains(l, {ii, j}); ++ii) hook.insert({ii, j});
                    REQUIRE(hook_length(l, c, HookRegion::inside) == static_cast<int>(hook.size()));
                } else {
                    for (int jj = j - 1; jj >= 1 && !contains(l, {i, jj}); --jj) hook.insert({i, jj});
                    for (int ii = i - 1; ii >= 1 && !contains(l, {ii, j}); --ii) hook.insert({ii, j});
                    REQUIRE(hook_length(l, c, HookRegion::outside) == static_cast<int>(hook.size()));
                }
            }
    }
}

TEST_CASE("outer corners") {
    CHECK(outer_corners(Partition{}) == std::vector<Cell>{{1, 1}});
    CHECK(outer_corners(Partition({2, 1})) == std::vector<Cell>{{3, 1}, {2, 2}, {1, 3}});
    CHECK(outer_corners(Partition({4, 2, 1})) == std::vector<Cell>{{4, 1}, {3, 2}, {2, 3}, {1, 5}});
    for (const auto& l : testing::partitions_up_to(10)) {
        auto cs = outer_corners(l);
        std::set<int> distinct(l.parts().begin(), l.parts().end());
        REQUIRE(cs.size() == distinct.size() + 1);
        for (std::size_t a = 0; a < cs.size(); ++a) {
            REQUIRE_FALSE(contains(l, cs[a]));
            for (std::size_t b = 0; b < cs.size(); ++b) {
                if (a == b) continue;
                bool below = cs[a].row <= cs[b].row && cs[a].col <= cs[b].col;
                REQUIRE_FALSE(below);
            }
        }
    }
}

TEST_CASE("adding and removing corners") {
    Partition l{2, 1};
    CHECK(add_cell(l, {1, 3}) == Partition({3, 1}));
    CHECK(add_cell(l, {3, 1}) == Partition({2, 1, 1}));
    CHECK(remove_cell(l, {2, 1}) == Partition({2}));
    CHECK_THROWS_AS(remove_cell(l, {1, 1}), domain_error);
    CHECK_THROWS_AS(add_cell(l, {2, 3}), domain_error);
}
