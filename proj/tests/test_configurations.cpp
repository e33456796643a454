#include "doctest.h"
#include "figures.hpp"
#include "ptdt/configurations.hpp"
#include "ptdt/errors.hpp"
#include "ptdt/series.hpp"
#include "support.hpp"

using namespace ptdt;

namespace {
HalfInteger I(int n) { return HalfInteger::from_int(n); }
}  // namespace

TEST_CASE("plane partition diagonals and weight") {
    auto p = figures::weight31();
    validate(p);
    CHECK(weight(p) == I(31));
    // Entries (1,1), (2,2) are 5 and 4; (3,3) is empty in the printed grid.
    CHECK(diagonal(p, 0) == Partition({5, 4}));
    CHECK(diagonal(p, 1) == Partition({4, 2}));
    CHECK(diagonal(p, -2) == Partition({2, 1}));
    CHECK(diagonal(p, 9) == Partition{});

    // (5,3,1,1) on diagonal 0 next to (3,2,1) on diagonal 1.
    PlanePartition placed;
    Partition d0{5, 3, 1, 1}, d1{3, 2, 1};
    for (int k = 1; k <= d0.length(); ++k) placed.entries[{k, k}] = d0.part(k);
    for (int k = 1; k <= d1.length(); ++k) placed.entries[{k, k + 1}] = d1.part(k);
    CHECK(diagonal(placed, 0) == d0);
    CHECK(diagonal(placed, 1) == d1);
}

TEST_CASE("validation rejects broken inequalities") {
    CHECK_THROWS_AS(validate(PlanePartition::from_rows({{1, 2}})), domain_error);
    CHECK_THROWS_AS(validate(OneLegSPP{Partition({1}), {{{1, 1}, 1}}}), domain_error);
    CHECK_THROWS_AS(validate(OneLegRPP{Partition({2}), {{{1, 1}, 2}, {{1, 2}, 1}}}), domain_error);
    CHECK_THROWS_AS(validate(TwoLegSPP{Partition({1}), Partition{}, {{{2, 2}, 1}}}), domain_error);
    CHECK_THROWS_AS(validate(TwoLegRPP{Partition({1}), Partition({1}), {{{0, 0}, 1}}}), domain_error);
    CHECK_THROWS_AS(validate(TwoLegRPP{Partition({1}), Partition({1}), {{{1, 1}, 2}}}), domain_error);
    CHECK_NOTHROW(validate(figures::one_leg_sigma()));
    CHECK_NOTHROW(validate(figures::two_leg_weight11()));
    CHECK_NOTHROW(validate(figures::two_leg_weight16()));
    CHECK_NOTHROW(validate(figures::two_leg_rpp_example()));
}

TEST_CASE("two-leg weights measured by the operator word") {
    CHECK(minimal_config(TwoLegKind::spp, Partition({2, 2}), Partition({3, 1})).weight == I(1));
    CHECK(minimal_config(TwoLegKind::rpp, Partition({3, 1}), Partition({2, 2})).weight == I(1));
    CHECK(minimal_config(TwoLegKind::spp, {}, {}).weight == I(0));
    CHECK(weight(figures::two_leg_weight11()) == I(11));
    CHECK(weight(figures::two_leg_weight16()) == I(16));
    CHECK(weight(figures::two_leg_rho()) == I(3));
    // Deficits sum to 7 on top of a minimal weight of 1.
    CHECK(weight(figures::two_leg_rpp_example()) == I(8));
    CHECK(weight(OneLegSPP{Partition({3}), {}}) == I(0));
    // The literal minimal exponent for legs ((1), ∅).
    CHECK(minimal_weight_spp(Partition({1}), {}) == HalfInteger::from_doubled(1));
}

TEST_CASE("two-leg diagonals approach the legs") {
    auto s = figures::two_leg_weight11();
    // λ = (2,2) indexes columns, so far-left diagonals read λ and far-right ones read µ.
    CHECK(diagonal(s, -8) == s.lambda);
    CHECK(diagonal(s, 8) == s.mu);
    CHECK(diagonal(s, 0) == Partition({5, 3, 1}));
    auto r = figures::two_leg_rpp_example();
    CHECK(diagonal(r, -8) == r.mu);
    CHECK(diagonal(r, 8) == r.lambda);
}

TEST_CASE("word exponent of every diagonal equals the weight") {
    auto check_spp = [](const TwoLegSPP& s) {
        Shape shape{ShapeKind::two_leg_spp, s.lambda, s.mu};
        int cutoff = support_window(s).hi + 2;
        auto word = shape_word(shape, cutoff);
        std::vector<Partition> states;
        for (int d = -cutoff; d <= cutoff + 1; ++d) states.push_back(diagonal(s, d));
        CHECK(word_exponent(word, states) == weight(s));
    };
    check_spp(figures::two_leg_weight11());
    check_spp(figures::two_leg_weight16());
    auto r = figures::two_leg_rpp_example();
    Shape shape{ShapeKind::two_leg_rpp, r.lambda, r.mu};
    int cutoff = support_window(r).hi + 2;
    std::vector<Partition> states;
    for (int d = -cutoff; d <= cutoff + 1; ++d) states.push_back(diagonal(r, d));
    CHECK(word_exponent(shape_word(shape, cutoff), states) == weight(r));
}

TEST_CASE("minimal weight is the lowest exponent of the series") {
    auto parts = testing::partitions_up_to(3);
    for (const auto& l : parts)
        for (const auto& mu : parts) {
            auto v = evaluate_shape({ShapeKind::two_leg_spp, l, mu}, minimal_weight_spp(l, mu) + I(1));
            REQUIRE(v.lowest() == minimal_weight_spp(l, mu));
            REQUIRE(v.coefficient(*v.lowest()) == 1);
            auto w = evaluate_shape({ShapeKind::two_leg_rpp, l, mu}, minimal_weight_rpp(l, mu) + I(1));
            REQUIRE(w.lowest() == minimal_weight_rpp(l, mu));
        }
}

TEST_CASE("transpose") {
    auto r = figures::two_leg_rpp_example();
    auto t = transpose(r);
    CHECK(t.lambda == r.mu);
    CHECK(t.mu == r.lambda);
    CHECK(transpose(t) == r);
    CHECK(weight(t) == weight(r));
    validate(t);
    auto m = std::get<TwoLegRPP>(minimal_config(TwoLegKind::rpp, Partition({2}), Partition({1, 1})).config);
    CHECK(transpose(m) == std::get<TwoLegRPP>(minimal_config(TwoLegKind::rpp, Partition({1, 1}), Partition({2})).config));
}

TEST_CASE("hook tableau weights") {
    HookTableau t{TableauRegion::outside, Partition({2, 1}),
                  {{{1, 3}, 1}, {{2, 2}, 1}, {{2, 3}, 2}, {{3, 1}, 2}, {{3, 2}, 3}}};
    CHECK(weight(t) == I(19));
    CHECK_THROWS_AS(diagonal(Configuration{t}, 0), domain_error);
}
