#include <functional>
#include <random>

#include "doctest.h"
#include "ptdt/boundary.hpp"
#include "ptdt/errors.hpp"
#include "ptdt/series.hpp"

using namespace ptdt;

namespace {

HalfInteger H(int doubled) { return HalfInteger::from_doubled(doubled); }
HalfInteger I(int n) { return HalfInteger::from_int(n); }

TruncatedSeries from_ints(std::vector<int> cs, HalfInteger bound) {
    TruncatedSeries s(bound);
    for (std::size_t k = 0; k < cs.size(); ++k) s.add_term(I(static_cast<int>(k)), cs[k]);
    return s;
}

std::vector<Coefficient> ints(std::vector<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("series arithmetic") {
    auto one = TruncatedSeries::one(I(2));
    auto a = from_ints({1, 1}, I(2));
    CHECK(series_mul(one, a) == a);
    CHECK(series_mul(a, a) == from_ints({1, 2, 1}, I(2)));
    TruncatedSeries p(I(2)), m(I(2));
    p.add_term(I(0), 1);
    p.add_term(H(1), 1);
    m.add_term(I(0), 1);
    m.add_term(H(1), -1);
    CHECK(series_mul(p, m) == from_ints({1, -1}, I(2)));
    CHECK(series_mul(from_ints({1, 1, 1}, I(2)), from_ints({1, 1}, I(1))).bound() == I(1));
    CHECK(from_ints({1, 0, 3}, I(2)).to_string() == "1 + 3q^{2}");
    CHECK(p.to_string() == "1 + q^{1/2}");
}

TEST_CASE("geometric series") {
    CHECK(geometric(I(1), I(3)) == from_ints({1, 1, 1, 1}, I(3)));
    auto g = geometric(H(1), I(1));
    CHECK(g.terms().size() == 3);
    CHECK(g.coefficient(H(1)) == 1);
    CHECK(geometric(I(4), I(3)) == TruncatedSeries::one(I(3)));
    CHECK_THROWS_AS(geometric(I(0), I(3)), domain_error);
}

TEST_CASE("gamma_apply") {
    StateVector s{{Partition{}, TruncatedSeries::one(I(1))}};
    auto up = gamma_apply(s, +1, H(1), I(1));
    CHECK(up.size() == 3);
    CHECK(up.at(Partition{}) == TruncatedSeries::one(I(1)));
    CHECK(up.at(Partition({1})) == TruncatedSeries::monomial(H(1), 1, I(1)));
    CHECK(up.at(Partition({2})) == TruncatedSeries::monomial(I(1), 1, I(1)));

    StateVector t{{Partition({1}), TruncatedSeries::one(I(1))}};
    auto down = gamma_apply(t, -1, H(1), I(1));
    CHECK(down.size() == 2);
    CHECK(down.at(Partition({1})) == TruncatedSeries::one(I(1)));
    CHECK(down.at(Partition{}) == TruncatedSeries::monomial(H(1), 1, I(1)));
    CHECK_THROWS_AS(gamma_apply(s, +1, I(0), I(1)), convergence_error);
}

TEST_CASE("evaluate small words") {
    OperatorWord empty;
    CHECK(evaluate(empty, I(3)) == TruncatedSeries::one(I(3)));
    empty.bra = Partition({1});
    CHECK(evaluate(empty, I(3)).is_zero());

    OperatorWord w{{{-1, H(1)}, {+1, H(1)}}, {}, {}};
    CHECK(evaluate(w, I(3)) == geometric(I(1), I(3)));

    OperatorWord bad{{{-1, I(1)}, {+1, I(-1)}}, {}, {}};
    CHECK_THROWS_AS(evaluate(bad, I(3)), convergence_error);
}

TEST_CASE("MacMahon word and hook product") {
    Shape empty{ShapeKind::one_leg, {}, {}};
    auto m = evaluate_shape(empty, I(6));
    CHECK(m.integer_coefficients() == ints({1, 1, 3, 6, 13, 24, 48}));
    CHECK(hook_product(ProductRegion::plane, {}, I(6)) == m);
    CHECK(hook_product(ProductRegion::plane, {}, I(0)) == TruncatedSeries::one(I(0)));
    Shape two{ShapeKind::two_leg_spp, {}, {}};
    CHECK(evaluate_shape(two, I(6)) == m);
}

TEST_CASE("shape words follow edge signs and powers") {
    Shape s{ShapeKind::one_leg, Partition({4, 2, 1}), {}};
    auto w = shape_word(s, 5);
    REQUIRE(w.ops.size() == 11);
    // ⟨∅| ...Γ_-(q^{9/2})Γ_-(q^{7/2})Γ_+(q^{-5/2})Γ_-(q^{3/2})Γ_+(q^{-1/2})
    //     Γ_-(q^{-1/2})Γ_+(q^{3/2})Γ_+(q^{5/2})Γ_-(q^{-7/2})Γ_+(q^{9/2})... |∅⟩ at n = -5..4
    std::vector<VertexOp> shown{{-1, H(9)},  {-1, H(7)}, {+1, H(-5)}, {-1, H(3)},  {+1, H(-1)},
                                {-1, H(-1)}, {+1, H(3)}, {+1, H(5)},  {-1, H(-7)}, {+1, H(9)}};
    for (int k = 0; k < 10; ++k) CHECK(w.ops[k] == shown[k]);
    for (int n = -5; n <= 5; ++n) {
        CHECK(w.ops[n + 5].sign == edge_sign(s.lambda, n));
        CHECK(w.ops[n + 5].exponent == edge_power(s.lambda, n));
    }
}

TEST_CASE("one-leg series equals the outside hook product") {
    for (auto l : {Partition({1}), Partition({2, 1}), Partition({3, 1})}) {
        auto v = evaluate_shape({ShapeKind::one_leg, l, {}}, I(6));
        CHECK(v == hook_product(ProductRegion::outside, l, I(6)));
    }
}

TEST_CASE("two-leg identity V = M W on a small pair") {
    Partition l{2, 1}, mu{1};
    auto m = hook_product(ProductRegion::plane, {}, I(5));
    auto v = evaluate_shape({ShapeKind::two_leg_spp, l, mu}, I(5));
    auto w = evaluate_shape({ShapeKind::two_leg_rpp, mu, l}, I(5));
    CHECK(v == series_mul(m, w));
}

TEST_CASE("commutation relations on random words") {
    std::mt19937 rng(7);
    const HalfInteger bound = I(8);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> len(2, 8), expo(0, 3), sgn(0, 1);
        OperatorWord w;
        int n = len(rng);
        for (int k = 0; k < n; ++k) w.ops.push_back({sgn(rng) ? 1 : -1, H(2 * expo(rng) + 1)});
        std::uniform_int_distribution<int> pos(0, n - 2);
        int k = pos(rng);
        OperatorWord swapped = w;
        std::swap(swapped.ops[k], swapped.ops[k + 1]);
        auto lhs = evaluate(w, bound);
        auto rhs = evaluate(swapped, bound);
        const VertexOp& a = w.ops[k];
        const VertexOp& b = w.ops[k + 1];
        if (a.sign == b.sign) {
            CHECK(lhs == rhs);
        } else if (a.sign == -1) {
            // Γ_-(a) Γ_+(b) = Γ_+(b) Γ_-(a) / (1 - q^{a+b})
            CHECK(lhs == series_mul(geometric(a.exponent + b.exponent, bound), rhs));
        } else {
            CHECK(rhs == series_mul(geometric(a.exponent + b.exponent, bound), lhs));
        }
    }
}

namespace {

// Σ over chains s_0 = ∅, s_1, ..., s_L = ∅ with the word's interlacing relations of
// Π q^{|s_k|·qweight[k]}; operators carry exponent 0 (Γ_±(1)), so only Q weighs states.
TruncatedSeries chain_sum(const std::vector<int>& signs, const std::vector<int>& qweight, int bound) {
    TruncatedSeries out(I(bound));
    std::vector<Partition> chain{Partition{}};
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int used) {
        if (k == signs.size()) {
            if (chain.back().empty()) out.add_term(I(used), 1);
            return;
        }
        const Partition left = chain.back();
        for (int w = 0; w <= bound; ++w) {
            {
                std::vector<int> cur;
                std::function<void(int, int)> gen = [&](int rem, int cap) {
                    if (rem == 0) {
                        Partition right(cur);
                        bool ok = signs[k] == +1 ? interlaces(left, right) : interlaces(right, left);
                        int cost = static_cast<int>(right.weight()) * qweight[k + 1];
                        if (ok && used + cost <= bound) {
                            chain.push_back(right);
                            rec(k + 1, used + cost);
                            chain.pop_back();
                        }
                        return;
                    }
                    for (int p = std::min(rem, cap); p >= 1; --p) {
                        cur.push_back(p);
                        gen(rem - p, p);
                        cur.pop_back();
                    }
                };
                gen(w, w);
            }
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

TEST_CASE("weighing operators commute outward") {
    // ⟨∅| Π_{k<=N} (Q Γ_-(1)) Q Π_{k<=N} (Γ_+(1) Q) |∅⟩ against the Q-free word
    // Γ_-(q^{N-1/2})...Γ_-(q^{1/2}) Γ_+(q^{1/2})...Γ_+(q^{N-1/2}).
    const int bound = 8;
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> signs;
        for (int k = 0; k < n; ++k) signs.push_back(-1);
        for (int k = 0; k < n; ++k) signs.push_back(+1);
        // A Q sits between every pair of neighbouring operators and at both ends.
        std::vector<int> qweight(2 * n + 1, 1);
        OperatorWord shifted;
        for (int k = n; k >= 1; --k) shifted.ops.push_back({-1, H(2 * k - 1)});
        for (int k = 1; k <= n; ++k) shifted.ops.push_back({+1, H(2 * k - 1)});
        CHECK(chain_sum(signs, qweight, bound) == evaluate(shifted, I(bound)));
    }
}
