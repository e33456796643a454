#include "ptdt/series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ptdt/boundary.hpp"
#include "ptdt/errors.hpp"

namespace ptdt {

TruncatedSeries TruncatedSeries::monomial(HalfInteger exponent, const Coefficient& c, HalfInteger bound) {
    TruncatedSeries s(bound);
    s.add_term(exponent, c);
    return s;
}

Coefficient TruncatedSeries::coefficient(HalfInteger exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

std::optional<HalfInteger> TruncatedSeries::lowest() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

void TruncatedSeries::add_term(HalfInteger exponent, const Coefficient& c) {
    if (exponent > bound_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::shifted(HalfInteger by) const {
    TruncatedSeries out(bound_);
    for (const auto& [e, c] : terms_) {
        if (e + by > bound_) break;
        out.terms_.emplace_hint(out.terms_.end(), e + by, c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(HalfInteger bound) const {
    TruncatedSeries out(bound);
    for (const auto& [e, c] : terms_) {
        if (e > bound) break;
        out.terms_.emplace_hint(out.terms_.end(), e, c);
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    bound_ = std::min(bound_, o.bound_);
    while (!terms_.empty() && std::prev(terms_.end())->first > bound_) terms_.erase(std::prev(terms_.end()));
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    bound_ = std::min(bound_, o.bound_);
    while (!terms_.empty() && std::prev(terms_.end())->first > bound_) terms_.erase(std::prev(terms_.end()));
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

std::vector<Coefficient> TruncatedSeries::integer_coefficients() const {
    if (bound_.doubled < 0) return {};
    std::vector<Coefficient> out(static_cast<std::size_t>(bound_.floor()) + 1, 0);
    for (const auto& [e, c] : terms_) {
        if (!e.is_integer() || e.doubled < 0)
            throw domain_error("series has a term at q^" + e.to_string());
        out[static_cast<std::size_t>(e.floor())] = c;
    }
    return out;
}

std::string TruncatedSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coefficient mag = c < 0 ? Coefficient(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e.doubled == 0) {
            out << mag;
            continue;
        }
        if (mag != 1) out << mag;
        out << "q";
        if (e.doubled != 2) out << "^{" << e.to_string() << "}";
    }
    return out.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.bound(), b.bound()));
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
    return out;
}

TruncatedSeries geometric(HalfInteger a, HalfInteger bound) {
    if (a.doubled <= 0) throw domain_error("geometric series needs a positive exponent, got " + a.to_string());
    TruncatedSeries out(bound);
    for (HalfInteger e{}; e <= bound; e += a) out.add_term(e, 1);
    return out;
}

namespace {

using Visit = std::function<void(const Partition&)>;

// Every t ≻ s with |t| <= max_weight.
void for_each_larger(const Partition& s, std::int64_t max_weight, const Visit& visit) {
    const int len = s.length() + 1;
    std::vector<std::int64_t> tail_min(len + 2, 0);  // Σ_{k >= i} s_k
    for (int i = len; i >= 1; --i) tail_min[i] = tail_min[i + 1] + s.part(i);
    std::vector<int> t(len, 0);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t used) {
        if (i > len) {
            visit(Partition(t));
            return;
        }
        std::int64_t lo = s.part(i);
        std::int64_t hi = i == 1 ? max_weight - used - tail_min[2] : s.part(i - 1);
        hi = std::min(hi, max_weight - used - tail_min[i + 1]);
        for (std::int64_t v = lo; v <= hi; ++v) {
            t[i - 1] = static_cast<int>(v);
            rec(i + 1, used + v);
        }
    };
    if (s.weight() <= max_weight) rec(1, 0);
}

// Every t ≺ s with |t| <= max_weight.
void for_each_smaller(const Partition& s, std::int64_t max_weight, const Visit& visit) {
    const int len = s.length();
    std::vector<std::int64_t> tail_min(len + 2, 0);  // Σ_{k >= i} s_{k+1}
    for (int i = len; i >= 1; --i) tail_min[i] = tail_min[i + 1] + s.part(i + 1);
    std::vector<int> t(len, 0);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t used) {
        if (i > len) {
            visit(Partition(t));
            return;
        }
        std::int64_t lo = s.part(i + 1);
        std::int64_t hi = std::min<std::int64_t>(s.part(i), max_weight - used - tail_min[i + 1]);
        for (std::int64_t v = lo; v <= hi; ++v) {
            t[i - 1] = static_cast<int>(v);
            rec(i + 1, used + v);
        }
    };
    rec(1, 0);
}

// Largest k with k·unit <= room, for positive unit.
std::int64_t max_multiple(HalfInteger room, HalfInteger unit) {
    if (room.doubled < 0) return -1;
    return room.doubled / unit.doubled;
}

constexpr std::int64_t kUnbounded = std::int64_t{1} << 40;

}  // namespace

StateVector gamma_apply(const StateVector& s, int sign, HalfInteger exponent, HalfInteger bound) {
    if (sign == +1 && exponent.doubled <= 0)
        throw convergence_error("Γ_+(q^" + exponent.to_string() + ") has infinitely many terms below the bound");
    StateVector out;
    for (const auto& [lambda, amp] : s) {
        auto low = amp.lowest();
        if (!low) continue;
        const HalfInteger room = bound - *low;
        const std::int64_t base = lambda.weight();
        auto emit = [&](const Partition& mu) {
            HalfInteger cost = exponent * (sign == +1 ? mu.weight() - base : base - mu.weight());
            TruncatedSeries moved = amp.truncated(bound).shifted(cost);
            if (moved.is_zero()) return;
            auto [it, inserted] = out.try_emplace(mu, moved);
            if (!inserted) it->second += moved;
        };
        if (sign == +1) {
            std::int64_t steps = max_multiple(room, exponent);
            if (steps < 0) continue;
            for_each_larger(lambda, base + steps, emit);
        } else {
            for_each_smaller(lambda, kUnbounded, emit);
        }
    }
    return out;
}

HalfInteger word_exponent(const OperatorWord& word, const std::vector<Partition>& states) {
    if (states.size() != word.ops.size() + 1) throw domain_error("state list must be one longer than the word");
    HalfInteger total{};
    for (std::size_t k = 0; k < word.ops.size(); ++k) {
        const Partition& left = states[k];
        const Partition& right = states[k + 1];
        const VertexOp& op = word.ops[k];
        if (op.sign == +1) {
            if (!interlaces(left, right))
                throw domain_error("states " + left.to_string() + " and " + right.to_string() + " do not satisfy ≻");
            total += op.exponent * (left.weight() - right.weight());
        } else {
            if (!interlaces(right, left))
                throw domain_error("states " + left.to_string() + " and " + right.to_string() + " do not satisfy ≺");
            total += op.exponent * (right.weight() - left.weight());
        }
    }
    return total;
}

TruncatedSeries evaluate(const OperatorWord& word, HalfInteger bound) {
    const std::size_t n = word.ops.size();
    if (n == 0) {
        return word.bra == word.ket ? TruncatedSeries::one(bound) : TruncatedSeries(bound);
    }
    // Each op contributes ±p·|state| to its two neighbours, so the total exponent is
    // C + Σ_k w_k |s_k| over interior states k = 1..n-1, with C carried by bra and ket.
    auto signed_exp = [&](std::size_t k) { return word.ops[k].exponent * word.ops[k].sign; };
    const bool all_positive = std::all_of(word.ops.begin(), word.ops.end(),
                                          [](const VertexOp& op) { return op.exponent.doubled > 0; });
    std::vector<HalfInteger> w(n + 1);
    bool weights_positive = true;
    for (std::size_t k = 1; k < n; ++k) {
        w[k] = signed_exp(k) - signed_exp(k - 1);
        if (w[k].doubled <= 0) weights_positive = false;
    }
    if (!all_positive && !weights_positive)
        throw convergence_error("operator word has no bounded-below weighting; evaluation would not converge");

    if (all_positive) {
        StateVector state{{word.ket, TruncatedSeries::one(bound)}};
        for (std::size_t k = n; k-- > 0;) {
            state = gamma_apply(state, word.ops[k].sign, word.ops[k].exponent, bound);
        }
        auto it = state.find(word.bra);
        return it == state.end() ? TruncatedSeries(bound) : it->second;
    }

    const HalfInteger c = signed_exp(0) * word.bra.weight() - signed_exp(n - 1) * word.ket.weight();
    StateVector state{{word.ket, TruncatedSeries::monomial(c, 1, bound)}};
    for (std::size_t k = n; k-- > 0;) {
        const VertexOp& op = word.ops[k];
        StateVector next;
        for (const auto& [s, amp] : state) {
            auto low = amp.lowest();
            if (!low) continue;
            auto emit = [&](const Partition& t) {
                if (k == 0 && t != word.bra) return;
                HalfInteger cost = k == 0 ? HalfInteger{} : w[k] * t.weight();
                TruncatedSeries moved = amp.shifted(cost);
                if (moved.is_zero()) return;
                auto [it, inserted] = next.try_emplace(t, moved);
                if (!inserted) it->second += moved;
            };
            std::int64_t max_weight = k == 0 ? word.bra.weight() : max_multiple(bound - *low, w[k]);
            if (max_weight < 0) continue;
            if (op.sign == +1) {
                for_each_larger(s, max_weight, emit);
            } else {
                for_each_smaller(s, max_weight, emit);
            }
        }
        state = std::move(next);
    }
    auto it = state.find(word.bra);
    return it == state.end() ? TruncatedSeries(bound) : it->second;
}

OperatorWord shape_word(const Shape& shape, int cutoff) {
    if (cutoff < 1) throw domain_error("cutoff must be at least 1");
    OperatorWord word;
    for (std::int64_t m = -cutoff; m <= cutoff; ++m) {
        const HalfInteger mag = HalfInteger::from_doubled(2 * m + 1).abs();
        switch (shape.kind) {
            case ShapeKind::one_leg:
                word.ops.push_back({edge_sign(shape.lambda, m), edge_power(shape.lambda, m)});
                break;
            case ShapeKind::two_leg_spp:
                word.ops.push_back({m < 0 ? -1 : +1, mag});
                break;
            case ShapeKind::two_leg_rpp:
                word.ops.push_back({m < 0 ? +1 : -1, mag});
                break;
        }
    }
    switch (shape.kind) {
        case ShapeKind::one_leg:
            break;
        case ShapeKind::two_leg_spp:
            word.bra = shape.lambda;
            word.ket = shape.mu;
            break;
        case ShapeKind::two_leg_rpp:
            word.bra = shape.mu;
            word.ket = shape.lambda;
            break;
    }
    return word;
}

int minimal_cutoff(const Shape& shape) {
    const Partition lc = conjugate(shape.lambda);
    const Partition mc = conjugate(shape.mu);
    return std::max({1, shape.lambda.largest(), lc.largest(), shape.mu.largest(), mc.largest()}) + 1;
}

TruncatedSeries evaluate_shape(const Shape& shape, HalfInteger bound) {
    const Partition lc = conjugate(shape.lambda);
    const Partition mc = conjugate(shape.mu);
    int cutoff = static_cast<int>(2 * std::max<std::int64_t>(bound.ceil(), 0)) + shape.lambda.largest() +
                 lc.largest() + shape.mu.largest() + mc.largest() + 2;
    TruncatedSeries previous = evaluate(shape_word(shape, cutoff), bound);
    for (int round = 0; round < 4; ++round) {
        cutoff *= 2;
        TruncatedSeries next = evaluate(shape_word(shape, cutoff), bound);
        if (next == previous) return next;
        previous = std::move(next);
    }
    throw convergence_error("series did not stabilise under cutoff doubling");
}

TruncatedSeries hook_product(ProductRegion region, const Partition& lambda, HalfInteger bound) {
    TruncatedSeries out = TruncatedSeries::one(bound);
    if (bound.doubled < 2) return out;
    const std::int64_t d = bound.floor();
    auto factor = [&](std::int64_t h) {
        if (h <= d) out = series_mul(out, geometric(HalfInteger::from_int(h), bound));
    };
    switch (region) {
        case ProductRegion::plane:
            for (std::int64_t i = 1; i <= d; ++i)
                for (std::int64_t j = 1; i + j - 1 <= d; ++j) factor(i + j - 1);
            break;
        case ProductRegion::inside:
            for (Cell c : cells(lambda)) factor(hook_length(lambda, c, HookRegion::inside));
            break;
        case ProductRegion::outside: {
            const int rows = conjugate(lambda).largest() + static_cast<int>(d);
            const int cols = lambda.largest() + static_cast<int>(d);
            for (int i = 1; i <= rows; ++i)
                for (int j = 1; j <= cols; ++j)
                    if (!contains(lambda, {i, j})) factor(hook_length(lambda, {i, j}, HookRegion::outside));
            break;
        }
    }
    return out;
}

}  // namespace ptdt
