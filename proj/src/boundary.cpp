#include "ptdt/boundary.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "ptdt/errors.hpp"

namespace ptdt {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

// Signs of one n-quotient on a window: every index below lo is -1, every index
// above hi is +1.
struct QuotientSigns {
    const Partition* lambda;
    int n;
    std::int64_t residue;
    std::int64_t lo, hi;

    QuotientSigns(const Partition& l, int n_, std::int64_t i) : lambda(&l), n(n_), residue(i) {
        // Irregular edges lie in [-length-1, largest]; pad by one step each side.
        lo = (-(l.length() + 1) - residue) / n - 2;
        hi = (l.largest() - residue) / n + 2;
    }
    int at(std::int64_t m) const { return edge_sign(*lambda, n * m + residue); }
    std::int64_t label(std::int64_t m) const { return n * m + residue; }
};

// Vertical labels of the upper-right-most outer corner of every n-quotient, in
// boundary order. These n cells are sent onto the n-th off-diagonal of ℕ², matched
// in order from bottom-left to top-right.
std::vector<std::int64_t> last_corner_labels(const Partition& lambda, int n) {
    std::vector<std::int64_t> out;
    for (int r = 0; r < n; ++r) {
        QuotientSigns s(lambda, n, r);
        for (std::int64_t m = s.hi; m >= s.lo - 1; --m) {
            if (s.at(m) == -1 && s.at(m + 1) == +1) {
                out.push_back(s.label(m));
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

int edge_sign(const Partition& lambda, std::int64_t n) {
    // Vertical labels are λ_r - r for r >= 1; they are strictly decreasing in r.
    if (n < -static_cast<std::int64_t>(lambda.length())) return -1;
    for (int r = 1; r <= lambda.length(); ++r) {
        std::int64_t k = lambda.part(r) - r;
        if (k == n) return -1;
        if (k < n) break;
    }
    return +1;
}

HalfInteger edge_power(const Partition& lambda, std::int64_t n) {
    return HalfInteger::from_doubled(edge_sign(lambda, n) * (2 * n + 1));
}

int row_of_vertical_edge(const Partition& lambda, std::int64_t k) {
    if (edge_sign(lambda, k) != -1) throw domain_error("edge " + std::to_string(k) + " is not vertical");
    for (int r = 1; r <= lambda.length(); ++r)
        if (lambda.part(r) - r == k) return r;
    return static_cast<int>(-k);
}

int column_of_horizontal_edge(const Partition& lambda, std::int64_t l) {
    if (edge_sign(lambda, l) != +1) throw domain_error("edge " + std::to_string(l) + " is not horizontal");
    Partition conj = conjugate(lambda);
    for (int c = 1; c <= conj.length(); ++c)
        if (c - conj.part(c) - 1 == l) return c;
    return static_cast<int>(l + 1);
}

HookEdges hook_edges(const Partition& lambda, Cell c) {
    if (c.row < 1 || c.col < 1) throw domain_error("cell outside ℕ²");
    Partition conj = conjugate(lambda);
    return {lambda.part(c.row) - c.row, c.col - conj.part(c.col) - 1};
}

Partition n_quotient(const Partition& lambda, QuotientId q) {
    if (q.n < 1 || q.i < 0 || q.i >= q.n) throw domain_error("quotient id needs n >= 1 and 0 <= i < n");
    QuotientSigns s(lambda, q.n, q.i);
    // With f(c) = #{m < c : +} - #{m >= c : -}, f increases by exactly one per step,
    // and f(lo) = -#{m >= lo : -}.
    std::vector<std::int64_t> verticals;
    for (std::int64_t m = s.hi; m >= s.lo; --m)
        if (s.at(m) == -1) verticals.push_back(m);
    std::int64_t shift = s.lo + static_cast<std::int64_t>(verticals.size());
    std::vector<int> parts;
    for (std::size_t r = 0; r < verticals.size(); ++r) {
        std::int64_t v = verticals[r] - shift;
        parts.push_back(static_cast<int>(v + static_cast<std::int64_t>(r) + 1));
    }
    return Partition(std::move(parts));
}

PhiTarget phi(const Partition& lambda, Cell b) {
    if (contains(lambda, b)) throw domain_error("phi is defined on cells outside λ");
    const int n = hook_length(lambda, b, HookRegion::outside);
    const HookEdges e = hook_edges(lambda, b);
    const std::int64_t residue = floor_mod(e.vertical, n);
    QuotientSigns s(lambda, n, residue);
    const std::int64_t mb = (e.vertical - residue) / n;
    // b's corner is the (-,+) pair at (mb, mb+1); the next corner is (+,-).
    std::optional<std::int64_t> inner;
    for (std::int64_t m = mb + 1; m <= s.hi; ++m) {
        if (s.at(m) == +1 && s.at(m + 1) == -1) {
            inner = m;
            break;
        }
    }
    if (!inner) {
        const auto labels = last_corner_labels(lambda, n);
        const auto pos = std::find(labels.begin(), labels.end(), e.vertical) - labels.begin();
        const int row = n - static_cast<int>(pos);
        return {PhiRegion::in_plane, {row, n + 1 - row}};
    }
    std::int64_t l = s.label(*inner);
    return {PhiRegion::in_lambda, {row_of_vertical_edge(lambda, l + n), column_of_horizontal_edge(lambda, l)}};
}

Cell phi_inverse(const Partition& lambda, const PhiTarget& target) {
    const Cell c = target.cell;
    if (target.region == PhiRegion::in_plane) {
        if (c.row < 1 || c.col < 1) throw domain_error("phi target outside ℕ²");
        const int n = c.row + c.col - 1;
        const std::int64_t k = last_corner_labels(lambda, n)[static_cast<std::size_t>(n - c.row)];
        return {row_of_vertical_edge(lambda, k), column_of_horizontal_edge(lambda, k + n)};
    }
    const int n = hook_length(lambda, c, HookRegion::inside);
    const HookEdges e = hook_edges(lambda, c);
    const std::int64_t residue = floor_mod(e.horizontal, n);
    QuotientSigns s(lambda, n, residue);
    // The corner of ℕ²∖λ_{n,i} just before this inner corner.
    for (std::int64_t m = (e.horizontal - residue) / n - 1; m >= s.lo - 1; --m) {
        if (s.at(m) == -1 && s.at(m + 1) == +1) {
            std::int64_t k = s.label(m);
            return {row_of_vertical_edge(lambda, k), column_of_horizontal_edge(lambda, k + n)};
        }
    }
    throw domain_error("no outer corner precedes the phi target");
}

}  // namespace ptdt
