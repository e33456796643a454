#pragma once

#include <cstdint>
#include <utility>

#include "ptdt/half_integer.hpp"
#include "ptdt/partition.hpp"

namespace ptdt {

// Boundary edges of ℕ²∖λ are labelled by integers increasing from bottom-left to
// top-right; the two edges touching the main diagonal are -1 and 0. The edge in
// row r at the end of λ_r is vertical with label λ_r - r; the edge under column c
// is horizontal with label c - λ'_c - 1.

// +1 for a horizontal edge, -1 for a vertical one.
int edge_sign(const Partition& lambda, std::int64_t n);

// ±|n + 1/2|, positive iff edge_sign agrees with sign(n + 1/2). Equals edge_sign * (n + 1/2).
HalfInteger edge_power(const Partition& lambda, std::int64_t n);

// Row r with λ_r - r = k; requires edge k to be vertical.
int row_of_vertical_edge(const Partition& lambda, std::int64_t k);
// Column c with c - λ'_c - 1 = l; requires edge l to be horizontal.
int column_of_horizontal_edge(const Partition& lambda, std::int64_t l);

struct HookEdges {
    std::int64_t vertical;    // end of row i
    std::int64_t horizontal;  // bottom of column j
};
// The two boundary edges met by the hook through c (inside or outside λ).
HookEdges hook_edges(const Partition& lambda, Cell c);

struct QuotientId {
    int n = 1;
    int i = 0;  // 0 <= i < n
};

// Partition whose sign sequence is m ↦ e_λ(n·m + i), shifted so it is centred.
Partition n_quotient(const Partition& lambda, QuotientId q);

enum class PhiRegion { in_lambda, in_plane };

struct PhiTarget {
    PhiRegion region = PhiRegion::in_plane;
    Cell cell;
    friend bool operator==(const PhiTarget&, const PhiTarget&) = default;
};

// Redistributes an n-hook pivot of ℕ²∖λ onto an n-hook pivot of λ or of ℕ².
// A pivot whose quotient corner is followed by a corner of λ_{n,i} goes to that
// cell of λ. The n remaining pivots, one upper-right-most corner per quotient, go
// to the n-th off-diagonal of ℕ² in boundary order, both read bottom-left to top-right.
PhiTarget phi(const Partition& lambda, Cell b);

// Inverse of phi; throws domain_error when the target is not in its region.
Cell phi_inverse(const Partition& lambda, const PhiTarget& target);

}  // namespace ptdt
