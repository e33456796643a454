#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ptdt/half_integer.hpp"
#include "ptdt/partition.hpp"

namespace ptdt {

// Finite support; absent cells are 0 and stored values are never 0.
using CellMap = std::map<Cell, std::int64_t>;

struct PlanePartition {
    CellMap entries;
    std::int64_t value(Cell c) const;
    // Row i of the grid is rows[i-1]; zeros may be included.
    static PlanePartition from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
};

// Entries on ℕ²∖λ, decreasing along rows and columns of that region.
struct OneLegSPP {
    Partition shape;
    CellMap entries;
    std::int64_t value(Cell c) const;
    friend bool operator==(const OneLegSPP&, const OneLegSPP&) = default;
};

// Entries on the cells of λ, increasing along rows and columns.
struct OneLegRPP {
    Partition shape;
    CellMap entries;
    std::int64_t value(Cell c) const;
    friend bool operator==(const OneLegRPP&, const OneLegRPP&) = default;
};

// σ(i,j) = max(λ_j, µ_i) + excess(i,j); λ indexes columns, µ indexes rows.
struct TwoLegSPP {
    Partition lambda;
    Partition mu;
    CellMap excess;
    std::int64_t minimal_value(Cell c) const;
    std::int64_t value(Cell c) const;
    friend bool operator==(const TwoLegSPP&, const TwoLegSPP&) = default;
};

// ρ(i,j) = min(λ_j, µ_i) - deficit(i,j) on ℤ×ℕ ∪ ℕ×ℤ, where λ_j (µ_i) is ∞ for j <= 0 (i <= 0).
struct TwoLegRPP {
    Partition lambda;
    Partition mu;
    CellMap deficit;
    static bool in_domain(Cell c) { return c.row >= 1 || c.col >= 1; }
    // Throws domain_error off the domain.
    std::int64_t cap(Cell c) const;
    std::int64_t value(Cell c) const;
    friend bool operator==(const TwoLegRPP&, const TwoLegRPP&) = default;
};

enum class TableauRegion { plane, inside, outside };

// Tableau weighted by the hook length of each cell in its region.
struct HookTableau {
    TableauRegion region = TableauRegion::plane;
    Partition shape;  // unused for the plane region
    CellMap values;
    int hook(Cell c) const;
    friend bool operator==(const HookTableau&, const HookTableau&) = default;
};

using Configuration = std::variant<PlanePartition, OneLegSPP, OneLegRPP, TwoLegSPP, TwoLegRPP, HookTableau>;

// Drop zero values from a map.
CellMap without_zeros(CellMap m);

// Throw domain_error naming the first violated inequality.
void validate(const PlanePartition& p);
void validate(const OneLegSPP& s);
void validate(const OneLegRPP& r);
void validate(const TwoLegSPP& s);
void validate(const TwoLegRPP& r);
void validate(const HookTableau& t);
void validate(const Configuration& c);

// Entries with j - i = n read from the top-left, as a partition. One-leg RPPs
// increase down a diagonal, so their entries are listed from the bottom-right.
Partition diagonal(const PlanePartition& p, std::int64_t n);
Partition diagonal(const OneLegSPP& s, std::int64_t n);
Partition diagonal(const OneLegRPP& r, std::int64_t n);
Partition diagonal(const TwoLegSPP& s, std::int64_t n);
Partition diagonal(const TwoLegRPP& r, std::int64_t n);
// Throws domain_error for a hook tableau.
Partition diagonal(const Configuration& c, std::int64_t n);

// Weight of the zero-excess (zero-deficit) configuration: the lowest exponent of
// the two-leg vertex-operator series.
HalfInteger minimal_weight_spp(const Partition& lambda, const Partition& mu);
HalfInteger minimal_weight_rpp(const Partition& lambda, const Partition& mu);

HalfInteger weight(const PlanePartition& p);
HalfInteger weight(const OneLegSPP& s);
HalfInteger weight(const OneLegRPP& r);
HalfInteger weight(const TwoLegSPP& s);
HalfInteger weight(const TwoLegRPP& r);
HalfInteger weight(const HookTableau& t);
HalfInteger weight(const Configuration& c);

enum class TwoLegKind { spp, rpp };

struct MinimalConfig {
    Configuration config;
    HalfInteger weight;
};
MinimalConfig minimal_config(TwoLegKind kind, const Partition& lambda, const Partition& mu);

// Entries of the reconstructed function on a window, zeros included. The SPP
// window is [1,rows]×[1,cols]; the RPP window is [lo,rows]×[lo,cols] within the domain.
CellMap entries_in(const TwoLegSPP& s, int rows, int cols);
CellMap entries_in(const TwoLegRPP& r, int lo, int rows, int cols);
// Inverses of entries_in: cells outside the map take their zero-excess (zero-deficit)
// value. Throws domain_error for an entry below the minimum (above the cap).
TwoLegSPP two_leg_spp_from_entries(const Partition& lambda, const Partition& mu, const CellMap& entries);
TwoLegRPP two_leg_rpp_from_entries(const Partition& lambda, const Partition& mu, const CellMap& entries);

// Legs swapped, deficits reflected across the main diagonal.
TwoLegRPP transpose(const TwoLegRPP& r);

// Diagonal indices outside which every diagonal equals its limit.
struct DiagonalWindow {
    std::int64_t lo;
    std::int64_t hi;
};
DiagonalWindow support_window(const Configuration& c);

// "plane_partition", "one_leg_spp", ...
std::string type_name(const Configuration& c);

}  // namespace ptdt
