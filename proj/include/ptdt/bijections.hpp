#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ptdt/configurations.hpp"
#include "ptdt/partition.hpp"

namespace ptdt {

enum class ScheduleKind { off_diagonal, lexicographic, custom };

// Pop order: each cell's upper and left neighbours are in the starting shape or earlier.
struct ToggleSchedule {
    std::vector<Cell> cells;
    ScheduleKind kind = ScheduleKind::custom;
};

// Cells of [1,box]²∖start sorted by (i+j, i): (1,1),(1,2),(2,1),(1,3),...
ToggleSchedule off_diagonal_schedule(const Partition& start, int box);
// Cells of [1,box]²∖start in row-major order.
ToggleSchedule lexicographic_schedule(const Partition& start, int box);
// A uniformly chosen addable cell at every step, reproducible from the seed.
ToggleSchedule random_schedule(const Partition& start, int box, std::uint64_t seed);
// Cells of [1,box]² layer by layer: (1,n),...,(n-1,n),(n,1),...,(n,n).
ToggleSchedule layer_schedule(int box);

// Diagonals of a filling of ℕ²∖removed, toggled one corner at a time.
// Diagonal d is read from its first cell outside `removed`; outside the stored
// window it equals the left limit (d < lo) or the right limit (d > hi).
class ToggleMachine {
public:
    ToggleMachine(Partition removed, std::int64_t lo, std::vector<Partition> diagonals, Partition left_limit,
                  Partition right_limit);

    const Partition& at(std::int64_t d) const;
    const Partition& removed() const { return removed_; }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(diagonals_.size()) - 1; }
    void set(std::int64_t d, Partition p);

    // Pop the addable cell c of `removed`; returns the popped value. Throws schedule_error.
    int pop(Cell c);
    // Push value n onto the removable cell c of `removed`. Throws schedule_error.
    void push(Cell c, int n);

    // Entries of the filling at cells outside `removed` on diagonals in the window.
    CellMap entries() const;

private:
    Partition removed_;
    std::int64_t lo_;
    std::vector<Partition> diagonals_;
    Partition left_limit_;
    Partition right_limit_;
};

// τ: plane partition → tableau on ℕ² with Σ value·(i+j-1) = |π|.
HookTableau pp_to_tableau(const PlanePartition& pi, const std::optional<ToggleSchedule>& schedule = std::nullopt);
PlanePartition tableau_to_pp(const HookTableau& t);

// Tableau on ℕ²∖λ obtained by popping σ empty.
HookTableau spp_to_tableau(const OneLegSPP& sigma, const std::optional<ToggleSchedule>& schedule = std::nullopt);
OneLegSPP tableau_to_spp(const HookTableau& t);

struct PhiSplit {
    HookTableau inside;  // on λ
    HookTableau plane;   // on ℕ²
};
PhiSplit phi_split(const HookTableau& outside);
HookTableau phi_merge(const PhiSplit& parts);

// RPP of shape λ ↔ tableau on λ, through the 180° rotation of λ's bounding rectangle.
HookTableau rpp_to_tableau(const OneLegRPP& rho);
OneLegRPP tableau_to_rpp(const HookTableau& t);

struct OneLegImage {
    OneLegRPP rho;
    PlanePartition pi;
    friend bool operator==(const OneLegImage&, const OneLegImage&) = default;
};
OneLegImage one_leg_forward(const OneLegSPP& sigma, const std::optional<ToggleSchedule>& schedule = std::nullopt);
OneLegSPP one_leg_inverse(const OneLegRPP& rho, const PlanePartition& pi);

// Smallest N >= max(1, ℓ(λ), ℓ(µ)) with the excess supported in [1,N]² and every
// nonzero pop inside [1,N]²; the tail is certified by the remaining weight.
int stabilization_index(const TwoLegSPP& sigma);

// σ after popping [1,K]²: states[p] is diagonal p-K for p = 0..2K, γ = states[K].
struct TwoLegRemnant {
    Partition lambda;
    Partition mu;
    int K = 0;
    std::vector<Partition> states;
    HookTableau popped;
    const Partition& gamma() const { return states[K]; }
};
TwoLegRemnant two_leg_remnant(const TwoLegSPP& sigma, int K);

struct TwoLegImage {
    TwoLegRPP rho;
    PlanePartition pi;
    friend bool operator==(const TwoLegImage&, const TwoLegImage&) = default;
};
// K = 0 selects the stabilization index.
TwoLegImage two_leg_forward(const TwoLegSPP& sigma, int K = 0);
// K = 0 selects a size past the stabilization index of every preimage of that weight.
TwoLegSPP two_leg_inverse(const TwoLegRPP& rho, const PlanePartition& pi, int K = 0);

}  // namespace ptdt
