#pragma once

#include "ptdt/configurations.hpp"

// Worked examples, transcribed cell by cell.
namespace ptdt::figures {

inline PlanePartition weight31() {
    return PlanePartition::from_rows({{5, 4, 3, 3}, {4, 4, 2}, {2, 1}, {2, 1}});
}

// Maps to the tableau {(1,1):1, (1,2):1, (2,1):2}.
inline PlanePartition weight7() { return PlanePartition::from_rows({{3, 1}, {2, 1}}); }

inline OneLegSPP one_leg_sigma() {
    return OneLegSPP{Partition({2, 1}), {{{1, 3}, 3}, {{2, 2}, 4}, {{2, 3}, 2}, {{3, 1}, 5}, {{3, 2}, 3}, {{3, 3}, 2}}};
}
inline OneLegRPP one_leg_rho() { return OneLegRPP{Partition({2, 1}), {{{1, 2}, 1}, {{2, 1}, 2}}}; }
inline PlanePartition one_leg_pi() { return PlanePartition::from_rows({{4, 2}, {3, 2}, {3, 2}}); }

// Two-leg SPP of weight 11, legs λ = (2,2) on columns and µ = (3,1) on rows.
inline TwoLegSPP two_leg_weight11() {
    TwoLegSPP s{Partition({2, 2}), Partition({3, 1}), {}};
    s.excess = {{{1, 1}, 2}, {{1, 2}, 1}, {{2, 1}, 3}, {{2, 2}, 1}, {{2, 3}, 1}, {{3, 1}, 1}, {{3, 3}, 1}};
    return s;
}

// Two-leg SPP of weight 16 with stabilization index 3.
inline TwoLegSPP two_leg_weight16() {
    TwoLegSPP s{Partition({2, 2}), Partition({3, 1}), {}};
    s.excess = {{{1, 1}, 3}, {{1, 2}, 2}, {{2, 1}, 3}, {{2, 2}, 1}, {{2, 3}, 2},
                {{3, 1}, 1}, {{3, 2}, 1}, {{3, 3}, 2}};
    return s;
}
inline TwoLegRPP two_leg_rho() { return TwoLegRPP{Partition({2, 2}), Partition({3, 1}), {{{1, 1}, 1}, {{1, 2}, 1}}}; }
inline PlanePartition two_leg_pi() { return PlanePartition::from_rows({{4, 3}, {3, 1}, {1, 1}}); }

// Two-leg RPP with legs λ = (3,1) on columns and µ = (2,2) on rows.
inline TwoLegRPP two_leg_rpp_example() {
    return TwoLegRPP{Partition({3, 1}), Partition({2, 2}),
                     {{{0, 1}, 2}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 0}, 1}, {{2, 1}, 1}, {{2, 2}, 1}}};
}

}  // namespace ptdt::figures
