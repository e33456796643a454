#pragma once

#include <optional>

#include "ptdt/partition.hpp"

namespace ptdt {

struct ToggleResult {
    Partition toggled;
    std::optional<int> popped;  // present only for a peak toggle
    friend bool operator==(const ToggleResult&, const ToggleResult&) = default;
};

// λ ≻ ν ≻ µ. T_i = min(λ_i, µ_{i-1}) + max(λ_{i+1}, µ_i) - ν_i with µ_0 = ∞.
// Result satisfies λ ≻ T ≻ µ and |T| = |λ| + |µ| - |ν|.
Partition toggle_between(const Partition& lambda, const Partition& nu, const Partition& mu);

// λ ≺ ν ≻ µ. Pops n = ν_1 - max(λ_1, µ_1) and
// T_k = min(λ_k, µ_k) + max(λ_{k+1}, µ_{k+1}) - ν_{k+1}.
// Result satisfies λ ≻ T ≺ µ and |T| = |λ| + |µ| - |ν| + n.
ToggleResult toggle_pop(const Partition& lambda, const Partition& nu, const Partition& mu);

// λ ≻ ν ≺ µ. Inverse of toggle_pop: T_1 = n + max(λ_1, µ_1),
// T_{k+1} = min(λ_k, µ_k) + max(λ_{k+1}, µ_{k+1}) - ν_k.
Partition toggle_push(const Partition& lambda, const Partition& nu, const Partition& mu, int n);

}  // namespace ptdt
