#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptdt/half_integer.hpp"
#include "ptdt/partition.hpp"

namespace ptdt {

// One invariant checked over a finite domain. A failure names the first
// counterexample in enumeration order, which is also the smallest.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::int64_t cases = 0;
    std::string detail;
};

// Unset fields take the per-suite defaults listed in suite_names().
struct SuiteOptions {
    std::optional<int> max_part;
    std::optional<int> max_length;
    std::optional<int> max_weight;
    std::optional<int> max_hook;
    std::optional<int> max_coord;
    std::optional<int> max_leg;
    std::optional<int> budget;
    std::optional<int> seeds;
    std::optional<HalfInteger> degree;
    std::optional<Partition> lambda;
    std::optional<Partition> mu;
    std::uint64_t seed = 0;
};

// toggles      involution, weight laws, interlacing; parts <= 4, length <= 4; lemmas for |λ| <= 10
// hooks        hook census and phi; |λ| <= 10, n <= 8, coordinates <= 30
// macmahon     operator word, hook product and census agree; degree 12
// ptdt-one-leg census V = M·W; λ in (1),(2,1),(2,2),(3,1),(3,2,1) or --lambda; degree 10
// ptdt-two-leg V = M·W for |λ|,|µ| <= 3 (or the given legs) at degree 6; censuses at budget 5
// bijections   round trip, weight, injectivity and class counts; plane and one-leg (2,1) to
//              weight 8, two-leg ((2),(1)) to excess 5
// schedules    off-diagonal, lexicographic and seeded schedules agree; 20 seeds
// none         no checks
std::vector<std::string> suite_names();

// Throws domain_error for an unknown suite and resource_error past the oracle bounds.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& options = {});

}  // namespace ptdt
