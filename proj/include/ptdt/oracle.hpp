#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ptdt/configurations.hpp"
#include "ptdt/half_integer.hpp"
#include "ptdt/partition.hpp"
#include "ptdt/series.hpp"

namespace ptdt {

enum class Family { plane, one_leg_spp, one_leg_rpp, two_leg_spp, two_leg_rpp };

// Two-leg families use both legs (lambda on columns, mu on rows); one-leg families use lambda.
struct FamilyDescriptor {
    Family kind = Family::plane;
    Partition lambda;
    Partition mu;
    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

// "plane", "one_leg_spp", ...; parse throws domain_error on an unknown name.
std::string family_name(Family f);
Family parse_family(const std::string& name);

inline constexpr int max_partition_weight = 40;
inline constexpr int max_single_weight = 12;  // plane and one-leg families
inline constexpr int max_two_leg_budget = 8;  // excess or deficit

// Partitions of n in ascending lexicographic order of their parts. Throws resource_error past 40.
std::vector<Partition> enum_partitions(int n);

// Every configuration of the family whose weight is at most `budget` (plane and
// one-leg) or whose total excess/deficit is at most `budget` (two-leg), sorted
// by weight and then by entries. `slack` widens the bounding box on every side.
std::vector<Configuration> enum_configs(const FamilyDescriptor& family, int budget, int slack = 0);

struct WeightCensus {
    FamilyDescriptor family;
    int budget = 0;
    // Exact counts for every weight <= bound. For two-leg families bound = W_0 + budget.
    HalfInteger bound;
    std::map<HalfInteger, std::int64_t> counts;
};

WeightCensus take_census(const FamilyDescriptor& family, int budget);
// Census of an explicit list, which must all belong to the family.
WeightCensus census_of(const FamilyDescriptor& family, int budget, const std::vector<Configuration>& configs);
// Σ count(w) q^w with the census bound.
TruncatedSeries census_series(const WeightCensus& census);
// True when enlarging the bounding box by one cell in each direction finds nothing new.
bool census_saturated(const FamilyDescriptor& family, int budget);

// Weight of the zero-budget configuration: 0 for plane and one-leg families.
HalfInteger base_weight(const FamilyDescriptor& family);

}  // namespace ptdt
