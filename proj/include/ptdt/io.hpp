#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "ptdt/boundary.hpp"
#include "ptdt/configurations.hpp"
#include "ptdt/oracle.hpp"
#include "ptdt/series.hpp"

// JSON encodings. Every from_json throws domain_error on malformed input.
namespace ptdt::io {

using nlohmann::json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(Cell c);
Cell cell_from_json(const json& j);

// {"doubled": n}
json to_json(HalfInteger h);
HalfInteger half_integer_from_json(const json& j);

// {"region": "in_lambda" | "in_plane", "cell": [i, j]}
json to_json(const PhiTarget& t);
PhiTarget phi_target_from_json(const json& j);

// {"type": ..., "legs": [...], "entries" | "excess" | "deficit" | "values": [[i, j, v], ...]}
// with cells in row-major order. Hook tableaux also carry "region".
json to_json(const Configuration& c);
Configuration configuration_from_json(const json& j);

// {"bound": doubled, "terms": [[doubled_exponent, coefficient], ...]}. Coefficients
// beyond 64 bits are written as decimal strings.
json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

json to_json(const FamilyDescriptor& f);
FamilyDescriptor family_from_json(const json& j);

// JSON lines: a header {"census": {"family": ..., "budget": E, "bound": {...}, "count": n}}
// followed by one configuration per line.
struct CensusFile {
    FamilyDescriptor family;
    int budget = 0;
    std::vector<Configuration> configs;
};
void write_census(std::ostream& out, const FamilyDescriptor& family, int budget,
                  const std::vector<Configuration>& configs);
CensusFile read_census(std::istream& in);

// Parse a whole document, mapping parse failures to domain_error.
json parse(const std::string& text);

}  // namespace ptdt::io
