#include "ptdt/io.hpp"

#include <istream>
#include <ostream>

#include "ptdt/errors.hpp"

namespace ptdt::io {

namespace {

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed ") + what + ": " + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw domain_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json cell_map_to_json(const CellMap& m) {
    json out = json::array();
    for (const auto& [c, v] : m) out.push_back({c.row, c.col, v});  // std::map order is row-major
    return out;
}

CellMap cell_map_from_json(const json& j) {
    return guarded("cell list", [&] {
        if (!j.is_array()) throw domain_error("cell list must be an array");
        CellMap m;
        for (const json& e : j) {
            if (!e.is_array() || e.size() != 3) throw domain_error("cell entries are [row, col, value]");
            Cell c{e[0].get<int>(), e[1].get<int>()};
            std::int64_t v = e[2].get<std::int64_t>();
            if (m.count(c)) throw domain_error("cell listed twice");
            if (v != 0) m[c] = v;
        }
        return m;
    });
}

const char* region_name(TableauRegion r) {
    switch (r) {
        case TableauRegion::plane: return "plane";
        case TableauRegion::inside: return "inside";
        case TableauRegion::outside: return "outside";
    }
    return "";
}

TableauRegion region_from_name(const std::string& s) {
    if (s == "plane") return TableauRegion::plane;
    if (s == "inside") return TableauRegion::inside;
    if (s == "outside") return TableauRegion::outside;
    throw domain_error("unknown tableau region '" + s + "'");
}

std::vector<Partition> legs_from_json(const json& j, std::size_t count) {
    const json& legs = field(j, "legs");
    if (!legs.is_array() || legs.size() != count)
        throw domain_error("expected " + std::to_string(count) + " legs");
    std::vector<Partition> out;
    for (const json& l : legs) out.push_back(partition_from_json(l));
    return out;
}

}  // namespace

json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) {
    return guarded("partition", [&] {
        if (!j.is_array()) throw domain_error("partition must be an array of integers");
        return Partition(j.get<std::vector<int>>());
    });
}

json to_json(Cell c) { return {c.row, c.col}; }

Cell cell_from_json(const json& j) {
    return guarded("cell", [&] {
        if (!j.is_array() || j.size() != 2) throw domain_error("cell must be [row, col]");
        return Cell{j[0].get<int>(), j[1].get<int>()};
    });
}

json to_json(HalfInteger h) { return {{"doubled", h.doubled}}; }

HalfInteger half_integer_from_json(const json& j) {
    return guarded("half-integer", [&] { return HalfInteger::from_doubled(field(j, "doubled").get<std::int64_t>()); });
}

json to_json(const PhiTarget& t) {
    return {{"region", t.region == PhiRegion::in_lambda ? "in_lambda" : "in_plane"}, {"cell", to_json(t.cell)}};
}

PhiTarget phi_target_from_json(const json& j) {
    return guarded("phi target", [&] {
        std::string r = field(j, "region").get<std::string>();
        if (r != "in_lambda" && r != "in_plane") throw domain_error("unknown phi region '" + r + "'");
        return PhiTarget{r == "in_lambda" ? PhiRegion::in_lambda : PhiRegion::in_plane,
                         cell_from_json(field(j, "cell"))};
    });
}

json to_json(const Configuration& c) {
    json out{{"type", type_name(c)}};
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PlanePartition>) {
                out["legs"] = json::array();
                out["entries"] = cell_map_to_json(x.entries);
            } else if constexpr (std::is_same_v<T, OneLegSPP> || std::is_same_v<T, OneLegRPP>) {
                out["legs"] = json::array({to_json(x.shape)});
                out["entries"] = cell_map_to_json(x.entries);
            } else if constexpr (std::is_same_v<T, TwoLegSPP>) {
                out["legs"] = json::array({to_json(x.lambda), to_json(x.mu)});
                out["excess"] = cell_map_to_json(x.excess);
            } else if constexpr (std::is_same_v<T, TwoLegRPP>) {
                out["legs"] = json::array({to_json(x.lambda), to_json(x.mu)});
                out["deficit"] = cell_map_to_json(x.deficit);
            } else {
                out["region"] = region_name(x.region);
                out["legs"] = x.region == TableauRegion::plane ? json::array() : json::array({to_json(x.shape)});
                out["values"] = cell_map_to_json(x.values);
            }
        },
        c);
    return out;
}

Configuration configuration_from_json(const json& j) {
    return guarded("configuration", [&]() -> Configuration {
        const std::string type = field(j, "type").get<std::string>();
        Configuration c;
        if (type == "plane_partition") {
            c = PlanePartition{cell_map_from_json(field(j, "entries"))};
        } else if (type == "one_leg_spp") {
            c = OneLegSPP{legs_from_json(j, 1)[0], cell_map_from_json(field(j, "entries"))};
        } else if (type == "one_leg_rpp") {
            c = OneLegRPP{legs_from_json(j, 1)[0], cell_map_from_json(field(j, "entries"))};
        } else if (type == "two_leg_spp") {
            auto legs = legs_from_json(j, 2);
            c = TwoLegSPP{legs[0], legs[1], cell_map_from_json(field(j, "excess"))};
        } else if (type == "two_leg_rpp") {
            auto legs = legs_from_json(j, 2);
            c = TwoLegRPP{legs[0], legs[1], cell_map_from_json(field(j, "deficit"))};
        } else if (type == "hook_tableau") {
            HookTableau t;
            t.region = region_from_name(field(j, "region").get<std::string>());
            if (t.region != TableauRegion::plane) t.shape = legs_from_json(j, 1)[0];
            t.values = cell_map_from_json(field(j, "values"));
            c = t;
        } else {
            throw domain_error("unknown configuration type '" + type + "'");
        }
        validate(c);
        return c;
    });
}

json to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            terms.push_back({e.doubled, static_cast<std::int64_t>(c)});
        else
            terms.push_back({e.doubled, c.str()});
    }
    return {{"bound", s.bound().doubled}, {"terms", terms}};
}

TruncatedSeries series_from_json(const json& j) {
    return guarded("series", [&] {
        TruncatedSeries s(HalfInteger::from_doubled(field(j, "bound").get<std::int64_t>()));
        for (const json& t : field(j, "terms")) {
            if (!t.is_array() || t.size() != 2) throw domain_error("series terms are [doubled, coefficient]");
            HalfInteger e = HalfInteger::from_doubled(t[0].get<std::int64_t>());
            Coefficient c = t[1].is_string() ? Coefficient(t[1].get<std::string>()) : Coefficient(t[1].get<std::int64_t>());
            if (e > s.bound()) throw domain_error("series term above its bound");
            s.add_term(e, c);
        }
        return s;
    });
}

json to_json(const FamilyDescriptor& f) {
    json legs = json::array();
    switch (f.kind) {
        case Family::plane: break;
        case Family::one_leg_spp:
        case Family::one_leg_rpp: legs.push_back(to_json(f.lambda)); break;
        default:
            legs.push_back(to_json(f.lambda));
            legs.push_back(to_json(f.mu));
    }
    return {{"kind", family_name(f.kind)}, {"legs", legs}};
}

FamilyDescriptor family_from_json(const json& j) {
    return guarded("family", [&] {
        FamilyDescriptor f;
        f.kind = parse_family(field(j, "kind").get<std::string>());
        std::size_t n = f.kind == Family::plane ? 0 : (f.kind == Family::one_leg_spp || f.kind == Family::one_leg_rpp) ? 1 : 2;
        auto legs = legs_from_json(j, n);
        if (n >= 1) f.lambda = legs[0];
        if (n == 2) f.mu = legs[1];
        return f;
    });
}

void write_census(std::ostream& out, const FamilyDescriptor& family, int budget,
                  const std::vector<Configuration>& configs) {
    WeightCensus c = census_of(family, budget, configs);
    json header{{"census",
                 {{"family", to_json(family)},
                  {"budget", budget},
                  {"bound", to_json(c.bound)},
                  {"count", configs.size()}}}};
    out << header.dump() << '\n';
    for (const Configuration& x : configs) out << to_json(x).dump() << '\n';
}

CensusFile read_census(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw domain_error("census file is empty");
    json header = field(parse(line), "census");
    CensusFile f;
    f.family = family_from_json(field(header, "family"));
    f.budget = guarded("census header", [&] { return field(header, "budget").get<int>(); });
    const auto count = guarded("census header", [&] { return field(header, "count").get<std::size_t>(); });
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        f.configs.push_back(configuration_from_json(parse(line)));
    }
    if (f.configs.size() != count)
        throw domain_error("census header announces " + std::to_string(count) + " records, found " +
                           std::to_string(f.configs.size()));
    return f;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw domain_error(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace ptdt::io
