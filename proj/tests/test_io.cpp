#include <sstream>

#include "doctest.h"
#include "figures.hpp"
#include "ptdt/bijections.hpp"
#include "ptdt/errors.hpp"
#include "ptdt/io.hpp"

using namespace ptdt;
using nlohmann::json;

TEST_CASE("scalar encodings") {
    CHECK(io::to_json(Partition({4, 2, 1})) == json::array({4, 2, 1}));
    CHECK(io::partition_from_json(json::array()) == Partition{});
    CHECK(io::to_json(Cell{-2, 3}) == json::array({-2, 3}));
    CHECK(io::cell_from_json(json::array({1, 5})) == Cell{1, 5});
    CHECK(io::to_json(HalfInteger::from_doubled(-7)) == json{{"doubled", -7}});
    CHECK(io::half_integer_from_json(json{{"doubled", 13}}) == HalfInteger::from_doubled(13));
    PhiTarget t{PhiRegion::in_lambda, {2, 1}};
    CHECK(io::to_json(t).dump() == R"({"cell":[2,1],"region":"in_lambda"})");
    CHECK(io::phi_target_from_json(io::to_json(t)) == t);

    CHECK_THROWS_AS(io::partition_from_json(json::array({1, 2})), domain_error);
    CHECK_THROWS_AS(io::partition_from_json(json{{"a", 1}}), domain_error);
    CHECK_THROWS_AS(io::cell_from_json(json::array({1})), domain_error);
    CHECK_THROWS_AS(io::half_integer_from_json(json::object()), domain_error);
    CHECK_THROWS_AS(io::parse("{nope"), domain_error);
}

TEST_CASE("configurations round trip in row-major order") {
    const std::vector<Configuration> all{figures::weight31(),
                                         figures::one_leg_sigma(),
                                         figures::one_leg_rho(),
                                         figures::two_leg_weight16(),
                                         figures::two_leg_rpp_example(),
                                         pp_to_tableau(figures::weight7()),
                                         spp_to_tableau(figures::one_leg_sigma())};
    for (const auto& c : all) CHECK(io::configuration_from_json(io::to_json(c)) == c);

    json j = io::to_json(figures::two_leg_rho());
    CHECK(j.dump() == R"({"deficit":[[1,1,1],[1,2,1]],"legs":[[2,2],[3,1]],"type":"two_leg_rpp"})");
    json p = io::to_json(PlanePartition::from_rows({{2, 1}, {1}}));
    CHECK(p.at("entries") == json::parse("[[1,1,2],[1,2,1],[2,1,1]]"));
    CHECK(p.at("legs") == json::array());
}

TEST_CASE("malformed configurations are rejected") {
    CHECK_THROWS_AS(io::configuration_from_json(json::parse(R"({"type":"tray"})")), domain_error);
    CHECK_THROWS_AS(io::configuration_from_json(json::parse(R"({"type":"plane_partition","entries":[[1,1]]})")),
                    domain_error);
    // Valid JSON, but not a plane partition.
    CHECK_THROWS_AS(
        io::configuration_from_json(json::parse(R"({"type":"plane_partition","entries":[[1,1,1],[1,2,2]]})")),
        domain_error);
    CHECK_THROWS_AS(io::configuration_from_json(json::parse(R"({"type":"two_leg_spp","legs":[[1]],"excess":[]})")),
                    domain_error);
}

TEST_CASE("series encoding") {
    TruncatedSeries s(HalfInteger::from_int(3));
    s.add_term(HalfInteger::from_doubled(1), 2);
    s.add_term(HalfInteger::from_int(3), Coefficient("123456789012345678901234567890"));
    json j = io::to_json(s);
    CHECK(j.at("bound") == 6);
    CHECK(j.at("terms")[0] == json::array({1, 2}));
    CHECK(j.at("terms")[1][1] == "123456789012345678901234567890");
    CHECK(io::series_from_json(j) == s);
    CHECK_THROWS_AS(io::series_from_json(json::parse(R"({"bound":2,"terms":[[4,1]]})")), domain_error);
}

TEST_CASE("census files round trip") {
    FamilyDescriptor f{Family::two_leg_rpp, Partition({2}), Partition({1})};
    auto configs = enum_configs(f, 3);
    std::stringstream s;
    io::write_census(s, f, 3, configs);
    std::string first;
    std::getline(s, first);
    json header = json::parse(first);
    CHECK(header.at("census").at("budget") == 3);
    CHECK(header.at("census").at("count") == configs.size());
    CHECK(io::family_from_json(header.at("census").at("family")) == f);
    s.seekg(0);
    io::CensusFile back = io::read_census(s);
    CHECK(back.family == f);
    CHECK(back.budget == 3);
    CHECK(back.configs == configs);

    std::stringstream truncated(first + "\n");
    CHECK_THROWS_AS(io::read_census(truncated), domain_error);
}
