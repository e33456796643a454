#include "doctest.h"
#include "ptdt/errors.hpp"
#include "ptdt/verify.hpp"

using namespace ptdt;

namespace {
bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
        CHECK(c.cases > 0);
        if (!c.passed) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("suites pass at small bounds") {
    SuiteOptions o;
    o.max_part = 3;
    o.max_length = 3;
    o.max_weight = 5;
    o.max_hook = 4;
    o.max_coord = 15;
    o.degree = HalfInteger::from_int(5);
    o.budget = 3;
    o.max_leg = 2;
    o.seeds = 3;
    for (const auto& name : suite_names()) {
        INFO(name);
        auto checks = run_suite(name, o);
        CHECK(all_pass(checks));
        CHECK(checks.empty() == (name == "none"));
    }
}

TEST_CASE("suite options select the legs") {
    SuiteOptions o;
    o.lambda = Partition({2, 1});
    o.degree = HalfInteger::from_int(8);
    auto checks = run_suite("ptdt-one-leg", o);
    REQUIRE(checks.size() == 2);
    CHECK(checks[0].cases == 1);
    CHECK(all_pass(checks));
}

TEST_CASE("bad suite requests") {
    CHECK_THROWS_AS(run_suite("everything"), domain_error);
    SuiteOptions o;
    o.degree = HalfInteger::from_doubled(13);
    CHECK_THROWS_AS(run_suite("macmahon", o), domain_error);
    o.degree = HalfInteger::from_int(13);
    CHECK_THROWS_AS(run_suite("macmahon", o), resource_error);
}
