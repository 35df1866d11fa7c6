#include <doctest.h>

#include "rational/verify.hpp"

using namespace rational;

TEST_CASE("every suite passes at desk scale") {
    SuiteOptions opt;
    opt.seed = 1;
    opt.samples = 4;
    opt.element_depth = 2;
    for (const auto& name : suite_names()) {
        SuiteResult r = run_suite(name, opt);
        INFO(name);
        for (const auto& c : r.cases) {
            INFO(c.name);
            CHECK(c.passed);
        }
        CHECK(r.ok());
        CHECK(!r.cases.empty());
    }
}

TEST_CASE("suites are deterministic in the seed") {
    SuiteOptions opt;
    opt.seed = 5;
    opt.samples = 2;
    opt.element_depth = 2;
    SuiteResult a = run_suite("group-axioms", opt);
    SuiteResult b = run_suite("group-axioms", opt);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i)
        CHECK(a.cases[i].name == b.cases[i].name);
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), std::invalid_argument);
}

TEST_CASE("prime restriction narrows the prime-indexed suites") {
    SuiteOptions opt;
    opt.seed = 2;
    opt.samples = 2;
    opt.prime = 7;
    SuiteResult r = run_suite("fp-canonical", opt);
    CHECK(r.ok());
    for (const auto& c : r.cases)
        CHECK(c.name.find("fp(7)") != std::string::npos);
}
