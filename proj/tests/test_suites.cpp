#include "doctest.h"

#include "hexlab/suites.hpp"

using namespace hexlab;

TEST_CASE("exit code contract") {
    SuiteReport r;
    r.pass = true;
    CHECK(r.exit_code() == 0);
    r.pass = false;
    r.inconclusive = false;
    CHECK(r.exit_code() == 1);
    r.inconclusive = true;
    CHECK(r.exit_code() == 2);
}

TEST_CASE("unknown suite is a usage-level error") {
    SuiteConfig cfg = SuiteConfig::defaults("no-such-suite");
    CHECK_THROWS(run_suite(cfg));
}

TEST_CASE("reports are reproducible modulo timing") {
    SuiteConfig cfg = load_default_config("farey");
    cfg.suite = "farey";
    auto r1 = run_suite(cfg);
    auto r2 = run_suite(cfg);
    r1.seconds = r2.seconds = 0;
    CHECK(r1.to_json_text() == r2.to_json_text());
    CHECK(r1.pass);
}

TEST_CASE("fast suites pass at shipped defaults") {
    for (const std::string& name :
         {"farey", "type3-abundance", "hexagon-connectivity", "torelli-homology"}) {
        SuiteConfig cfg = load_default_config(name);
        cfg.suite = name;
        auto rep = run_suite(cfg);
        CAPTURE(name);
        CHECK(rep.pass);
        CHECK(rep.alarms.empty());
    }
}
