#pragma once

#include <string>
#include <vector>

#include "hexlab/curve.hpp"

namespace hexlab {

// desk-scale defaults live in data/default_config.json; every bound is an
// overridable flag on the CLI
struct SuiteConfig {
    std::string suite;
    std::string surface = "S2_1";
    Weight weight_bound = 22;      // vertex universe bound
    Weight sep_weight_bound = 24;  // separating-curve universe bound
    Weight pool_bound = 22;        // zeta / eta search pool
    int arc_bound = 10;            // arc enumeration for BP searches
    int radius = 2;                // orbit ball radius
    long long exponent_bound = 6;
    int cycle_max_len = 6;
    int dual_arc_bound = 6;        // D(Y) vertex bound
    int samples = 20;
    unsigned seed = 20120728;
    int workers = 0;
    std::string out_dir;    // when set: report json + exports written here
    std::string cache_dir;  // universe cache keyed by config digest
    std::string format = "json";

    static SuiteConfig defaults(const std::string& suite);
};

struct SuiteReport {
    std::string suite;
    std::string scope;  // universe / bound metadata: every claim is relative to this
    bool pass = false;
    bool inconclusive = false;  // a bound was too small to decide
    std::vector<std::string> notes;
    std::vector<std::string> counterexamples;
    std::vector<std::string> alarms;  // theorem contradictions; never silent
    double seconds = 0;

    // exit contract: 0 pass, 1 fail/alarm, 2 inconclusive
    int exit_code() const { return pass ? 0 : (inconclusive ? 2 : 1); }
    std::string to_json_text() const;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const SuiteConfig& cfg);

// config file round trip (data/default_config.json)
SuiteConfig load_default_config(const std::string& suite);

}  // namespace hexlab
