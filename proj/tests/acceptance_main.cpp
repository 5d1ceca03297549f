// acceptance suite: one timed pass/fail line per criterion, exit 0 iff all pass
#include <chrono>
#include <cstdio>
#include <random>

#include "hexlab/catalog.hpp"
#include "hexlab/intersection.hpp"
#include "hexlab/suites.hpp"
#include "hexlab/twist.hpp"

using namespace hexlab;
using Clock = std::chrono::steady_clock;

namespace {

int g_index = 0, g_failures = 0;

void report(const std::string& name, bool pass, double secs, double limit,
            const std::string& detail) {
    bool timely = secs <= limit;
    bool ok = pass && timely;
    if (!ok) ++g_failures;
    std::printf("[%2d/11] %s  %-22s (%.1fs / limit %.0fs)  %s\n", ++g_index,
                ok ? "PASS" : "FAIL", name.c_str(), secs, limit,
                (pass ? (timely ? detail : "over time limit").c_str() : detail.c_str()));
    std::fflush(stdout);
}

void run_as_criterion(const std::string& name, const std::string& suite, double limit,
                      SuiteConfig cfg) {
    cfg.suite = suite;
    auto rep = run_suite(cfg);
    std::string detail = rep.scope;
    if (!rep.pass) {
        detail = rep.inconclusive ? "inconclusive: " : "failed: ";
        for (const auto& n : rep.notes) detail += n + "; ";
        for (const auto& c : rep.counterexamples) detail += c + "; ";
        for (const auto& a : rep.alarms) detail += "ALARM " + a + "; ";
    }
    report(name, rep.pass, rep.seconds, limit, detail);
}

// criterion 1: i(t_a^k(b), b) = |k| i(a,b)^2 over random catalog-derived pairs
void criterion_twist_identity() {
    auto t0 = Clock::now();
    const Catalog cat = Catalog::load("S2_1");
    std::mt19937 rng(20120728);
    std::vector<std::string> names = cat.curve_names();
    std::vector<Multicurve> gens;
    for (int i = 1; i <= 5; ++i) gens.push_back(cat.curve("chain.alpha" + std::to_string(i)));
    std::uniform_int_distribution<size_t> pick_name(0, names.size() - 1);
    std::uniform_int_distribution<int> pick_gen(0, 4), pick_sign(0, 1), pick_len(0, 2);
    long long checked = 0, bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Multicurve a = cat.curve(names[pick_name(rng)]);
        Multicurve b = cat.curve(names[pick_name(rng)]);
        int len = pick_len(rng);
        for (int s = 0; s < len; ++s) {
            const Multicurve& g = gens[pick_gen(rng)];
            long long p = pick_sign(rng) ? 1 : -1;
            a = dehn_twist(g, a, p);
            b = dehn_twist(g, b, p);
        }
        long long i0 = geometric_intersection(a, b);
        for (long long k = -3; k <= 3; ++k) {
            if (k == 0) continue;
            auto tb = dehn_twist(a, b, k);
            ++checked;
            if (geometric_intersection(tb, b) != std::llabs(k) * i0 * i0) ++bad;
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report("twist-intersection", bad == 0, secs, 30,
           std::to_string(checked) + " identities checked");
}

}  // namespace

int main() {
    std::printf("acceptance: exact checks at the shipped desk-scale bounds\n");
    SuiteConfig base = load_default_config("");
    base.cache_dir = "build/universe-cache";

    criterion_twist_identity();                                                   // 1
    run_as_criterion("min-cycle", "min-cycle", 300, base);                        // 2
    {  // 3: census facts over the same universe
        auto t0 = Clock::now();
        SuiteConfig cfg = base;
        cfg.suite = "no-small-bp-hex";
        auto r1 = run_suite(cfg);
        cfg.suite = "edge-types";
        auto r2 = run_suite(cfg);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        report("hexagon-census", r1.pass && r2.pass, secs, 300,
               r1.notes.empty() ? "" : r1.notes.front());
    }
    {  // 4: type-2 canon = zeta/exponent recovery + companion counts
        auto t0 = Clock::now();
        SuiteConfig cfg = base;
        cfg.suite = "type2-zeta";
        auto r1 = run_suite(cfg);
        cfg.suite = "type2-count";
        auto r2 = run_suite(cfg);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::string detail = r1.pass && r2.pass ? "zeta, m, companions, involution"
                                                : "type-2 canon failed";
        report("type2-canon", r1.pass && r2.pass, secs, 60, detail);
    }
    run_as_criterion("farey-lemma", "farey", 10, base);                           // 5
    run_as_criterion("type3-abundance", "type3-abundance", 30, base);             // 6
    run_as_criterion("tree-fibers", "fiber-tree", 120, base);                     // 7
    run_as_criterion("square-lemma", "square-lemma", 120, base);                  // 8
    run_as_criterion("phi-reconstruction", "phi-reconstruction", 180, base);      // 9
    run_as_criterion("arc-complexes", "link-surjectivity-smoke", 60, base);       // 10
    run_as_criterion("torelli-homology", "torelli-homology", 30, base);           // 11

    std::printf("%s: %d/11 criteria passed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
