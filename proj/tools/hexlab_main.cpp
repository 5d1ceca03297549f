// hexlab: curve calculus and Torelli-complex verification suites
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hexlab/arc.hpp"
#include "hexlab/catalog.hpp"
#include "hexlab/cut.hpp"
#include "hexlab/explorer.hpp"
#include "hexlab/hexagon.hpp"
#include "hexlab/homology.hpp"
#include "hexlab/intersection.hpp"
#include "hexlab/suites.hpp"
#include "hexlab/twist.hpp"

using namespace hexlab;

namespace {

struct Session {
    std::string surface = "S2_1";
    std::unique_ptr<Catalog> cat;
    std::unique_ptr<Triangulation> tri;

    const Triangulation& T() {
        if (!tri) tri = std::make_unique<Triangulation>(load_surface(surface));
        return *tri;
    }
    const Catalog* catalog() {
        if (!cat) {
            try {
                cat = std::make_unique<Catalog>(Catalog::load(surface));
            } catch (const std::exception&) {
                return nullptr;
            }
        }
        return cat.get();
    }

    // a catalog name or an inline comma-separated weight vector
    Multicurve resolve(const std::string& spec) {
        if (spec.find(',') != std::string::npos) {
            std::vector<Weight> w;
            std::string cur;
            for (char ch : spec + ",") {
                if (ch == ',') {
                    w.push_back(std::stoll(cur));
                    cur.clear();
                } else if (!isspace(ch)) {
                    cur += ch;
                }
            }
            return validate_multicurve(T(), w);
        }
        const Catalog* c = catalog();
        if (!c) throw CurveError("no catalog for " + surface + "; pass inline weights");
        Multicurve m = c->curve(spec);
        return Multicurve{&T(), m.w};  // rebind to the session triangulation
    }
};

int cmd_suite(Session& ses, const std::string& name, SuiteConfig cfg) {
    cfg.suite = name;
    cfg.surface = ses.surface;
    auto rep = run_suite(cfg);
    std::printf("%-24s %s (%.1fs)\n", rep.suite.c_str(),
                rep.pass ? "PASS" : (rep.inconclusive ? "INCONCLUSIVE" : "FAIL"), rep.seconds);
    std::printf("  scope: %s\n", rep.scope.c_str());
    for (const auto& n : rep.notes) std::printf("  note: %s\n", n.c_str());
    for (const auto& c : rep.counterexamples) std::printf("  counterexample: %s\n", c.c_str());
    for (const auto& a : rep.alarms) std::printf("  ALARM: %s\n", a.c_str());
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curve kernel and Torelli-complex explorer for small surfaces"};
    app.require_subcommand(1);

    Session ses;
    SuiteConfig cfg = load_default_config("");

    // suite runner
    auto* suite = app.add_subcommand("suite", "run a named verification suite");
    std::string suite_name;
    suite->add_option("name", suite_name, "suite name, or 'list'")->required();
    suite->add_option("--surface", ses.surface, "model surface id");
    suite->add_option("--weight-bound", cfg.weight_bound, "vertex universe weight bound");
    suite->add_option("--sep-weight-bound", cfg.sep_weight_bound,
                      "separating-curve universe bound");
    suite->add_option("--pool-bound", cfg.pool_bound, "zeta/eta search pool bound");
    suite->add_option("--arc-bound", cfg.arc_bound, "arc enumeration bound");
    suite->add_option("--radius", cfg.radius, "orbit ball radius");
    suite->add_option("--exponent-bound", cfg.exponent_bound, "twist exponent bound");
    suite->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
    suite->add_option("--out", cfg.out_dir, "directory for report json");
    suite->add_option("--cache", cfg.cache_dir, "universe cache directory");
    suite->add_option("--format", cfg.format, "export format (json, dot)");
    suite->add_option("--seed", cfg.seed, "rng seed for sampled checks");

    // curve desk commands
    auto* curve = app.add_subcommand("curve", "single curve operations");
    std::string op, arg1, arg2;
    long long power = 1;
    curve->add_option("op", op, "intersect | twist | classify | cut | homology")->required();
    curve->add_option("a", arg1, "curve name or inline weights")->required();
    curve->add_option("b", arg2, "second curve (intersect / twist)");
    curve->add_option("-m,--power", power, "twist power");
    curve->add_option("--surface", ses.surface, "model surface id");

    // exports
    auto* exp = app.add_subcommand("export", "export a view or catalog hexagon");
    std::string what = "theta", out_path, format = "json";
    Weight export_bound = 14;
    exp->add_option("what", what, "theta | universe")->required();
    exp->add_option("--surface", ses.surface, "model surface id");
    exp->add_option("--weight-bound", export_bound, "universe bound for 'universe'");
    exp->add_option("--format", format, "json | dot");
    exp->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (suite->parsed()) {
            if (suite_name == "list") {
                for (const auto& n : suite_names()) std::printf("%s\n", n.c_str());
                return 0;
            }
            return cmd_suite(ses, suite_name, cfg);
        }
        if (curve->parsed()) {
            if (op == "intersect") {
                auto a = ses.resolve(arg1), b = ses.resolve(arg2);
                std::printf("%lld\n", geometric_intersection(a, b));
            } else if (op == "twist") {
                auto a = ses.resolve(arg1), b = ses.resolve(arg2);
                std::printf("%s\n", weights_to_string(dehn_twist(a, b, power).w).c_str());
            } else if (op == "classify") {
                auto a = ses.resolve(arg1);
                if (!is_essential(a)) {
                    std::printf("inessential\n");
                } else if (!is_separating(a)) {
                    std::printf("non-separating\n");
                } else {
                    auto k = classify_separating(a);
                    std::printf("separating, %s\n", k == SeparatingKind::HCurve ? "h-curve"
                                                    : k == SeparatingKind::PCurve ? "p-curve"
                                                                                  : "other");
                }
            } else if (op == "cut") {
                auto a = ses.resolve(arg1);
                auto rep = cut_invariants(a);
                for (const auto& p : rep.pieces)
                    std::printf("piece: genus %d, %d boundary circles, %zu punctures\n",
                                p.genus, p.num_boundary(), p.punctures.size());
            } else if (op == "homology") {
                auto a = ses.resolve(arg1);
                auto B = homology_basis(*a.tri);
                auto h = homology_class(a, B);
                std::string s = "[";
                for (size_t i = 0; i < h.size(); ++i)
                    s += (i ? "," : "") + std::to_string(h[i]);
                std::printf("%s]\n", s.c_str());
            } else {
                std::fprintf(stderr, "unknown curve op %s\n", op.c_str());
                return 3;
            }
            return 0;
        }
        if (exp->parsed()) {
            std::string text;
            if (what == "theta") {
                const Catalog* c = ses.catalog();
                if (!c) throw CurveError("no catalog for " + ses.surface);
                auto theta = theta_base(*c);
                ComplexView view;
                view.kind = ComplexKind{ComplexKind::Torelli};
                view.tri = &c->tri();
                view.provenance = "catalog theta";
                view.vertices.assign(theta.v.begin(), theta.v.end());
                view.adj.assign(6, std::vector<char>(6, 0));
                for (int i = 0; i < 6; ++i)
                    for (int j = 0; j < 6; ++j)
                        view.adj[i][j] =
                            (i != j) && vertices_adjacent(theta.v[i], theta.v[j]) ? 1 : 0;
                text = (format == "dot") ? export_dot(view) : export_json(view);
            } else if (what == "universe") {
                const Triangulation& T = ses.T();
                auto verts = enumerate_vertices(T, export_bound, 0);
                auto view = build_torelli_view(
                    T, verts, ses.surface + " weight<=" + std::to_string(export_bound), 0);
                text = (format == "dot") ? export_dot(view) : export_json(view);
            } else {
                std::fprintf(stderr, "unknown export %s\n", what.c_str());
                return 3;
            }
            if (out_path.empty()) {
                std::fputs(text.c_str(), stdout);
            } else {
                std::ofstream f(out_path);
                f << text;
            }
            return 0;
        }
    } catch (const KernelBugAlarm& e) {
        std::fprintf(stderr, "ALARM: %s\n", e.what());
        return 1;
    } catch (const BoundTooSmall& e) {
        std::fprintf(stderr, "inconclusive: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 3;
}
