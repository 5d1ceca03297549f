#include "hexlab/suites.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hexlab/arc.hpp"
#include "hexlab/catalog.hpp"
#include "hexlab/cut.hpp"
#include "hexlab/farey.hpp"
#include "hexlab/hexagon.hpp"
#include "hexlab/homology.hpp"
#include "hexlab/intersection.hpp"
#include "hexlab/overlay.hpp"
#include "hexlab/twist.hpp"
#include "json.hpp"

namespace hexlab {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::vector<std::string> suite_names() {
    return {"min-cycle",      "edge-types",        "no-small-bp-hex", "type1-rigidity",
            "type2-count",    "type2-zeta",        "farey",           "type3-abundance",
            "hexagon-connectivity", "fiber-tree",  "square-lemma",    "phi-reconstruction",
            "link-surjectivity-smoke", "torelli-homology"};
}

SuiteConfig SuiteConfig::defaults(const std::string& suite) {
    SuiteConfig cfg;
    cfg.suite = suite;
    return cfg;
}

SuiteConfig load_default_config(const std::string& suite) {
    SuiteConfig cfg = SuiteConfig::defaults(suite);
    std::ifstream in(data_dir() + "/default_config.json");
    if (!in) return cfg;
    json j = json::parse(in);
    cfg.weight_bound = j.value("weight_bound", cfg.weight_bound);
    cfg.sep_weight_bound = j.value("sep_weight_bound", cfg.sep_weight_bound);
    cfg.pool_bound = j.value("pool_bound", cfg.pool_bound);
    cfg.arc_bound = j.value("arc_bound", cfg.arc_bound);
    cfg.radius = j.value("radius", cfg.radius);
    cfg.exponent_bound = j.value("exponent_bound", cfg.exponent_bound);
    cfg.cycle_max_len = j.value("cycle_max_len", cfg.cycle_max_len);
    cfg.dual_arc_bound = j.value("dual_arc_bound", cfg.dual_arc_bound);
    cfg.samples = j.value("samples", cfg.samples);
    cfg.seed = j.value("seed", cfg.seed);
    return cfg;
}

std::string SuiteReport::to_json_text() const {
    json j;
    j["schema"] = "hexlab-report-1";
    j["suite"] = suite;
    j["scope"] = scope;
    j["pass"] = pass;
    j["inconclusive"] = inconclusive;
    j["exit_code"] = exit_code();
    j["notes"] = notes;
    j["counterexamples"] = counterexamples;
    j["alarms"] = alarms;
    j["seconds"] = seconds;
    return j.dump(1);
}

namespace {

const Triangulation& surface_of(const std::string& name) {
    static std::map<std::string, Triangulation> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, load_surface(name)).first;
    return it->second;
}

const Catalog& catalog_of(const std::string& name) {
    static std::map<std::string, Catalog> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, Catalog::load(name)).first;
    return it->second;
}

uint64_t fnv(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Torelli vertex universe at a weight bound, disk-cached
ComplexView universe_view(const SuiteConfig& cfg) {
    const Triangulation& T = surface_of(cfg.surface);
    std::string scope = cfg.surface + " weight<=" + std::to_string(cfg.weight_bound);
    if (!cfg.cache_dir.empty()) {
        std::filesystem::create_directories(cfg.cache_dir);
        std::string path = cfg.cache_dir + "/universe_" +
                           std::to_string(fnv(scope + ":view-1")) + ".json";
        std::ifstream in(path);
        if (in) {
            std::ostringstream ss;
            ss << in.rdbuf();
            return import_json(T, ss.str());
        }
        auto verts = enumerate_vertices(T, cfg.weight_bound, cfg.workers);
        auto view = build_torelli_view(T, verts, scope, cfg.workers);
        std::ofstream out(path);
        out << export_json(view);
        return view;
    }
    auto verts = enumerate_vertices(T, cfg.weight_bound, cfg.workers);
    return build_torelli_view(T, verts, scope, cfg.workers);
}

std::vector<Hexagon> hexagons_of(const ComplexView& view, int max_len,
                                 std::vector<int>* census) {
    auto cycles = find_simple_cycles(view, max_len);
    std::vector<Hexagon> hexes;
    if (census) census->assign(std::max(7, max_len + 1), 0);
    for (const auto& c : cycles) {
        if (census) (*census)[c.size()] += 1;
        if (c.size() != 6) continue;
        std::vector<TorelliVertex> six;
        for (int i : c) six.push_back(view.vertices[i]);
        auto hx = is_hexagon(six);
        if (!hx) throw KernelBugAlarm("6-cycle failed the hexagon conditions");
        hexes.push_back(*hx);
    }
    return hexes;
}

std::string wstr(const std::vector<Weight>& w) { return weights_to_string(w); }

// deterministic random twist words over the chain generators
std::vector<std::vector<TwistStep>> random_words(const Catalog& cat, int count, int max_len,
                                                 std::mt19937* rng) {
    std::vector<Multicurve> gens;
    for (int i = 1; i <= 5; ++i) gens.push_back(cat.curve("chain.alpha" + std::to_string(i)));
    std::uniform_int_distribution<int> pick_gen(0, 4), pick_pow(0, 1), pick_len(1, max_len);
    std::vector<std::vector<TwistStep>> out;
    for (int i = 0; i < count; ++i) {
        int len = pick_len(*rng);
        std::vector<TwistStep> word;
        for (int j = 0; j < len; ++j)
            word.push_back({gens[pick_gen(*rng)], pick_pow(*rng) ? 1LL : -1LL});
        out.push_back(word);
    }
    return out;
}

// ---------------------------------------------------------------- suites ---

void suite_min_cycle(const SuiteConfig& cfg, SuiteReport* rep) {
    auto view = universe_view(cfg);
    rep->scope = view.provenance + ", " + std::to_string(view.size()) + " vertices";
    std::vector<int> census;
    auto hexes = hexagons_of(view, std::max(6, cfg.cycle_max_len), &census);
    for (int len = 3; len <= 5; ++len)
        if (census[len] > 0)
            rep->counterexamples.push_back("cycle of length " + std::to_string(len));
    rep->notes.push_back("cycle census: 3:" + std::to_string(census[3]) + " 4:" +
                         std::to_string(census[4]) + " 5:" + std::to_string(census[5]) +
                         " 6:" + std::to_string(census[6]));
    if (hexes.empty()) {
        rep->inconclusive = true;
        rep->notes.push_back("no hexagon found within bound");
        return;
    }
    rep->pass = rep->counterexamples.empty();
}

void suite_edge_types(const SuiteConfig& cfg, SuiteReport* rep) {
    auto view = universe_view(cfg);
    rep->scope = view.provenance + ", " + std::to_string(view.size()) + " vertices";
    long long bp_bp = 0, checked = 0;
    for (int i = 0; i < view.size(); ++i)
        for (int j = i + 1; j < view.size(); ++j) {
            if (!view.adj[i][j]) continue;
            ++checked;
            if (view.vertices[i].tag == TorelliVertex::Tag::BP &&
                view.vertices[j].tag == TorelliVertex::Tag::BP) {
                ++bp_bp;
                rep->counterexamples.push_back("BP-BP edge " + wstr(view.vertices[i].merged.w) +
                                               " ~ " + wstr(view.vertices[j].merged.w));
            }
        }
    // every separating curve of the universe is an h-curve
    for (const auto& v : view.vertices) {
        if (v.tag != TorelliVertex::Tag::H) continue;
        if (classify_separating(v.first) != SeparatingKind::HCurve)
            rep->counterexamples.push_back("separating curve not an h-curve: " +
                                           wstr(v.first.w));
    }
    rep->notes.push_back(std::to_string(checked) + " edges checked");
    rep->pass = rep->counterexamples.empty();
}

void suite_no_small_bp_hex(const SuiteConfig& cfg, SuiteReport* rep) {
    auto view = universe_view(cfg);
    rep->scope = view.provenance;
    auto hexes = hexagons_of(view, 6, nullptr);
    int t1 = 0, t2 = 0, t3 = 0;
    for (const auto& h : hexes) {
        int bp = 0;
        for (const auto& v : h.v)
            if (v.tag == TorelliVertex::Tag::BP) ++bp;
        if (bp < 2)
            rep->alarms.push_back("hexagon with " + std::to_string(bp) + " BP-vertices");
        (h.type == 1 ? t1 : h.type == 2 ? t2 : t3) += 1;
    }
    rep->notes.push_back("hexagons: type1=" + std::to_string(t1) + " type2=" +
                         std::to_string(t2) + " type3=" + std::to_string(t3));
    if (hexes.empty()) {
        rep->inconclusive = true;
        return;
    }
    rep->pass = rep->alarms.empty();
}

ComplexView orbit_view(const SuiteConfig& cfg, const Catalog& cat,
                       const std::vector<TorelliVertex>& seeds,
                       const std::vector<std::string>& gen_names, int radius,
                       std::string label) {
    const Triangulation& T = cat.tri();
    std::vector<Multicurve> gens;
    for (const auto& g : gen_names) gens.push_back(cat.curve(g));
    auto verts = orbit_ball(T, seeds, gens, radius, cfg.workers);
    return build_torelli_view(T, verts, label + " orbit radius " + std::to_string(radius),
                              cfg.workers);
}

std::vector<TorelliVertex> catalog_type1_vertices(const Catalog& cat) {
    auto alpha = cat.curve("type1.alpha");
    return {make_h_vertex(cat.curve("type1.a")),
            make_bp_vertex(alpha, cat.curve("type1.b1")),
            make_h_vertex(cat.curve("type1.c")),
            make_h_vertex(cat.curve("type1.d")),
            make_h_vertex(cat.curve("type1.e")),
            make_bp_vertex(alpha, cat.curve("type1.f1"))};
}

void suite_type1_rigidity(const SuiteConfig& cfg, SuiteReport* rep) {
    const Catalog& cat = catalog_of(cfg.surface);
    auto view = orbit_view(cfg, cat, catalog_type1_vertices(cat),
                           {"gene.gamma1", "gene.gamma2"}, std::min(cfg.radius, 2), "type1");
    rep->scope = view.provenance + ", " + std::to_string(view.size()) + " vertices";
    auto hexes = hexagons_of(view, 6, nullptr);
    std::vector<Hexagon> t1s;
    for (const auto& h : hexes)
        if (h.type == 1) t1s.push_back(h);
    rep->notes.push_back(std::to_string(hexes.size()) + " hexagons, " +
                         std::to_string(t1s.size()) + " of type 1");
    if (t1s.empty()) {
        rep->inconclusive = true;
        return;
    }
    // Lemma 4.4: type-1 hexagons sharing a 3-path coincide
    auto shares_3path = [](const Hexagon& A, const Hexagon& B) {
        for (int s = 0; s < 6; ++s) {
            // 4 consecutive vertices of A inside B with edges
            std::array<const TorelliVertex*, 4> path{&A.v[s], &A.v[(s + 1) % 6],
                                                     &A.v[(s + 2) % 6], &A.v[(s + 3) % 6]};
            bool all = true;
            for (int k = 0; k + 1 < 4 && all; ++k) {
                int ib = B.index_of(*path[k]);
                if (ib < 0) {
                    all = false;
                    break;
                }
                bool next_ok = B.v[(ib + 1) % 6] == *path[k + 1] ||
                               B.v[(ib + 5) % 6] == *path[k + 1];
                all = all && next_ok;
            }
            if (all && B.index_of(*path[3]) >= 0) return true;
        }
        return false;
    };
    for (size_t i = 0; i < t1s.size(); ++i)
        for (size_t j = i + 1; j < t1s.size(); ++j) {
            if (!shares_3path(t1s[i], t1s[j])) continue;
            if (!(t1s[i].v == t1s[j].v))
                rep->counterexamples.push_back("distinct type-1 hexagons share a 3-path");
        }
    // shape constraint for any hexagon meeting a type-1 hexagon in a 3-path:
    // it contains at least one of the two BP-vertices
    for (const auto& h1 : t1s)
        for (const auto& h : hexes) {
            if (h.v == h1.v || !shares_3path(h1, h)) continue;
            bool has_bp = false;
            for (const auto& v : h1.v)
                if (v.tag == TorelliVertex::Tag::BP && h.contains(v)) has_bp = true;
            if (!has_bp)
                rep->counterexamples.push_back("3-path neighbor misses both BP-vertices");
        }
    rep->pass = rep->counterexamples.empty();
}

Hexagon catalog_type2_hexagon(const Catalog& cat, long long m) {
    auto a = make_bp_vertex(cat.curve("type2.a0"), cat.curve("type2.a1"));
    auto d = make_bp_vertex(cat.curve("type2.d0"), cat.curve("type2.d1"));
    return build_type2_hexagon(a, cat.curve("type2.b"), cat.curve("type2.c"), d,
                               cat.curve("type2.zeta"), m);
}

void suite_type2_zeta(const SuiteConfig& cfg, SuiteReport* rep) {
    const Catalog& cat = catalog_of(cfg.surface);
    CurvePool pool = make_curve_pool(cat.tri(), cfg.pool_bound, cfg.arc_bound);
    rep->scope = "catalog type-2 family, pool<=" + std::to_string(cfg.pool_bound);
    auto zt = cat.curve("type2.zeta");
    auto b = cat.curve("type2.b");
    for (long long m = -3; m <= 3; ++m) {
        if (m == 0) continue;
        auto hx = catalog_type2_hexagon(cat, m);
        auto z = zeta(hx, pool);
        if (!(z.w == zt.w)) {
            rep->counterexamples.push_back("zeta mismatch at m=" + std::to_string(m));
            continue;
        }
        long long got = twist_exponent(hx, z, cfg.exponent_bound);
        // the stored cyclic order may read the hexagon in either direction
        if (got != m && got != -m)
            rep->counterexamples.push_back("exponent " + std::to_string(got) + " at m=" +
                                           std::to_string(m));
        auto f = dehn_twist(zt, b, m);
        if (geometric_intersection(zt, b) != 2 || geometric_intersection(zt, f) != 2)
            rep->counterexamples.push_back("i(zeta, b/f) != 2 at m=" + std::to_string(m));
        auto [a0, d0] = special_curves(hx);
        if (!(a0.w == cat.curve("type2.a0").w) || !(d0.w == cat.curve("type2.d0").w))
            rep->counterexamples.push_back("special curves mismatch at m=" + std::to_string(m));
        // Lemma 5.4 piece: cutting along a0 u d0 is a five-ended sphere
        auto cut = cut_invariants(multicurve_union({a0, d0}));
        bool s05 = cut.pieces.size() == 1 && cut.pieces[0].genus == 0 &&
                   cut.pieces[0].num_boundary() == 4 && cut.pieces[0].punctures.size() == 1;
        if (!s05) rep->counterexamples.push_back("a0 u d0 cut is not S_{0,5}");
    }
    rep->pass = rep->counterexamples.empty();
}

void suite_type2_count(const SuiteConfig& cfg, SuiteReport* rep) {
    const Catalog& cat = catalog_of(cfg.surface);
    CurvePool pool = make_curve_pool(cat.tri(), cfg.pool_bound, cfg.arc_bound);
    rep->scope = "catalog type-2 family m in {-3..3}, pool<=" +
                 std::to_string(cfg.pool_bound) + ", arcs<=" + std::to_string(cfg.arc_bound);
    auto a = make_bp_vertex(cat.curve("type2.a0"), cat.curve("type2.a1"));
    auto b = cat.curve("type2.b");
    auto c = cat.curve("type2.c");
    auto zt = cat.curve("type2.zeta");
    for (long long m = -3; m <= 3; ++m) {
        if (m == 0) continue;
        auto hx = catalog_type2_hexagon(cat, m);
        std::array<TorelliVertex, 4> L{make_h_vertex(dehn_twist(zt, b, m)), a,
                                       make_h_vertex(b), make_h_vertex(c)};
        if (std::llabs(m) >= 2) {
            auto comps = companion_hexagons(hx, pool, cfg.exponent_bound, L);
            if (!comps.empty())
                rep->counterexamples.push_back("companion found at |m|=" +
                                               std::to_string(std::llabs(m)));
            continue;
        }
        auto comps = companion_hexagons(hx, pool, cfg.exponent_bound, L);
        if (comps.size() != 1) {
            rep->counterexamples.push_back("companion count " + std::to_string(comps.size()) +
                                           " at m=" + std::to_string(m));
            continue;
        }
        if (comps[0].exponent != -m)
            rep->counterexamples.push_back("companion exponent not -m at m=" +
                                           std::to_string(m));
        // companion of the companion through the same 3-path returns the start
        auto back = companion_hexagons(comps[0].hexagon, pool, cfg.exponent_bound, L);
        if (back.size() != 1 || !(back[0].hexagon.v == hx.v))
            rep->counterexamples.push_back("companion involution broken at m=" +
                                           std::to_string(m));
    }
    rep->pass = rep->counterexamples.empty();
}

void suite_farey(const SuiteConfig& cfg, SuiteReport* rep) {
    rep->scope = "exhaustive, height<=8, exponents<=8, both conventions";
    for (int sign : {+1, -1}) {
        auto r = verify_farey_lemma(8, 8, sign);
        rep->notes.push_back("sign " + std::to_string(sign) + ": checked " +
                             std::to_string(r.checked) + " pairs, gamma=" + r.gamma.str());
        if (!r.pass)
            for (const auto& s : r.counterexamples)
                rep->counterexamples.push_back("(" + s.delta.str() + ", m=" +
                                               std::to_string(s.m) + ", n=" +
                                               std::to_string(s.n) + ")");
    }
    // subsurface cross-check against the kernel (samples from the catalog)
    const Catalog& cat = catalog_of(cfg.surface);
    auto zt = cat.curve("type2.zeta");
    auto b = cat.curve("type2.b");
    std::set<std::vector<Weight>> orbit;
    for (long long n = -3; n <= 3; ++n) {
        auto img = dehn_twist(zt, b, n);
        orbit.insert(img.w);
        long long want = 4 * std::llabs(n);
        if (geometric_intersection(img, b) != want)
            rep->counterexamples.push_back("i(t_zeta^n b, b) != 4|n| at n=" +
                                           std::to_string(n));
    }
    if (orbit.size() != 7)
        rep->counterexamples.push_back("t_zeta orbit of b is not free on 7 exponents");
    rep->pass = rep->counterexamples.empty();
}

void suite_type3_abundance(const SuiteConfig& cfg, SuiteReport* rep) {
    const Catalog& cat = catalog_of(cfg.surface);
    auto theta = theta_base(cat);
    auto L = theta_path_abcd(cat);
    auto alpha = cat.curve("type3.alpha");
    rep->scope = "catalog theta, twists n = 1..10 about type3.alpha";
    std::set<std::array<std::vector<Weight>, 6>> seen;
    auto key_of = [](const Hexagon& h) {
        std::array<std::vector<Weight>, 6> k;
        for (int i = 0; i < 6; ++i) k[i] = h.v[i].merged.w;
        return k;
    };
    seen.insert(key_of(theta));
    int distinct = 0, excluded = 0;
    for (long long n = 1; distinct < 10 && n <= 16; ++n) {
        Hexagon h;
        try {
            h = type3_family(theta, L, alpha, n);
        } catch (const CurveError& e) {
            // the single excluded exponent with t^n(f) = b is expected
            ++excluded;
            rep->notes.push_back("n=" + std::to_string(n) + " rejected: " + e.what());
            continue;
        }
        if (h.type != 3) rep->counterexamples.push_back("family member not type 3");
        for (const auto& x : L)
            if (!h.contains(x)) rep->counterexamples.push_back("family member misses L");
        if (seen.insert(key_of(h)).second) ++distinct;
    }
    rep->notes.push_back(std::to_string(distinct) + " distinct hexagons through L");
    if (distinct < 10) rep->counterexamples.push_back("fewer than 10 distinct family members");
    if (excluded > 1)
        rep->alarms.push_back("more than one excluded exponent contradicts uniqueness");
    // n = 0 reproduces theta itself
    Hexagon h0 = type3_family(theta, L, alpha, 0);
    if (!(h0.v == theta.v)) rep->counterexamples.push_back("n = 0 did not return theta");
    rep->pass = rep->counterexamples.empty();
}

void suite_hexagon_connectivity(const SuiteConfig& cfg, SuiteReport* rep) {
    const Catalog& cat = catalog_of(cfg.surface);
    auto theta = theta_base(cat);
    rep->scope = "catalog theta and chain generators";
    // every generator image shares a 2-path with theta (checked inside
    // hexagon_path step by step)
    for (int i = 1; i <= 5; ++i)
        for (long long p : {+1LL, -1LL}) {
            auto g = cat.curve("chain.alpha" + std::to_string(i));
            auto path = hexagon_path(cat, theta.v[0], map_vertex({{g, p}}, theta.v[0]),
                                     {{g, p}});
            if (path.size() != 2)
                rep->counterexamples.push_back("single-step path has wrong length");
        }
    // a longer constructive chain: v = t1 t3 (b)
    auto t1 = cat.curve("chain.alpha1");
    auto t3 = cat.curve("chain.alpha3");
    TorelliVertex b = make_bp_vertex(cat.curve("type3.b0"), cat.curve("type3.b1"));
    TorelliVertex v = map_vertex({{t1, 1}, {t3, 1}}, b);
    auto path = hexagon_path(cat, b, v, {{t1, 1}, {t3, 1}});
    if (path.size() != 3) rep->counterexamples.push_back("t1 t3 chain has wrong length");
    rep->notes.push_back("chain of " + std::to_string(path.size()) + " hexagons verified");
    // u = v in theta: single hexagon
    auto trivial = hexagon_path(cat, theta.v[0], theta.v[0], {});
    if (trivial.size() != 1) rep->counterexamples.push_back("trivial path not a single hexagon");
    rep->pass = rep->counterexamples.empty();
}

void suite_fiber_tree(const SuiteConfig& cfg, SuiteReport* rep) {
    const Triangulation& T = surface_of(cfg.surface);
    auto curves = enumerate_single_curves(T, cfg.sep_weight_bound);
    std::vector<TorelliVertex> seps;
    for (const auto& c : curves)
        if (c.separating) seps.push_back(make_h_vertex(c.curve));
    auto view = build_sep_curve_view(T, seps, cfg.surface + " separating curves weight<=" +
                                                  std::to_string(cfg.sep_weight_bound),
                                     cfg.workers);
    rep->scope = view.provenance + ", " + std::to_string(view.size()) + " vertices";
    auto fib = fiber_forest_check(view);
    rep->notes.push_back(std::to_string(fib.fibers.size()) + " fibers, " +
                         std::to_string(fib.nontrivial_fibers) + " nontrivial");
    if (!fib.all_acyclic)
        for (const auto& cyc : fib.cycle_found)
            rep->counterexamples.push_back("cycle inside a fiber of size " +
                                           std::to_string(cyc.size()));
    if (fib.nontrivial_fibers < 3) {
        rep->inconclusive = true;
        rep->notes.push_back("fewer than 3 nontrivial fibers within bound");
        return;
    }
    // two curves in distinct fibers are never capped-isotopic (partition)
    int spot = 0;
    for (int i = 0; i < view.size() && spot < 50; ++i)
        for (int j = i + 1; j < view.size() && spot < 50; ++j) {
            if (fib.fiber_of[i] == fib.fiber_of[j] || !view.adj[i][j]) continue;
            ++spot;
            if (capped_isotopic(view.vertices[i].merged, view.vertices[j].merged))
                rep->counterexamples.push_back("capped-isotopic across fibers");
        }
    rep->pass = rep->counterexamples.empty() && fib.all_acyclic;
}

void suite_square_lemma(const SuiteConfig& cfg, SuiteReport* rep) {
    const Catalog& cat = catalog_of(cfg.surface);
    const Triangulation& T = cat.tri();
    auto alpha = cat.curve("type1.alpha");
    auto a1 = make_bp_vertex(alpha, cat.curve("type1.b1"));
    auto a2 = make_bp_vertex(alpha, cat.curve("type1.f1"));
    auto g1 = cat.curve("gene.gamma1");
    auto g2 = cat.curve("gene.gamma2");
    auto g3 = cat.curve("gene.gamma3");
    auto g4 = cat.curve("gene.gamma4");

    // BP set: the Lemma 7.4 square and generator translates of it
    std::vector<std::vector<TwistStep>> words = {{},         {{g3, 1}},  {{g4, 1}},
                                                 {{g3, -1}}, {{g4, -1}}, {{g3, 1}, {g4, 1}}};
    TorelliVertex d1 = map_vertex({{g2, 1}}, a1);
    TorelliVertex d2 = map_vertex({{g1, 1}}, a2);
    std::vector<TorelliVertex> bps;
    for (const auto& w : words)
        for (const auto& v : {a1, a2, d1, d2}) bps.push_back(map_vertex(w, v));
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    // h-universe: the witnesses of the base square's edges are the hexagon
    // translates under {id, t1, t2, t1 t2}; each square word composes on top
    std::vector<TorelliVertex> hseeds;
    for (const auto& name : {"type1.a", "type1.c", "type1.d", "type1.e"})
        hseeds.push_back(make_h_vertex(cat.curve(name)));
    std::vector<std::vector<TwistStep>> wit_words = {
        {}, {{g1, 1}}, {{g2, 1}}, {{g1, 1}, {g2, 1}}};
    std::vector<TorelliVertex> hverts;
    for (const auto& w : words)
        for (const auto& ww : wit_words) {
            std::vector<TwistStep> full = w;
            full.insert(full.end(), ww.begin(), ww.end());
            for (const auto& h : hseeds) hverts.push_back(map_vertex(full, h));
        }
    HUniverse H = make_h_universe(hverts, cfg.workers);
    rep->scope = "graph E over " + std::to_string(bps.size()) + " BPs, " +
                 std::to_string(H.hs.size()) + " h-vertices";

    ComplexView eview;
    eview.kind = ComplexKind{ComplexKind::GraphE};
    eview.tri = &T;
    eview.vertices = bps;
    int n = static_cast<int>(bps.size());
    eview.adj.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto w = find_type1_witness(bps[i], bps[j], H);
            if (w) eview.adj[i][j] = eview.adj[j][i] = 1;
        }
    auto squares = find_squares(eview);
    rep->notes.push_back(std::to_string(squares.size()) + " squares found");
    // the explicit Lemma 7.4 square is among them
    auto idx_of = [&](const TorelliVertex& v) {
        for (int i = 0; i < n; ++i)
            if (eview.vertices[i] == v) return i;
        return -1;
    };
    std::set<int> delta = {idx_of(a1), idx_of(a2), idx_of(d1), idx_of(d2)};
    bool have_delta = false;
    for (const auto& s : squares) {
        std::set<int> got(s.begin(), s.end());
        if (got == delta) have_delta = true;
    }
    if (!have_delta) rep->counterexamples.push_back("Lemma 7.4 square not found in graph E");
    if (static_cast<int>(squares.size()) < 5) {
        rep->inconclusive = rep->counterexamples.empty();
        rep->notes.push_back("fewer than 5 squares within scope");
    }
    // common curve through all four BPs of every square
    for (const auto& s : squares) {
        bool common = false;
        const auto& v0 = eview.vertices[s[0]];
        for (const Multicurve* cu : {&v0.first, &*v0.second}) {
            bool in_all = true;
            for (int k = 1; k < 4; ++k) {
                const auto& vk = eview.vertices[s[k]];
                in_all = in_all && (vk.first.w == cu->w || vk.second->w == cu->w);
            }
            common = common || in_all;
        }
        if (!common) rep->alarms.push_back("square without a common curve");
    }
    rep->pass = rep->counterexamples.empty() && rep->alarms.empty() &&
                static_cast<int>(squares.size()) >= 5;
}

void suite_phi_reconstruction(const SuiteConfig& cfg, SuiteReport* rep) {
    const Catalog& cat = catalog_of(cfg.surface);
    std::mt19937 rng(cfg.seed);
    auto alpha = cat.curve("type1.alpha");
    auto hex_vertices = catalog_type1_vertices(cat);
    auto base_hex = is_hexagon(hex_vertices);
    if (!base_hex || base_hex->type != 1) throw KernelBugAlarm("catalog type-1 invalid");
    auto g1 = cat.curve("gene.gamma1");

    auto words_g = random_words(cat, 20, 6, &rng);
    auto words_sample = random_words(cat, 10, 3, &rng);
    rep->scope = "phi = twist-word action, 20 words x 10 sample curves";
    int witness_pairs = 0;
    for (const auto& gw : words_g) {
        auto phi = [&](const TorelliVertex& v) { return map_vertex(gw, v); };
        for (const auto& sw : words_sample) {
            Multicurve a_s = apply_twist_word(sw, alpha);
            // witness: the translated catalog hexagon; second witness via the
            // alpha-stabilizing twist
            std::vector<Hexagon> witnesses;
            std::vector<TorelliVertex> img;
            for (const auto& v : base_hex->v) img.push_back(map_vertex(sw, v));
            auto w1 = is_hexagon(img);
            if (!w1 || w1->type != 1) throw KernelBugAlarm("translated witness broken");
            witnesses.push_back(*w1);
            {
                std::vector<TwistStep> tw = sw;
                // conjugated stabilizer twist: sw . t_gamma1
                tw.push_back({g1, 1});
                std::vector<TorelliVertex> img2;
                for (const auto& v : base_hex->v) img2.push_back(map_vertex(tw, v));
                auto w2 = is_hexagon(img2);
                if (w2 && w2->type == 1 && type1_shared_curve(*w2).alpha.w == a_s.w) {
                    witnesses.push_back(*w2);
                    ++witness_pairs;
                }
            }
            Multicurve got = induce_curve_map(phi, a_s, witnesses);
            Multicurve want = apply_twist_word(gw, a_s);
            if (!(got.w == want.w))
                rep->counterexamples.push_back("Phi(alpha) != g(alpha) for a sampled word");
        }
    }
    rep->notes.push_back(std::to_string(witness_pairs) + " samples had two witnesses");
    // disjointness preservation on sampled pairs
    std::vector<std::string> partners;
    for (const auto& name : cat.curve_names()) {
        if (name == "type1.alpha") continue;
        auto it = cat.intersections().find({std::min<std::string>(name, "type1.alpha"),
                                            std::max<std::string>(name, "type1.alpha")});
        if (it != cat.intersections().end() && it->second == 0) partners.push_back(name);
    }
    int pairs = 0;
    CurvePool pool = make_curve_pool(cat.tri(), cfg.pool_bound, cfg.arc_bound);
    std::vector<TorelliVertex> huniv;
    for (const auto& c : pool.curves)
        if (c.separating) huniv.push_back(make_h_vertex(c.curve));
    HUniverse H = make_h_universe(huniv, cfg.workers);
    for (const auto& gw : words_g) {
        if (pairs >= 50) break;
        auto phi = [&](const TorelliVertex& v) { return map_vertex(gw, v); };
        for (const auto& pname : partners) {
            if (pairs >= 50) break;
            Multicurve y = cat.curve(pname);
            Multicurve phi_alpha = induce_curve_map(phi, alpha, {*base_hex});
            Multicurve phi_y{&cat.tri(), {}};
            if (cat.classification(pname) != "nonsep") {
                phi_y = phi(make_h_vertex(y)).first;
            } else {
                auto wit = find_type1_through(y, pool, H);
                if (!wit) continue;
                phi_y = induce_curve_map(phi, y, {*wit});
            }
            ++pairs;
            if (geometric_intersection(phi_alpha, phi_y) != 0)
                rep->counterexamples.push_back("Phi broke disjointness for " + pname);
        }
    }
    rep->notes.push_back(std::to_string(pairs) + " disjoint pairs checked");
    if (pairs < 50) rep->inconclusive = rep->counterexamples.empty();
    rep->pass = rep->counterexamples.empty() && pairs >= 50;
}

void suite_link_surjectivity(const SuiteConfig& cfg, SuiteReport* rep) {
    const Triangulation& Y = surface_of("S1_2");
    auto view = build_arc_view(Y, cfg.dual_arc_bound, true);
    rep->scope = "D(S1_2 model), arcs with <= " + std::to_string(cfg.dual_arc_bound) +
                 " crossings, " + std::to_string(view.size()) + " vertices";
    auto sims = maximal_simplices(view);
    rep->notes.push_back(std::to_string(sims.size()) + " maximal simplices");
    int checked = 0;
    for (const auto& s : sims) {
        if (s.size() != 4) {
            rep->counterexamples.push_back("maximal simplex of size " +
                                           std::to_string(s.size()));
            continue;
        }
        std::vector<NormalArc> sys;
        for (int i : s) sys.push_back(view.arcs[i]);
        auto sides = complement_face_sides(sys);
        if (!(sides == std::vector<int>{4, 4}))
            rep->counterexamples.push_back("complement is not two squares");
        auto link = link_arcs_at_basepoint(view, s);
        if (link.size() != 2)
            rep->counterexamples.push_back("L(sigma) has " + std::to_string(link.size()) +
                                           " arcs");
        for (const auto& l : link) {
            bool nonsep = true;
            try {
                auto [c1, c2] = bp_from_arc(l);
                nonsep = is_bounding_pair(c1, c2);
            } catch (const CurveError&) {
                nonsep = false;
            }
            if (!nonsep) rep->counterexamples.push_back("L(sigma) arc is separating");
        }
        if (++checked >= 25) break;  // representative sample of the simplices
    }
    rep->notes.push_back(std::to_string(checked) + " simplices checked");
    rep->pass = rep->counterexamples.empty() && checked > 0;
}

void suite_torelli_homology(const SuiteConfig& cfg, SuiteReport* rep) {
    const Catalog& cat = catalog_of(cfg.surface);
    const Triangulation& T = cat.tri();
    auto B = homology_basis(T);
    auto sep = cat.curve("type1.a");
    auto bp1 = cat.curve("type1.alpha");
    auto bp2 = cat.curve("type1.b1");
    rep->scope = "generators t_{type1.a} and t_{alpha} t_{b1}^{-1} on catalog curves";
    int checked = 0;
    for (const auto& name : cat.curve_names()) {
        if (checked >= cfg.samples) break;
        if (cat.classification(name) != "nonsep") continue;
        auto x = cat.curve(name);
        auto hx = homology_class(x, B);
        auto y = dehn_twist(sep, x, 1);
        auto hy = homology_class(y, B);
        if (!(hy == hx || hy == negated(hx)))
            rep->counterexamples.push_back("separating twist moved [x] for " + name);
        auto z = dehn_twist(bp1, dehn_twist(bp2, x, -1), 1);
        auto hz = homology_class(z, B);
        if (!(hz == hx || hz == negated(hx)))
            rep->counterexamples.push_back("BP twist difference moved [x] for " + name);
        ++checked;
    }
    rep->notes.push_back(std::to_string(checked) + " sample curves");
    rep->pass = rep->counterexamples.empty() && checked >= std::min(cfg.samples, 15);
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = cfg.suite;
    auto t0 = Clock::now();
    try {
        if (cfg.suite == "min-cycle") suite_min_cycle(cfg, &rep);
        else if (cfg.suite == "edge-types") suite_edge_types(cfg, &rep);
        else if (cfg.suite == "no-small-bp-hex") suite_no_small_bp_hex(cfg, &rep);
        else if (cfg.suite == "type1-rigidity") suite_type1_rigidity(cfg, &rep);
        else if (cfg.suite == "type2-count") suite_type2_count(cfg, &rep);
        else if (cfg.suite == "type2-zeta") suite_type2_zeta(cfg, &rep);
        else if (cfg.suite == "farey") suite_farey(cfg, &rep);
        else if (cfg.suite == "type3-abundance") suite_type3_abundance(cfg, &rep);
        else if (cfg.suite == "hexagon-connectivity") suite_hexagon_connectivity(cfg, &rep);
        else if (cfg.suite == "fiber-tree") suite_fiber_tree(cfg, &rep);
        else if (cfg.suite == "square-lemma") suite_square_lemma(cfg, &rep);
        else if (cfg.suite == "phi-reconstruction") suite_phi_reconstruction(cfg, &rep);
        else if (cfg.suite == "link-surjectivity-smoke") suite_link_surjectivity(cfg, &rep);
        else if (cfg.suite == "torelli-homology") suite_torelli_homology(cfg, &rep);
        else throw CurveError("unknown suite " + cfg.suite);
    } catch (const BoundTooSmall& e) {
        rep.inconclusive = true;
        rep.pass = false;
        rep.notes.push_back(std::string("bound too small: ") + e.what());
    } catch (const KernelBugAlarm& e) {
        rep.pass = false;
        rep.alarms.push_back(e.what());
    }
    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        std::ofstream out(cfg.out_dir + "/" + cfg.suite + ".json");
        out << rep.to_json_text() << "\n";
    }
    return rep;
}

}  // namespace hexlab
