#include "doctest.h"

#include <set>

#include "hexlab/catalog.hpp"
#include "hexlab/hexagon.hpp"
#include "hexlab/intersection.hpp"
#include "hexlab/twist.hpp"
#include "test_util.hpp"

using namespace hexlab;
using testutil::surface;

namespace {
const Catalog& cat() {
    static Catalog c = Catalog::load("S2_1");
    return c;
}
}  // namespace

TEST_CASE("cycle enumeration: no short cycles on simple graphs") {
    const Triangulation& T = surface("S2_1");
    auto verts = enumerate_vertices(T, 16, 0);
    auto view = build_torelli_view(T, verts, "t", 0);
    CHECK(find_simple_cycles(view, 2).empty());
    auto cycles = find_simple_cycles(view, 5);
    CHECK(cycles.empty());  // the minimal-cycle statement at this bound
}

TEST_CASE("is_hexagon accepts any input order and the fast path agrees") {
    auto theta = theta_base(cat());
    std::vector<TorelliVertex> shuffled = {theta.v[3], theta.v[0], theta.v[5],
                                           theta.v[2], theta.v[1], theta.v[4]};
    auto hx = is_hexagon(shuffled);
    REQUIRE(hx.has_value());
    CHECK(hx->v == theta.v);
    CHECK(hx->type == 3);
    // Lemma-style fast path on the alternating tuple, aligned to start at an
    // h-vertex
    std::array<TorelliVertex, 6> arr;
    int start = theta.v[0].tag == TorelliVertex::Tag::H ? 0 : 1;
    for (int i = 0; i < 6; ++i) arr[i] = theta.v[(start + i) % 6];
    CHECK(hexagon_fastpath_alternating(arr));
    // breaking one adjacency breaks both tests
    std::vector<TorelliVertex> bad = shuffled;
    bad[0] = bad[1];
    CHECK_FALSE(is_hexagon(bad).has_value());
}

TEST_CASE("a four-tuple with a non-adjacent consecutive pair is not a square") {
    // build the graph-E square context from the catalog and check rejection
    auto alpha = cat().curve("type1.alpha");
    auto a1 = make_bp_vertex(alpha, cat().curve("type1.b1"));
    auto a2 = make_bp_vertex(alpha, cat().curve("type1.f1"));
    ComplexView ev;
    ev.kind = ComplexKind{ComplexKind::GraphE};
    ev.tri = &cat().tri();
    ev.vertices = {a1, a2};
    ev.adj.assign(2, std::vector<char>(2, 0));  // no edges at all
    CHECK(find_squares(ev).empty());
}

TEST_CASE("type-2 builder normalizes the tuple and rejects a broken zeta") {
    auto a = make_bp_vertex(cat().curve("type2.a0"), cat().curve("type2.a1"));
    auto d = make_bp_vertex(cat().curve("type2.d0"), cat().curve("type2.d1"));
    auto b = cat().curve("type2.b");
    auto c = cat().curve("type2.c");
    auto zt = cat().curve("type2.zeta");
    // swapping b and c produces the same vertex set, hence the same hexagon
    auto h1 = build_type2_hexagon(a, b, c, d, zt, 1);
    auto h2 = build_type2_hexagon(a, c, b, d, zt, 1);
    CHECK(h1.v == h2.v);
    // twisting about a curve that meets the bounding pairs breaks the tuple
    CHECK_THROWS_AS(build_type2_hexagon(a, b, c, d, cat().curve("type2.a1"), 1),
                    KernelBugAlarm);
}

TEST_CASE("zeta and exponent recovery on a twisted copy (equivariance)") {
    auto a = make_bp_vertex(cat().curve("type2.a0"), cat().curve("type2.a1"));
    auto d = make_bp_vertex(cat().curve("type2.d0"), cat().curve("type2.d1"));
    auto b = cat().curve("type2.b");
    auto c = cat().curve("type2.c");
    auto zt = cat().curve("type2.zeta");
    auto hx = build_type2_hexagon(a, b, c, d, zt, 2);
    // translate the whole configuration by a twist word
    auto g = cat().curve("chain.alpha2");
    std::vector<TorelliVertex> img;
    for (const auto& v : hx.v) img.push_back(map_vertex({{g, 1}}, v));
    auto hg = is_hexagon(img);
    REQUIRE(hg.has_value());
    REQUIRE(hg->type == 2);
    auto [a0g, d0g] = special_curves(*hg);
    std::set<std::vector<Weight>> got = {a0g.w, d0g.w};
    std::set<std::vector<Weight>> want = {dehn_twist(g, cat().curve("type2.a0"), 1).w,
                                          dehn_twist(g, cat().curve("type2.d0"), 1).w};
    CHECK(got == want);
    CurvePool pool = make_curve_pool(cat().tri(), 26, 8);
    auto zg = zeta(*hg, pool);
    CHECK(zg.w == dehn_twist(g, zt, 1).w);
}

TEST_CASE("theta family rejects the excluded exponent loudly") {
    auto theta = theta_base(cat());
    auto L = theta_path_abcd(cat());
    auto alpha = cat().curve("type3.alpha");
    // the catalog configuration has its excluded value at n = 1
    bool rejected = false;
    try {
        type3_family(theta, L, alpha, 1);
    } catch (const CurveError& e) {
        rejected = std::string(e.what()).find("excluded") != std::string::npos;
    }
    CHECK(rejected);
    // nearby exponents build genuine type-3 hexagons
    for (long long n : {2LL, 3LL, -1LL}) {
        auto h = type3_family(theta, L, alpha, n);
        CHECK(h.type == 3);
    }
}

TEST_CASE("hexagon_path validates end membership") {
    auto theta = theta_base(cat());
    auto g = cat().curve("chain.alpha1");
    // a vertex foreign to the translate is rejected
    TorelliVertex wrong = make_bp_vertex(cat().curve("type2.a0"), cat().curve("type2.a1"));
    bool in_translate = false;
    for (const auto& v : theta.v)
        in_translate = in_translate || map_vertex({{g, 1}}, v) == wrong;
    REQUIRE_FALSE(in_translate);
    CHECK_THROWS_AS(hexagon_path(cat(), theta.v[0], wrong, {{g, 1}}), CurveError);
    // u must lie in theta
    CHECK_THROWS_AS(hexagon_path(cat(), wrong, theta.v[0], {}), CurveError);
}

TEST_CASE("induced curve map: identity map returns the curve") {
    auto alpha = cat().curve("type1.alpha");
    auto hex = is_hexagon({make_h_vertex(cat().curve("type1.a")),
                           make_bp_vertex(alpha, cat().curve("type1.b1")),
                           make_h_vertex(cat().curve("type1.c")),
                           make_h_vertex(cat().curve("type1.d")),
                           make_h_vertex(cat().curve("type1.e")),
                           make_bp_vertex(alpha, cat().curve("type1.f1"))});
    REQUIRE(hex.has_value());
    auto id_phi = [](const TorelliVertex& v) { return v; };
    CHECK(induce_curve_map(id_phi, alpha, {*hex}).w == alpha.w);
    // separating curves map directly through phi
    auto sep = cat().curve("type1.a");
    CHECK(induce_curve_map(id_phi, sep, {}).w == sep.w);
    // no witness -> bound-too-small, not an alarm
    auto other = cat().curve("chain.alpha3");
    CHECK_THROWS_AS(induce_curve_map(id_phi, other, {*hex}), BoundTooSmall);
}

TEST_CASE("twist words preserve intersection numbers") {
    std::mt19937 rng(7);
    std::vector<Multicurve> gens;
    for (int i = 1; i <= 5; ++i) gens.push_back(cat().curve("chain.alpha" + std::to_string(i)));
    std::vector<std::string> names = {"type2.b", "type2.zeta", "type3.b0", "type1.alpha",
                                      "type1.a"};
    std::uniform_int_distribution<int> pg(0, 4), ps(0, 1);
    for (int trial = 0; trial < 6; ++trial) {
        auto a = cat().curve(names[trial % names.size()]);
        auto b = cat().curve(names[(trial + 2) % names.size()]);
        long long before = geometric_intersection(a, b);
        for (int s = 0; s < 3; ++s) {
            const auto& g = gens[pg(rng)];
            long long p = ps(rng) ? 1 : -1;
            a = dehn_twist(g, a, p);
            b = dehn_twist(g, b, p);
        }
        CHECK(geometric_intersection(a, b) == before);
    }
}
