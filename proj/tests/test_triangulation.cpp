#include "doctest.h"

#include "hexlab/triangulation.hpp"
#include "test_util.hpp"

using namespace hexlab;
using testutil::surface;

TEST_CASE("shipped surfaces have the expected invariants") {
    struct Row {
        const char* name;
        int genus, punctures, edges, tris;
    };
    for (Row r : {Row{"S2_1", 2, 1, 9, 6}, Row{"S1_1", 1, 1, 3, 2}, Row{"S1_2", 1, 2, 6, 4},
                  Row{"S1_3", 1, 3, 9, 6}, Row{"S0_4", 0, 4, 6, 4}, Row{"S0_5", 0, 5, 9, 6}}) {
        const Triangulation& T = surface(r.name);
        CAPTURE(r.name);
        CHECK(T.kind().genus == r.genus);
        CHECK(T.kind().punctures == r.punctures);
        CHECK(T.num_edges() == r.edges);
        CHECK(T.num_triangles() == r.tris);
        CHECK(3 * T.num_triangles() == 2 * T.num_edges());
        // rotational corner cycles partition all corners
        int total = 0;
        for (int v = 0; v < T.num_punctures(); ++v) total += T.corners_at(v).size();
        CHECK(total == T.num_sides());
    }
    CHECK(surface("S2_1").kind().euler_characteristic() == -3);
}

TEST_CASE("bad gluings are rejected") {
    // side glued to itself
    CHECK_THROWS_AS(Triangulation::build({{0, 1, 2}, {3, 4, 5}},
                                         {{0, 0}, {1, 4}, {2, 3}, {5, 5}}, {}, "bad"),
                    TriangulationError);
    // unpaired side
    CHECK_THROWS_AS(Triangulation::build({{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 4}}, {}, "bad"),
                    TriangulationError);
    // disconnected complex
    CHECK_THROWS_AS(Triangulation::build({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}},
                                         {{0, 3}, {1, 4}, {2, 5}, {6, 9}, {7, 10}, {8, 11}}, {},
                                         "bad"),
                    TriangulationError);
    // chi >= 0 cannot arise from a closed orientable gluing (S_{0,1}, S_{0,2}
    // have no ideal triangulations); the validation path stays for malformed
    // declared data, exercised through the json loader
    CHECK_THROWS_AS(Triangulation::from_json_text(
                        R"({"triangles": [[0,1,2],[3,4,5]], "gluing": [[0,3],[1,4],[2,5]],)"
                        R"( "punctures": [[0],[1],[2]], "boundary_punctures": []})"),
                    TriangulationError);  // declared orbits do not match
}

TEST_CASE("one-puncture octagon model accepted") {
    // the S2_1 build_triangulation example: computed genus/punctures
    const Triangulation& T = surface("S2_1");
    CHECK(T.kind() == SurfaceKind{2, 1, {0}});
}

TEST_CASE("once-punctured torus spec accepted (chi = -1)") {
    const Triangulation& T = surface("S1_1");
    CHECK(T.kind().genus == 1);
    CHECK(T.kind().euler_characteristic() == -1);
}

TEST_CASE("flip then flip back transports weights identically") {
    const Triangulation& T = surface("S2_1");
    std::vector<Weight> w(T.num_edges(), 0);
    // weights of some valid multicurve: fill via a simple admissible vector
    // (all edges weight 2 satisfies parity and triangle inequalities)
    for (auto& x : w) x = 2;
    REQUIRE(weights_admissible(T, w, nullptr));
    for (int e = 0; e < T.num_edges(); ++e) {
        if (!T.edge_is_flippable(e)) continue;
        auto w1 = T.transport_across_flip(e, w);
        Triangulation T1 = T.flipped(e);
        CHECK(T1.kind() == T.kind());
        auto w2 = T1.transport_across_flip(e, w1);
        Triangulation T2 = T1.flipped(e);
        CHECK(w2 == w);
        CHECK(T2.num_edges() == T.num_edges());
    }
}

TEST_CASE("flip of a self-folded edge is rejected") {
    // build a surface with a self-folded configuration: one-punctured torus
    // fan has none, so synthesize: two triangles glued so edge 0 has both
    // sides on triangle 0
    CHECK_THROWS_AS(
        [] {
            auto T = Triangulation::build({{0, 1, 2}, {3, 4, 5}}, {{0, 1}, {2, 3}, {4, 5}}, {}, "sf");
            if (!T.edge_is_flippable(0)) throw TriangulationError("flip of self-folded edge");
            return T;
        }(),
        TriangulationError);
}

TEST_CASE("octagon model has the identity automorphism") {
    const Triangulation& T = surface("S2_1");
    auto autos = T.automorphisms();
    CHECK(autos.size() >= 1);
    bool has_id = false;
    for (const auto& p : autos) {
        bool id = true;
        for (int s = 0; s < T.num_sides(); ++s) id = id && p[s] == s;
        has_id = has_id || id;
    }
    CHECK(has_id);
}

TEST_CASE("json round trip preserves structure") {
    const Triangulation& T = surface("S1_3");
    auto T2 = Triangulation::from_json_text(T.to_json_text());
    CHECK(T2 == T);
    CHECK(T2.kind() == T.kind());
}
