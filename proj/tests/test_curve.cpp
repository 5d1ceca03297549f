#include "doctest.h"

#include "hexlab/curve.hpp"
#include "test_util.hpp"

using namespace hexlab;
using testutil::slope;
using testutil::surface;

TEST_CASE("multicurve validation") {
    const Triangulation& T = surface("S2_1");
    std::vector<Weight> zero(T.num_edges(), 0);
    CHECK_THROWS_AS(validate_multicurve(T, zero), CurveError);  // empty excluded
    std::vector<Weight> odd(T.num_edges(), 0);
    odd[0] = 1;  // a single crossing violates parity in its triangles
    CHECK_THROWS_AS(validate_multicurve(T, odd), CurveError);
    std::vector<Weight> neg(T.num_edges(), 2);
    neg[3] = -2;
    CHECK_THROWS_AS(validate_multicurve(T, neg), CurveError);
}

TEST_CASE("slope curves on the punctured torus trace to one component") {
    const Triangulation& T = surface("S1_1");
    for (auto [p, q] : testutil::primitive_slopes(4)) {
        auto c = slope(T, p, q);
        CAPTURE(p);
        CAPTURE(q);
        auto cs = components(c);
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].multiplicity == 1);
        CHECK(cs[0].curve.w == c.w);
        CHECK(is_single_curve(c));
    }
}

TEST_CASE("components of a doubled curve and of a disjoint sum") {
    const Triangulation& T = surface("S1_1");
    auto a = slope(T, 1, 0);
    Multicurve dbl{&T, {2 * a.w[0], 2 * a.w[1], 2 * a.w[2]}};
    auto cs = components(dbl);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].multiplicity == 2);
    CHECK(cs[0].curve.w == a.w);
    CHECK_FALSE(is_single_curve(dbl));

    // (2,0) weights on the torus: two parallel copies of slope 1/0? no --
    // (0,2,2) is 2x slope(1,0); a genuinely disjoint sum needs S2_1, checked
    // in the cut tests
}

TEST_CASE("word reduction cancels spurs") {
    const Triangulation& T = surface("S1_1");
    auto a = slope(T, 1, 1);  // weights (1,1,0)
    Trace tr = trace_multicurve(a);
    REQUIRE(tr.comps.size() == 1);
    auto w = tr.comps[0].word;
    // insert a back-and-forth spur: exit s then immediately return
    std::vector<int> padded;
    padded.push_back(w[0]);
    int anyside = Triangulation::side_id(Triangulation::tri_of(T.partner(w[0])), 0);
    if (anyside == T.partner(w[0]))
        anyside = Triangulation::side_id(Triangulation::tri_of(T.partner(w[0])), 1);
    padded.push_back(anyside);
    padded.push_back(T.partner(anyside));
    for (size_t i = 1; i < w.size(); ++i) padded.push_back(w[i]);
    auto red = reduce_cyclic_word(T, padded);
    CHECK(words_equal_cyclic(red, w));
    CHECK(curve_from_word(T, padded).w == a.w);
}

TEST_CASE("reversed word represents the same unoriented curve") {
    const Triangulation& T = surface("S1_1");
    auto a = slope(T, 2, 1);
    Trace tr = trace_multicurve(a);
    auto rev = reversed_word(T, tr.comps[0].word);
    CHECK(curve_from_word(T, rev).w == a.w);
    CHECK(canonical_unoriented(T, rev) == canonical_unoriented(T, tr.comps[0].word));
}
