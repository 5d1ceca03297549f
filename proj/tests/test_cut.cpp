#include "doctest.h"

#include "hexlab/cut.hpp"
#include "hexlab/intersection.hpp"
#include "test_util.hpp"

using namespace hexlab;
using testutil::slope;
using testutil::surface;

TEST_CASE("cutting the punctured torus along a slope") {
    const Triangulation& T = surface("S1_1");
    auto a = slope(T, 1, 0);
    auto rep = cut_invariants(a);
    REQUIRE(rep.pieces.size() == 1);
    CHECK(rep.pieces[0].genus == 0);
    CHECK(rep.pieces[0].num_boundary() == 2);
    CHECK(rep.pieces[0].punctures == std::vector<int>{0});
    CHECK_FALSE(is_separating(a));
    CHECK(is_essential(a));
    CHECK(classify_separating(a) == SeparatingKind::NotSeparating);
}

TEST_CASE("cut along repeated component rejected") {
    const Triangulation& T = surface("S1_1");
    auto a = slope(T, 1, 0);
    Multicurve dbl{&T, {2 * a.w[0], 2 * a.w[1], 2 * a.w[2]}};
    CHECK_THROWS_AS(cut_invariants(dbl), CurveError);
}

TEST_CASE("chi additivity over pieces") {
    const Triangulation& T = surface("S2_1");
    Multicurve m{&T, std::vector<Weight>(T.num_edges(), 2)};
    auto rep = cut_invariants(m);  // throws internally if additivity fails
    CHECK(rep.pieces.size() >= 1);
}
