#include "doctest.h"

#include "hexlab/intersection.hpp"
#include "hexlab/overlay.hpp"
#include "test_util.hpp"

using namespace hexlab;
using testutil::slope;
using testutil::surface;

TEST_CASE("punctured torus: i(p/q, r/s) = |ps - qr| on both routes") {
    const Triangulation& T = surface("S1_1");
    auto slopes = testutil::primitive_slopes(3);
    for (auto [p, q] : slopes)
        for (auto [r, s] : slopes) {
            auto a = slope(T, p, q);
            auto b = slope(T, r, s);
            long long expect = std::llabs(p * s - q * r);
            CAPTURE(p);
            CAPTURE(q);
            CAPTURE(r);
            CAPTURE(s);
            CHECK(geometric_intersection(a, b) == expect);
            CHECK(oracle_intersection(a, b) == expect);
        }
}

TEST_CASE("i is symmetric and vanishes on the diagonal") {
    const Triangulation& T = surface("S1_1");
    auto slopes = testutil::primitive_slopes(3);
    for (auto [p, q] : slopes) {
        auto a = slope(T, p, q);
        CHECK(geometric_intersection(a, a) == 0);
        for (auto [r, s] : slopes) {
            auto b = slope(T, r, s);
            CHECK(geometric_intersection(a, b) == geometric_intersection(b, a));
        }
    }
}

TEST_CASE("multicurve summation rule") {
    const Triangulation& T = surface("S1_1");
    auto a = slope(T, 1, 0);
    auto b = slope(T, 0, 1);
    auto c = slope(T, 1, 1);
    // sigma = a + a (two parallel copies): i(c, sigma) = 2 i(c, a)
    Multicurve sigma{&T, {2 * a.w[0], 2 * a.w[1], 2 * a.w[2]}};
    CHECK(geometric_intersection(c, sigma) == 2 * geometric_intersection(c, a));
    CHECK(geometric_intersection(b, sigma) == 2 * geometric_intersection(b, a));
}

TEST_CASE("mismatched triangulations rejected") {
    const Triangulation& T1 = surface("S1_1");
    const Triangulation& T2 = surface("S2_1");
    auto a = slope(T1, 1, 0);
    Multicurve b{&T2, std::vector<Weight>(T2.num_edges(), 2)};
    CHECK_THROWS_AS(geometric_intersection(a, b), CurveError);
}

TEST_CASE("S2_1: linked-class count agrees with the overlay oracle") {
    const Triangulation& T = surface("S2_1");
    // a deterministic family of admissible weight vectors
    std::vector<std::vector<Weight>> vs;
    for (int k = 1; k <= 3; ++k) {
        std::vector<Weight> w(T.num_edges(), 2 * k);
        vs.push_back(w);
        w[4] += 2;
        w[5] += 2;
        if (weights_admissible(T, w, nullptr)) vs.push_back(w);
        std::vector<Weight> u(T.num_edges(), 0);
        u[0] = u[1] = u[4] = k;
        u[4] = 2 * k;  // keep triangle sums even
        if (weights_admissible(T, u, nullptr)) vs.push_back(u);
    }
    int checked = 0;
    for (const auto& wa : vs)
        for (const auto& wb : vs) {
            Multicurve a{&T, wa}, b{&T, wb};
            CAPTURE(weights_to_string(wa));
            CAPTURE(weights_to_string(wb));
            CHECK(geometric_intersection(a, b) == oracle_intersection(a, b));
            ++checked;
        }
    CHECK(checked >= 9);
}
