#include "doctest.h"

#include "hexlab/homology.hpp"
#include "hexlab/intersection.hpp"
#include "hexlab/twist.hpp"
#include "test_util.hpp"

using namespace hexlab;
using testutil::slope;
using testutil::surface;

TEST_CASE("homology rank matches 2g + p - 1") {
    CHECK(homology_basis(surface("S1_1")).rank == 2);
    CHECK(homology_basis(surface("S2_1")).rank == 4);
    CHECK(homology_basis(surface("S1_2")).rank == 3);
    CHECK(homology_basis(surface("S0_4")).rank == 3);
}

TEST_CASE("algebraic intersection: antisymmetry and |alg| <= geom") {
    const Triangulation& T = surface("S1_1");
    auto slopes = testutil::primitive_slopes(3);
    for (auto [p, q] : slopes)
        for (auto [r, s] : slopes) {
            auto a = slope(T, p, q);
            auto b = slope(T, r, s);
            long long ab = algebraic_intersection(a, b);
            long long ba = algebraic_intersection(b, a);
            CHECK(ab == -ba);
            CHECK(std::llabs(ab) <= geometric_intersection(a, b));
        }
}

TEST_CASE("on the torus |alg| equals geom") {
    const Triangulation& T = surface("S1_1");
    auto slopes = testutil::primitive_slopes(3);
    for (auto [p, q] : slopes)
        for (auto [r, s] : slopes) {
            auto a = slope(T, p, q);
            auto b = slope(T, r, s);
            CHECK(std::llabs(algebraic_intersection(a, b)) == std::llabs(p * s - q * r));
        }
}

TEST_CASE("twist acts on homology by [t_a(b)] = [b] + <a,b>[a] up to global sign") {
    const Triangulation& T = surface("S1_1");
    auto B = homology_basis(T);
    auto slopes = testutil::primitive_slopes(2);
    for (auto [p, q] : slopes)
        for (auto [r, s] : slopes) {
            auto a = slope(T, p, q);
            auto b = slope(T, r, s);
            if (a.w == b.w) continue;
            auto tb = dehn_twist(a, b, 1);
            auto ca = homology_class(a, B);
            auto cb = homology_class(b, B);
            long long n = algebraic_intersection(a, b);
            std::vector<long long> want(B.rank);
            for (int i = 0; i < B.rank; ++i) want[i] = cb[i] + n * ca[i];
            auto got = homology_class(tb, B);
            CAPTURE(p); CAPTURE(q); CAPTURE(r); CAPTURE(s);
            bool match = (got == want) || (got == negated(want));
            CHECK(match);
        }
}
