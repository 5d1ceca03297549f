#include "doctest.h"

#include "hexlab/catalog.hpp"
#include "hexlab/cut.hpp"
#include "hexlab/hexagon.hpp"
#include "hexlab/homology.hpp"
#include "hexlab/intersection.hpp"
#include "hexlab/overlay.hpp"
#include "hexlab/twist.hpp"

using namespace hexlab;

namespace {
const Catalog& cat21() {
    static Catalog c = Catalog::load("S2_1");
    return c;
}
const Catalog& cat13() {
    static Catalog c = Catalog::load("S1_3");
    return c;
}
}  // namespace

TEST_CASE("catalog curves validate and classifications are locked") {
    for (const Catalog* cat : {&cat21(), &cat13()}) {
        for (const auto& name : cat->curve_names()) {
            auto m = cat->curve(name);
            CAPTURE(name);
            CHECK(is_single_curve(m));
            CHECK(is_essential(m));
            const std::string& cls = cat->classification(name);
            if (cls == "nonsep") CHECK_FALSE(is_separating(m));
            if (cls == "h-curve") CHECK(classify_separating(m) == SeparatingKind::HCurve);
            if (cls == "p-curve") CHECK(classify_separating(m) == SeparatingKind::PCurve);
        }
    }
}

TEST_CASE("catalog intersection tables are regression-locked") {
    for (const Catalog* cat : {&cat21(), &cat13()}) {
        int oracle_checked = 0;
        for (const auto& [key, v] : cat->intersections()) {
            auto a = cat->curve(key.first);
            auto b = cat->curve(key.second);
            CAPTURE(key.first);
            CAPTURE(key.second);
            CHECK(geometric_intersection(a, b) == v);
            // spot-check the independent tightening oracle on small pairs
            if (oracle_checked < 25 && a.total_weight() + b.total_weight() <= 30) {
                CHECK(oracle_intersection(a, b) == v);
                ++oracle_checked;
            }
        }
        CHECK(oracle_checked >= 10);
    }
}

TEST_CASE("chain pattern and symplectic pairing of the basis") {
    const auto& c = cat21();
    std::vector<Multicurve> chain;
    for (int i = 1; i <= 5; ++i) chain.push_back(c.curve("chain.alpha" + std::to_string(i)));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(geometric_intersection(chain[i], chain[j]) == (std::abs(i - j) == 1 ? 1 : 0));
    // homology classes of alpha1..alpha4 form a basis with the standard
    // chain pairing (the degenerate part is trivial: one puncture)
    auto B = homology_basis(c.tri());
    REQUIRE(B.rank == 4);
    std::vector<std::vector<long long>> cls;
    for (int i = 0; i < 4; ++i) cls.push_back(homology_class(chain[i], B));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long long p = algebraic_intersection(chain[i], chain[j]);
            CHECK(std::llabs(p) == (std::abs(i - j) == 1 ? 1 : 0));
            CHECK(p == -algebraic_intersection(chain[j], chain[i]));
        }
    // basis: determinant of the 4 classes is +-1
    {
        long long det = 0;
        std::array<int, 4> perm{0, 1, 2, 3};
        std::sort(perm.begin(), perm.end());
        do {
            int sign = 1;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            long long term = sign;
            for (int i = 0; i < 4; ++i) term *= cls[i][perm[i]];
            det += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(std::llabs(det) == 1);
    }
}

TEST_CASE("type-1 catalog hexagon and shared-curve recovery") {
    const auto& c = cat21();
    auto alpha = c.curve("type1.alpha");
    auto bp1 = make_bp_vertex(alpha, c.curve("type1.b1"));
    auto bp2 = make_bp_vertex(alpha, c.curve("type1.f1"));
    auto hx = is_hexagon({make_h_vertex(c.curve("type1.a")), bp1,
                          make_h_vertex(c.curve("type1.c")), make_h_vertex(c.curve("type1.d")),
                          make_h_vertex(c.curve("type1.e")), bp2});
    REQUIRE(hx.has_value());
    CHECK(hx->type == 1);
    auto data = type1_shared_curve(*hx);
    CHECK(data.alpha.w == alpha.w);
    CHECK(data.downstairs.size() == 6);
    for (const auto& d : data.downstairs) CHECK(geometric_intersection(d, alpha) == 0);
    // equivariance: a twisted copy recovers the twisted curve
    auto g = c.curve("chain.alpha3");
    std::vector<TorelliVertex> image;
    for (const auto& v : hx->v) image.push_back(map_vertex({{g, 1}}, v));
    auto hg = is_hexagon(image);
    REQUIRE(hg.has_value());
    CHECK(hg->type == 1);
    CHECK(type1_shared_curve(*hg).alpha.w == dehn_twist(g, alpha, 1).w);
}

TEST_CASE("type-2 catalog base: zeta, exponents, special curves, S05 piece") {
    const auto& c = cat21();
    auto a = make_bp_vertex(c.curve("type2.a0"), c.curve("type2.a1"));
    auto d = make_bp_vertex(c.curve("type2.d0"), c.curve("type2.d1"));
    auto b = c.curve("type2.b");
    auto cc = c.curve("type2.c");
    auto zt = c.curve("type2.zeta");
    CurvePool pool = make_curve_pool(c.tri(), 22, 8);
    for (long long m : {-2LL, 1LL, 2LL}) {
        auto hx = build_type2_hexagon(a, b, cc, d, zt, m);
        CHECK(hx.type == 2);
        auto [a0, d0] = special_curves(hx);
        CHECK(a0.w == c.curve("type2.a0").w);
        CHECK(d0.w == c.curve("type2.d0").w);
        auto z = zeta(hx, pool);
        CHECK(z.w == zt.w);
        // the S_{0,5} piece of Lemma 5.4
        auto rep = cut_invariants(multicurve_union({a0, d0}));
        REQUIRE(rep.pieces.size() == 1);
        CHECK(rep.pieces[0].genus == 0);
        CHECK(rep.pieces[0].num_boundary() == 4);
        CHECK(rep.pieces[0].punctures.size() == 1);
        // i(zeta, b) = i(zeta, f) = 2
        auto f = dehn_twist(zt, b, m);
        CHECK(geometric_intersection(zt, b) == 2);
        CHECK(geometric_intersection(zt, f) == 2);
    }
    // b' and c' are the m = 1 twists
    CHECK(c.curve("type2.bprime").w == dehn_twist(zt, b, 1).w);
    CHECK(c.curve("type2.cprime").w == dehn_twist(zt, cc, 1).w);
    // eta relations: f = t_zeta(b) = t_eta+^{-1}(b), and the minus side
    CHECK(dehn_twist(c.curve("type2.eta_plus"), b, -1).w == dehn_twist(zt, b, 1).w);
    CHECK(dehn_twist(c.curve("type2.eta_minus"), b, 1).w == dehn_twist(zt, b, -1).w);
}

TEST_CASE("type-3 catalog hexagon from arcs with its fig-ns curves") {
    const auto& c = cat21();
    auto lb = c.arc("type3.lb");
    auto ld = c.arc("type3.ld");
    auto lf = c.arc("type3.lf");
    auto [b0, b1] = bp_from_arc(lb);
    auto [d0, d1] = bp_from_arc(ld);
    auto [f0, f1] = bp_from_arc(lf);
    CHECK(b0.w == c.curve("type3.b0").w);
    CHECK(b1.w == c.curve("type3.b1").w);
    CHECK(d0.w == c.curve("type3.d0").w);
    CHECK(f0.w == c.curve("type3.f0").w);
    auto hx = is_hexagon({make_h_vertex(c.curve("type3.a")), make_bp_vertex(b0, b1),
                          make_h_vertex(c.curve("type3.c")), make_bp_vertex(d0, d1),
                          make_h_vertex(c.curve("type3.e")), make_bp_vertex(f0, f1)});
    REQUIRE(hx.has_value());
    CHECK(hx->type == 3);
    // fig-ns disjointness + nondegeneracy
    auto al = c.curve("type3.alpha");
    auto be = c.curve("type3.beta");
    auto ga = c.curve("type3.gamma");
    auto B = multicurve_union({b0, b1});
    auto D = multicurve_union({d0, d1});
    auto F = multicurve_union({f0, f1});
    CHECK(geometric_intersection(al, c.curve("type3.a")) == 0);
    CHECK(geometric_intersection(al, D) == 0);
    CHECK(geometric_intersection(al, F) != 0);
    CHECK(geometric_intersection(be, B) == 0);
    CHECK(geometric_intersection(be, c.curve("type3.e")) == 0);
    CHECK(geometric_intersection(be, c.curve("type3.a")) != 0);
    CHECK(geometric_intersection(ga, c.curve("type3.c")) == 0);
    CHECK(geometric_intersection(ga, F) == 0);
    CHECK(geometric_intersection(ga, B) != 0);
}

TEST_CASE("every chain generator shares a 2-path between theta and its image") {
    const auto& c = cat21();
    auto hx = is_hexagon({make_h_vertex(c.curve("type3.a")),
                          make_bp_vertex(c.curve("type3.b0"), c.curve("type3.b1")),
                          make_h_vertex(c.curve("type3.c")),
                          make_bp_vertex(c.curve("type3.d0"), c.curve("type3.d1")),
                          make_h_vertex(c.curve("type3.e")),
                          make_bp_vertex(c.curve("type3.f0"), c.curve("type3.f1"))});
    REQUIRE(hx.has_value());
    for (int i = 1; i <= 5; ++i) {
        auto g = c.curve("chain.alpha" + std::to_string(i));
        for (long long p : {+1LL, -1LL}) {
            CAPTURE(i);
            CAPTURE(p);
            // three consecutive vertices fixed by the twist
            bool found = false;
            for (int s = 0; s < 6 && !found; ++s) {
                bool all = true;
                for (int k = 0; k < 3; ++k) {
                    auto img = map_vertex({{g, p}}, hx->v[(s + k) % 6]);
                    all = all && img == hx->v[(s + k) % 6];
                }
                found = all;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("S1_3 figure-1 hexagon downstairs") {
    const auto& c = cat13();
    std::vector<Multicurve> six = {c.curve("fig1.a"), c.curve("fig1.b1"), c.curve("fig1.c"),
                                   c.curve("fig1.d"), c.curve("fig1.e"), c.curve("fig1.f1")};
    for (int i = 0; i < 6; ++i) {
        long long v = geometric_intersection(six[i], six[(i + 1) % 6]);
        CHECK(v == 0);
        CHECK(geometric_intersection(six[i], six[(i + 2) % 6]) != 0);
        CHECK(geometric_intersection(six[i], six[(i + 3) % 6]) != 0);
    }
    CHECK(classify_separating(c.curve("fig1.b1")) == SeparatingKind::PCurve);
    CHECK(classify_separating(c.curve("fig1.f1")) == SeparatingKind::PCurve);
}

TEST_CASE("S1_3 figure-2 pentagon with its BP shape") {
    const auto& c = cat13();
    auto A = make_bp_vertex(c.curve("fig2.a0"), c.curve("fig2.a1"));
    auto Z = make_bp_vertex(c.curve("fig2.a0"), c.curve("fig2.zeta"));
    std::array<TorelliVertex, 5> v = {A, make_h_vertex(c.curve("fig2.b")),
                                      make_h_vertex(c.curve("fig2.c")),
                                      make_h_vertex(c.curve("fig2.d")), Z};
    for (int i = 0; i < 5; ++i) {
        CHECK(vertices_adjacent(v[i], v[(i + 1) % 5]));
        CHECK_FALSE(vertices_adjacent(v[i], v[(i + 2) % 5]));
    }
    // Lemma 5.1(i) shape: BPs adjacent, flanked by p-vertices, h in the middle
    CHECK(classify_separating(c.curve("fig2.b")) == SeparatingKind::PCurve);
    CHECK(classify_separating(c.curve("fig2.d")) == SeparatingKind::PCurve);
    CHECK(classify_separating(c.curve("fig2.c")) == SeparatingKind::HCurve);
    // the two disjoint BPs share a curve (Lemma 5.1(ii) mechanism)
    CHECK(c.curve("fig2.a0").w == c.curve("fig2.a0").w);
}

TEST_CASE("torelli generators fix homology classes up to sign") {
    const auto& c = cat21();
    auto B = homology_basis(c.tri());
    auto sep = c.curve("type1.a");
    auto bp1 = c.curve("type1.alpha");
    auto bp2 = c.curve("type1.b1");
    int checked = 0;
    for (const auto& name : c.curve_names()) {
        auto x = c.curve(name);
        if (c.classification(name) != "nonsep") continue;
        auto hx = homology_class(x, B);
        // separating twist
        auto y = dehn_twist(sep, x, 1);
        auto hy = homology_class(y, B);
        CHECK((hy == hx || hy == negated(hx)));
        // BP twist difference
        auto z = dehn_twist(bp1, dehn_twist(bp2, x, -1), 1);
        auto hz = homology_class(z, B);
        CHECK((hz == hx || hz == negated(hx)));
        if (++checked >= 20) break;
    }
    CHECK(checked >= 15);
}
