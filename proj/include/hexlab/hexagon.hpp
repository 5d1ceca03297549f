#pragma once

#include <array>
#include <functional>
#include <optional>

#include "hexlab/catalog.hpp"
#include "hexlab/explorer.hpp"

namespace hexlab {

// truncation artifact: the search bound was too small to decide
struct BoundTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// would contradict a proved statement; must fail loudly
struct KernelBugAlarm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Hexagon {
    std::array<TorelliVertex, 6> v;  // cyclic order, normalized
    int type = 0;                    // 1, 2, 3

    bool contains(const TorelliVertex& u) const {
        for (const auto& x : v)
            if (x == u) return true;
        return false;
    }
    int index_of(const TorelliVertex& u) const {
        for (int i = 0; i < 6; ++i)
            if (v[i] == u) return i;
        return -1;
    }
};

struct Pentagon {
    std::array<TorelliVertex, 5> v;
};

// all induced simple cycles of length <= max_len, as vertex index lists;
// deterministic order
std::vector<std::vector<int>> find_simple_cycles(const ComplexView& view, int max_len);

// verifies the hexagon conditions on six distinct vertices (any input order),
// normalizes the cyclic order, classifies the type
std::optional<Hexagon> is_hexagon(const std::vector<TorelliVertex>& six);

// the Lemma 6.3 sufficient conditions for an alternating H/BP 6-tuple given
// in cyclic order; used as a fast path and cross-checked against is_hexagon
bool hexagon_fastpath_alternating(const std::array<TorelliVertex, 6>& v);

int hexagon_type(const Hexagon& h);

// type 1: the curve shared by both BP-vertices plus the six curves of the
// hexagon downstairs in the cut surface
struct Type1Data {
    Multicurve alpha;
    std::vector<Multicurve> downstairs;  // six separating curves of S_alpha
};
Type1Data type1_shared_curve(const Hexagon& h);

// type 2 canonical data
std::pair<Multicurve, Multicurve> special_curves(const Hexagon& h);  // (a0, d0)

struct CurvePool {
    const Triangulation* tri = nullptr;
    Weight bound = 0;
    int arc_bound = 0;
    std::vector<EnumCurve> curves;
    // bounding pairs through the arc correspondence, used as BP search space
    std::vector<std::pair<Multicurve, Multicurve>> arc_bps;
};
CurvePool make_curve_pool(const Triangulation& T, Weight bound, int arc_bound = 10);

Multicurve zeta(const Hexagon& h, const CurvePool& pool);
long long twist_exponent(const Hexagon& h, const Multicurve& zeta_curve, long long m_bound);

struct CompanionData {
    Hexagon hexagon;
    Multicurve eta;       // the Farey triangle completion about {b, zeta} and {f, zeta}
    long long exponent;   // f = t_eta^exponent(b), equals -m
    Multicurve x1;        // the companion's second BP is {d0, x1}
};
// companions through the shared 3-path L = (f, a, b, c); when no path is
// given the normalized frame of the hexagon supplies one
std::vector<CompanionData> companion_hexagons(
    const Hexagon& h, const CurvePool& pool, long long m_bound,
    const std::optional<std::array<TorelliVertex, 4>>& path = std::nullopt);

// pentagons of a view; on a genus-2 one-puncture universe a hit is an alarm
std::vector<Pentagon> find_pentagons(const ComplexView& view);

// type-2 builder used by the suites: (a, b, c, d, t_zeta^m(c), t_zeta^m(b))
Hexagon build_type2_hexagon(const TorelliVertex& a, const Multicurve& b, const Multicurve& c,
                            const TorelliVertex& d, const Multicurve& zeta_curve, long long m);

// graph E on BP vertices: adjacency by a type-1 hexagon witness inside the
// universe of h-vertices supplied; misses mean "unknown within bound"
ComplexView build_graph_E(const Triangulation& T, const std::vector<TorelliVertex>& bps,
                          const std::vector<TorelliVertex>& h_universe, int workers = 0);
std::vector<std::array<int, 4>> find_squares(const ComplexView& graph_e);

// type-1 hexagon witness containing two given BPs, searched in a universe
std::optional<Hexagon> find_type1_witness(const TorelliVertex& bp1, const TorelliVertex& bp2,
                                          const std::vector<TorelliVertex>& h_universe);

// h-universe with precomputed adjacency, for repeated witness searches
struct HUniverse {
    std::vector<TorelliVertex> hs;
    std::vector<std::vector<char>> adj;
};
HUniverse make_h_universe(std::vector<TorelliVertex> verts, int workers = 0);
std::optional<Hexagon> find_type1_witness(const TorelliVertex& bp1, const TorelliVertex& bp2,
                                          const HUniverse& H);
// a type-1 hexagon whose both BP-vertices contain x
std::optional<Hexagon> find_type1_through(const Multicurve& x, const CurvePool& pool,
                                          const HUniverse& H);

// the catalog type-3 hexagon (a, b, c, d, e, f) built from its three arcs
Hexagon theta_base(const Catalog& cat);
// the 3-path (a, b, c, d) of theta, in tuple order
std::array<TorelliVertex, 4> theta_path_abcd(const Catalog& cat);

// the type-3 family through a 3-path L = (v1, v2, v3, v4) of a hexagon:
// (v1, v2, v3, v4, t^n(v5), t^n(v6)) about a twister disjoint from v1 and v4.
// n hitting the excluded exponent (t^n(v6) = v2) throws BoundTooSmall-free
// CurveError with the rejection reason.
Hexagon type3_family(const Hexagon& hex, const std::array<TorelliVertex, 4>& L,
                     const Multicurve& twister, long long n);

// constructive path of theta translates: u in the first hexagon, v = word(a)
// or word(b) in the last, consecutive hexagons share a 2-path
std::vector<Hexagon> hexagon_path(const Catalog& cat, const TorelliVertex& u,
                                  const TorelliVertex& v,
                                  const std::vector<TwistStep>& word);

// Phi(alpha) per the reconstruction: value of the induced curve map on a
// non-separating curve, read off the image of a witness type-1 hexagon
Multicurve induce_curve_map(const std::function<TorelliVertex(const TorelliVertex&)>& phi,
                            const Multicurve& alpha, const std::vector<Hexagon>& witnesses);

}  // namespace hexlab
