#include "hexlab/hexagon.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hexlab/arc.hpp"
#include "hexlab/intersection.hpp"

namespace hexlab {

std::vector<std::vector<int>> find_simple_cycles(const ComplexView& view, int max_len) {
    std::vector<std::vector<int>> out;
    const int n = view.size();
    std::vector<int> path;
    // induced cycles: path[0] is the smallest member; requiring
    // path[1] < closing vertex kills the direction double-count
    std::function<void(int)> extend = [&](int v0) {
        int k = static_cast<int>(path.size());
        int last = path[k - 1];
        for (int u = v0 + 1; u < n; ++u) {
            if (!view.adj[last][u]) continue;
            bool used = false;
            for (int x : path) used = used || x == u;
            if (used) continue;
            // u may touch only `last` among path[1..k-1]
            bool chord = false;
            for (int i = 1; i + 1 < k; ++i)
                if (view.adj[path[i]][u]) chord = true;
            if (chord) continue;
            bool adj0 = view.adj[v0][u];
            if (k == 1) {
                // u becomes path[1]; its v0-adjacency is the cycle edge
                if (k + 1 <= max_len - 1) {
                    path.push_back(u);
                    extend(v0);
                    path.pop_back();
                }
                continue;
            }
            if (adj0) {
                if (k + 1 >= 3 && k + 1 <= max_len && path[1] < u) {
                    auto c = path;
                    c.push_back(u);
                    out.push_back(std::move(c));
                }
                // extending through u would leave the chord u-v0
            } else if (k + 1 <= max_len - 1) {
                path.push_back(u);
                extend(v0);
                path.pop_back();
            }
        }
    };
    for (int v0 = 0; v0 < n; ++v0) {
        path = {v0};
        extend(v0);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tuple{a.size(), a} < std::tuple{b.size(), b};
    });
    return out;
}

bool hexagon_fastpath_alternating(const std::array<TorelliVertex, 6>& v) {
    // alternating tags required: v[0], v[2], v[4] H and v[1], v[3], v[5] BP
    for (int i = 0; i < 6; ++i) {
        auto want = (i % 2 == 0) ? TorelliVertex::Tag::H : TorelliVertex::Tag::BP;
        if (v[i].tag != want) return false;
    }
    for (int j = 0; j < 6; ++j)
        if (!vertices_adjacent(v[j], v[(j + 1) % 6])) return false;
    for (int k = 0; k < 2; ++k) {
        if (v[k] == v[k + 2] || vertices_adjacent(v[k], v[k + 2])) return false;
    }
    if (vertices_adjacent(v[0], v[3])) return false;
    if (v[5] == v[1]) return false;
    return true;
}

std::optional<Hexagon> is_hexagon(const std::vector<TorelliVertex>& six) {
    if (six.size() != 6) return std::nullopt;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (six[i] == six[j]) return std::nullopt;
    // induced graph must be a single 6-cycle
    bool adj[6][6] = {};
    int deg[6] = {};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            adj[i][j] = adj[j][i] = vertices_adjacent(six[i], six[j]);
            if (adj[i][j]) {
                ++deg[i];
                ++deg[j];
            }
        }
    for (int i = 0; i < 6; ++i)
        if (deg[i] != 2) return std::nullopt;
    // walk the cycle
    std::array<int, 6> order{};
    order[0] = 0;
    int prev = -1, cur = 0;
    for (int s = 1; s < 6; ++s) {
        int nxt = -1;
        for (int j = 0; j < 6; ++j)
            if (adj[cur][j] && j != prev) nxt = j;
        if (nxt < 0) return std::nullopt;
        order[s] = nxt;
        prev = cur;
        cur = nxt;
    }
    if (!adj[order[5]][order[0]]) return std::nullopt;  // two triangles, not a 6-cycle
    std::set<int> distinct(order.begin(), order.end());
    if (distinct.size() != 6) return std::nullopt;

    Hexagon h;
    for (int s = 0; s < 6; ++s) h.v[s] = six[order[s]];
    // normalize: rotate to the smallest vertex, then pick the smaller direction
    int best = 0;
    for (int s = 1; s < 6; ++s)
        if (h.v[s] < h.v[best]) best = s;
    std::array<TorelliVertex, 6> fwd, bwd;
    for (int s = 0; s < 6; ++s) {
        fwd[s] = h.v[(best + s) % 6];
        bwd[s] = h.v[(best + 6 - s) % 6];
    }
    auto less = [](const std::array<TorelliVertex, 6>& x, const std::array<TorelliVertex, 6>& y) {
        for (int i = 0; i < 6; ++i) {
            if (x[i] < y[i]) return true;
            if (y[i] < x[i]) return false;
        }
        return false;
    };
    h.v = less(bwd, fwd) ? bwd : fwd;
    h.type = hexagon_type(h);
    return h;
}

int hexagon_type(const Hexagon& h) {
    std::vector<int> bp;
    for (int i = 0; i < 6; ++i)
        if (h.v[i].tag == TorelliVertex::Tag::BP) bp.push_back(i);
    if (bp.size() < 2)
        throw KernelBugAlarm("hexagon with " + std::to_string(bp.size()) +
                             " BP-vertices contradicts the small-BP lemmas");
    if (bp.size() == 2) {
        int d = (bp[1] - bp[0]) % 6;
        int dist = std::min(d, 6 - d);
        if (dist == 2) return 1;
        if (dist == 3) return 2;
        throw KernelBugAlarm("adjacent BP-vertices in a hexagon");
    }
    if (bp.size() == 3) {
        if (bp[0] % 2 == bp[1] % 2 && bp[1] % 2 == bp[2] % 2) return 3;
        throw KernelBugAlarm("three BP-vertices not alternating");
    }
    throw KernelBugAlarm("more than three BP-vertices in a hexagon");
}

Type1Data type1_shared_curve(const Hexagon& h) {
    if (h.type != 1) throw CurveError("type1_shared_curve needs a type-1 hexagon");
    std::vector<int> bp;
    for (int i = 0; i < 6; ++i)
        if (h.v[i].tag == TorelliVertex::Tag::BP) bp.push_back(i);
    const TorelliVertex& u = h.v[bp[0]];
    const TorelliVertex& v = h.v[bp[1]];
    std::optional<Multicurve> alpha;
    for (const Multicurve* x : {&u.first, &*u.second})
        for (const Multicurve* y : {&v.first, &*v.second})
            if (x->w == y->w) alpha = *x;
    if (!alpha)
        throw KernelBugAlarm("type-1 hexagon whose BP-vertices share no curve");
    Type1Data out{*alpha, {}};
    for (int i = 0; i < 6; ++i) {
        const TorelliVertex& w = h.v[i];
        if (w.tag == TorelliVertex::Tag::H) {
            out.downstairs.push_back(w.first);
        } else {
            out.downstairs.push_back(w.first.w == alpha->w ? *w.second : w.first);
        }
    }
    return out;
}

std::pair<Multicurve, Multicurve> special_curves(const Hexagon& h) {
    if (h.type != 2) throw CurveError("special_curves needs a type-2 hexagon");
    std::vector<int> bp;
    for (int i = 0; i < 6; ++i)
        if (h.v[i].tag == TorelliVertex::Tag::BP) bp.push_back(i);
    auto pick = [&](const TorelliVertex& u) {
        std::vector<Multicurve> hits;
        for (const Multicurve* x : {&u.first, &*u.second}) {
            bool disjoint_all = true;
            for (int i = 0; i < 6; ++i)
                if (geometric_intersection(*x, h.v[i].merged) != 0) disjoint_all = false;
            if (disjoint_all) hits.push_back(*x);
        }
        if (hits.size() != 1)
            throw KernelBugAlarm("special curve count " + std::to_string(hits.size()) +
                                 " in a type-2 BP");
        return hits[0];
    };
    return {pick(h.v[bp[0]]), pick(h.v[bp[1]])};
}

CurvePool make_curve_pool(const Triangulation& T, Weight bound, int arc_bound) {
    CurvePool pool{&T, bound, arc_bound, enumerate_single_curves(T, bound), {}};
    for (const auto& l : enumerate_arcs(T, arc_bound)) {
        try {
            pool.arc_bps.push_back(bp_from_arc(l));
        } catch (const CurveError&) {
        }
    }
    return pool;
}

namespace {

// rotates a type-2 hexagon into the (a, b, c, d, e, f) frame with a = v[0]
// and d = v[3] BP-vertices
std::array<const TorelliVertex*, 6> type2_frame(const Hexagon& h) {
    std::vector<int> bp;
    for (int i = 0; i < 6; ++i)
        if (h.v[i].tag == TorelliVertex::Tag::BP) bp.push_back(i);
    int a_at = bp[0];
    std::array<const TorelliVertex*, 6> f{};
    for (int s = 0; s < 6; ++s) f[s] = &h.v[(a_at + s) % 6];
    return f;
}

// pants piece bounded by one circle of each of the three given components
bool has_one_each_pants(const CutReport& rep, const Multicurve& x, const Multicurve& y,
                        const Multicurve& z) {
    auto idx = [&](const Multicurve& c) {
        for (int i = 0; i < static_cast<int>(rep.cut_components.size()); ++i)
            if (rep.cut_components[i].w == c.w) return i;
        return -1;
    };
    int ix = idx(x), iy = idx(y), iz = idx(z);
    for (const auto& p : rep.pieces) {
        if (p.genus != 0 || !p.punctures.empty() || p.num_boundary() != 3) continue;
        std::multiset<int> got;
        for (const auto& b : p.boundary) got.insert(b.component);
        if (got == std::multiset<int>{ix, iy, iz}) return true;
    }
    return false;
}

}  // namespace

Multicurve zeta(const Hexagon& h, const CurvePool& pool) {
    if (h.type != 2) throw CurveError("zeta needs a type-2 hexagon");
    auto [a0, d0] = special_curves(h);
    auto frame = type2_frame(h);
    const TorelliVertex& a = *frame[0];
    const TorelliVertex& d = *frame[3];
    std::vector<Multicurve> found;
    for (const auto& ec : pool.curves) {
        if (ec.separating) continue;
        const Multicurve& z = ec.curve;
        if (z.w == a.first.w || z.w == a.second->w || z.w == d.first.w || z.w == d.second->w)
            continue;
        if (geometric_intersection(z, a.merged) != 0) continue;
        if (geometric_intersection(z, d.merged) != 0) continue;
        Multicurve uni = multicurve_union({a0, d0, z});
        std::string why;
        if (!weights_admissible(*pool.tri, uni.w, &why)) continue;
        CutReport rep;
        try {
            rep = cut_invariants(uni);
        } catch (const CurveError&) {
            continue;  // z meets a0 or d0
        }
        if (rep.pieces.size() != 2) continue;
        if (!has_one_each_pants(rep, a0, d0, z)) continue;
        found.push_back(z);
    }
    if (found.empty())
        throw BoundTooSmall("no zeta candidate within weight bound " +
                            std::to_string(pool.bound));
    if (found.size() > 1) throw KernelBugAlarm("zeta is not unique");
    return found[0];
}

long long twist_exponent(const Hexagon& h, const Multicurve& zeta_curve, long long m_bound) {
    auto frame = type2_frame(h);
    const Multicurve& b = frame[1]->first;
    const Multicurve& c = frame[2]->first;
    const Multicurve& e = frame[4]->first;
    const Multicurve& f = frame[5]->first;
    std::vector<long long> hits;
    for (long long m = -m_bound; m <= m_bound; ++m) {
        if (m == 0) continue;
        if (dehn_twist(zeta_curve, b, m).w == f.w) hits.push_back(m);
    }
    if (hits.empty()) throw BoundTooSmall("no twist exponent within bound");
    if (hits.size() > 1) throw KernelBugAlarm("twist exponent not unique");
    if (dehn_twist(zeta_curve, c, hits[0]).w != e.w)
        throw KernelBugAlarm("t_zeta^m(c) != e for the recovered exponent");
    return hits[0];
}

Hexagon build_type2_hexagon(const TorelliVertex& a, const Multicurve& b, const Multicurve& c,
                            const TorelliVertex& d, const Multicurve& zeta_curve, long long m) {
    Multicurve e = dehn_twist(zeta_curve, c, m);
    Multicurve f = dehn_twist(zeta_curve, b, m);
    auto hx = is_hexagon({a, make_h_vertex(b), make_h_vertex(c), d, make_h_vertex(e),
                          make_h_vertex(f)});
    if (!hx) throw KernelBugAlarm("type-2 construction did not produce a hexagon");
    if (hx->type != 2) throw KernelBugAlarm("type-2 construction produced type " +
                                            std::to_string(hx->type));
    return *hx;
}

std::vector<CompanionData> companion_hexagons(
    const Hexagon& h, const CurvePool& pool, long long m_bound,
    const std::optional<std::array<TorelliVertex, 4>>& path) {
    if (h.type != 2) throw CurveError("companion_hexagons needs a type-2 hexagon");

    // frame (a, b, c, d, e, f) with the 3-path (f, a, b, c) as requested
    std::array<const TorelliVertex*, 6> frame{};
    if (path) {
        const auto& L = *path;
        if (L[1].tag != TorelliVertex::Tag::BP)
            throw CurveError("companion path must read (f, a, b, c) with a the BP");
        int ia = h.index_of(L[1]);
        if (ia < 0) throw CurveError("companion path not in hexagon");
        // orient so that the neighbor L[2] sits after a
        int dir = (h.v[(ia + 1) % 6] == L[2]) ? +1 : -1;
        for (int s = 0; s < 6; ++s) frame[s] = &h.v[((ia + dir * s) % 6 + 6) % 6];
        if (!(*frame[5] == L[0] && *frame[1] == L[2] && *frame[2] == L[3]))
            throw CurveError("companion path does not match the hexagon");
    } else {
        auto deflt = type2_frame(h);
        frame = deflt;
    }
    const TorelliVertex& a = *frame[0];
    const TorelliVertex& d = *frame[3];
    const Multicurve& b = frame[1]->first;
    const Multicurve& c = frame[2]->first;
    const Multicurve& f = frame[5]->first;
    auto [a0, d0] = special_curves(h);

    Multicurve z = zeta(h, pool);
    // exponent for this frame
    std::vector<long long> ms;
    for (long long m = -m_bound; m <= m_bound; ++m) {
        if (m == 0) continue;
        if (dehn_twist(z, b, m).w == f.w) ms.push_back(m);
    }
    if (ms.empty()) throw BoundTooSmall("no twist exponent within bound");
    if (ms.size() > 1) throw KernelBugAlarm("twist exponent not unique");
    long long m = ms[0];
    if (m != 1 && m != -1) return {};

    // eta: the third vertex of both Farey triangles on {b, zeta} and {f, zeta}.
    // The two completions of the edge {b, zeta} differ by t_zeta, so closing
    // the pool candidates under small zeta-twists reaches both sides even
    // when only one is light enough for the pool bound.
    std::vector<Multicurve> base_cands;
    for (const auto& ec : pool.curves) {
        if (ec.separating) continue;
        const Multicurve& u = ec.curve;
        if (u.w == z.w) continue;
        if (geometric_intersection(u, b) != 2) continue;
        if (geometric_intersection(u, z) != 2) continue;
        base_cands.push_back(u);
    }
    std::vector<Multicurve> etas;
    std::set<std::vector<Weight>> seen_eta;
    for (const auto& u0 : base_cands)
        for (long long k = -2; k <= 2; ++k) {
            Multicurve u = (k == 0) ? u0 : dehn_twist(z, u0, k);
            if (u.w == z.w || !seen_eta.insert(u.w).second) continue;
            if (geometric_intersection(u, a.merged) != 0) continue;
            if (geometric_intersection(u, d0) != 0) continue;
            if (geometric_intersection(u, b) != 2) continue;
            if (geometric_intersection(u, f) != 2) continue;
            if (geometric_intersection(u, z) != 2) continue;
            etas.push_back(u);
        }
    if (etas.empty()) throw BoundTooSmall("no eta candidate within weight bound");

    std::vector<CompanionData> out;
    for (const auto& eta : etas) {
        std::vector<long long> ns;
        for (long long n : {-1LL, +1LL})
            if (dehn_twist(eta, b, n).w == f.w) ns.push_back(n);
        if (ns.size() != 1) continue;
        long long n = ns[0];
        Multicurve e2 = dehn_twist(eta, c, n);
        // the companion's second BP: searched through the arc correspondence
        for (const auto& [x_lo, x_hi] : pool.arc_bps) {
            Multicurve xu = multicurve_union({x_lo, x_hi});
            if (geometric_intersection(xu, c) != 0) continue;
            if (geometric_intersection(xu, e2) != 0) continue;
            auto cand = is_hexagon({a, make_h_vertex(b), make_h_vertex(c),
                                    make_bp_vertex(x_lo, x_hi), make_h_vertex(e2),
                                    make_h_vertex(f)});
            if (!cand || cand->type != 2) continue;
            bool dup = false;
            for (const auto& prev : out) dup = dup || prev.hexagon.v == cand->v;
            bool is_original = cand->v == h.v;
            if (dup || is_original) continue;
            Multicurve x1 = (x_lo.w == d0.w) ? x_hi : x_lo;
            out.push_back(CompanionData{*cand, eta, n, x1});
        }
    }
    if (out.size() > 1)
        throw KernelBugAlarm("more than one companion hexagon for |m| = 1");
    if (out.empty())
        throw BoundTooSmall("companion construction found no hexagon within bound");
    return out;
}

std::vector<Pentagon> find_pentagons(const ComplexView& view) {
    auto cycles = find_simple_cycles(view, 5);
    std::vector<Pentagon> out;
    for (const auto& c : cycles) {
        if (c.size() != 5) continue;
        Pentagon p;
        for (int i = 0; i < 5; ++i) p.v[i] = view.vertices[c[i]];
        out.push_back(p);
    }
    const auto& kind = view.tri->kind();
    if (!out.empty() && kind.genus == 2 && kind.punctures == 1)
        throw KernelBugAlarm("pentagon found in a genus-2 one-puncture universe");
    return out;
}

std::optional<Hexagon> find_type1_witness(const TorelliVertex& bp1, const TorelliVertex& bp2,
                                          const std::vector<TorelliVertex>& h_universe) {
    // frame: (a, bp1, c, d, e, bp2): a adjacent to both BPs, c adjacent to
    // bp1 only, e adjacent to bp2 only, d adjacent to c and e only
    if (!(vertices_adjacent(bp1, bp2) == false)) {
        // type-1 BPs are at distance 2, never adjacent
    }
    std::vector<const TorelliVertex*> Hs;
    for (const auto& v : h_universe)
        if (v.tag == TorelliVertex::Tag::H) Hs.push_back(&v);
    for (const TorelliVertex* a : Hs) {
        if (!vertices_adjacent(*a, bp1) || !vertices_adjacent(*a, bp2)) continue;
        for (const TorelliVertex* c : Hs) {
            if (!vertices_adjacent(*c, bp1) || vertices_adjacent(*c, *a) || *c == *a) continue;
            if (vertices_adjacent(*c, bp2)) continue;
            for (const TorelliVertex* e : Hs) {
                if (!vertices_adjacent(*e, bp2) || vertices_adjacent(*e, *a) || *e == *a)
                    continue;
                if (vertices_adjacent(*e, bp1) || *e == *c) continue;
                if (vertices_adjacent(*e, *c)) continue;
                for (const TorelliVertex* d : Hs) {
                    if (*d == *a || *d == *c || *d == *e) continue;
                    if (!vertices_adjacent(*d, *c) || !vertices_adjacent(*d, *e)) continue;
                    if (vertices_adjacent(*d, *a)) continue;
                    if (vertices_adjacent(*d, bp1) || vertices_adjacent(*d, bp2)) continue;
                    auto hx = is_hexagon({*a, bp1, *c, *d, *e, bp2});
                    if (hx && hx->type == 1) return hx;
                }
            }
        }
    }
    return std::nullopt;
}

ComplexView build_graph_E(const Triangulation& T, const std::vector<TorelliVertex>& bps,
                          const std::vector<TorelliVertex>& h_universe, int workers) {
    (void)workers;
    ComplexView view;
    view.kind = ComplexKind{ComplexKind::GraphE};
    view.tri = &T;
    for (const auto& v : bps)
        if (v.tag == TorelliVertex::Tag::BP) view.vertices.push_back(v);
    std::sort(view.vertices.begin(), view.vertices.end());
    view.vertices.erase(std::unique(view.vertices.begin(), view.vertices.end()),
                        view.vertices.end());
    int n = view.size();
    view.adj.assign(n, std::vector<char>(n, 0));
    view.provenance = "graph-E witness search over " + std::to_string(h_universe.size()) +
                      " h-vertices";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto w = find_type1_witness(view.vertices[i], view.vertices[j], h_universe);
            if (w) view.adj[i][j] = view.adj[j][i] = 1;
        }
    return view;
}

std::vector<std::array<int, 4>> find_squares(const ComplexView& graph_e) {
    auto cycles = find_simple_cycles(graph_e, 4);
    std::vector<std::array<int, 4>> out;
    for (const auto& c : cycles)
        if (c.size() == 4) out.push_back({c[0], c[1], c[2], c[3]});
    return out;
}

Multicurve induce_curve_map(const std::function<TorelliVertex(const TorelliVertex&)>& phi,
                            const Multicurve& alpha, const std::vector<Hexagon>& witnesses) {
    if (is_separating(alpha)) return phi(make_h_vertex(alpha)).first;
    std::optional<Multicurve> result;
    bool any = false;
    for (const auto& w : witnesses) {
        if (w.type != 1) continue;
        // both BPs must contain alpha
        auto data = type1_shared_curve(w);
        if (data.alpha.w != alpha.w) continue;
        any = true;
        std::vector<TorelliVertex> image;
        for (const auto& v : w.v) image.push_back(phi(v));
        auto hx = is_hexagon(image);
        if (!hx || hx->type != 1)
            throw KernelBugAlarm("phi image of a type-1 hexagon is not a type-1 hexagon");
        auto im = type1_shared_curve(*hx);
        if (result && result->w != im.alpha.w)
            throw KernelBugAlarm("induced curve map disagrees between witness hexagons");
        result = im.alpha;
    }
    if (!any) throw BoundTooSmall("no witness type-1 hexagon for the given curve");
    return *result;
}

}  // namespace hexlab

namespace hexlab {

Hexagon theta_base(const Catalog& cat) {
    auto hx = is_hexagon({make_h_vertex(cat.curve("type3.a")),
                          make_bp_vertex(cat.curve("type3.b0"), cat.curve("type3.b1")),
                          make_h_vertex(cat.curve("type3.c")),
                          make_bp_vertex(cat.curve("type3.d0"), cat.curve("type3.d1")),
                          make_h_vertex(cat.curve("type3.e")),
                          make_bp_vertex(cat.curve("type3.f0"), cat.curve("type3.f1"))});
    if (!hx || hx->type != 3) throw KernelBugAlarm("catalog theta is not a type-3 hexagon");
    return *hx;
}

std::array<TorelliVertex, 4> theta_path_abcd(const Catalog& cat) {
    return {make_h_vertex(cat.curve("type3.a")),
            make_bp_vertex(cat.curve("type3.b0"), cat.curve("type3.b1")),
            make_h_vertex(cat.curve("type3.c")),
            make_bp_vertex(cat.curve("type3.d0"), cat.curve("type3.d1"))};
}

Hexagon type3_family(const Hexagon& hex, const std::array<TorelliVertex, 4>& L,
                     const Multicurve& twister, long long n) {
    // locate L as consecutive vertices
    int at = hex.index_of(L[0]);
    if (at < 0) throw CurveError("type3_family: path not in hexagon");
    int dir = (hex.v[(at + 1) % 6] == L[1]) ? +1 : -1;
    std::array<TorelliVertex, 6> v;
    for (int s = 0; s < 6; ++s) v[s] = hex.v[((at + dir * s) % 6 + 6) % 6];
    for (int s = 0; s < 4; ++s)
        if (!(v[s] == L[s])) throw CurveError("type3_family: path mismatch");
    if (geometric_intersection(twister, v[0].merged) != 0 ||
        geometric_intersection(twister, v[3].merged) != 0)
        throw CurveError("type3_family: twister must be disjoint from the path ends");
    TorelliVertex e2 = map_vertex({{twister, n}}, v[4]);
    TorelliVertex f2 = map_vertex({{twister, n}}, v[5]);
    if (f2 == v[1])
        throw CurveError("type3_family: n hits the excluded exponent (t^n(f) = b)");
    auto hx = is_hexagon({v[0], v[1], v[2], v[3], e2, f2});
    if (!hx) throw KernelBugAlarm("type3_family tuple failed the hexagon conditions");
    if (hx->type != 3) throw KernelBugAlarm("type3_family produced type " +
                                            std::to_string(hx->type));
    return *hx;
}

namespace {

bool hexagons_share_2path(const Hexagon& A, const Hexagon& B) {
    // three consecutive vertices of A that lie in B with both edges in B
    for (int s = 0; s < 6; ++s) {
        const TorelliVertex& x = A.v[s];
        const TorelliVertex& y = A.v[(s + 1) % 6];
        const TorelliVertex& z = A.v[(s + 2) % 6];
        int iy = B.index_of(y);
        if (iy < 0) continue;
        bool x_next = B.v[(iy + 1) % 6] == x || B.v[(iy + 5) % 6] == x;
        bool z_next = B.v[(iy + 1) % 6] == z || B.v[(iy + 5) % 6] == z;
        if (x_next && z_next) return true;
    }
    return false;
}

}  // namespace

std::vector<Hexagon> hexagon_path(const Catalog& cat, const TorelliVertex& u,
                                  const TorelliVertex& v,
                                  const std::vector<TwistStep>& word) {
    Hexagon theta = theta_base(cat);
    if (!theta.contains(u)) throw CurveError("hexagon_path: u must lie in theta");
    std::vector<Hexagon> out{theta};
    // theta, h1(theta), h1 h2(theta), ... with word = h1 h2 ... hn
    std::vector<TwistStep> prefix;
    for (const auto& step : word) {
        prefix.push_back(step);
        std::vector<TorelliVertex> image;
        for (const auto& x : theta.v) image.push_back(map_vertex(prefix, x));
        auto hx = is_hexagon(image);
        if (!hx) throw KernelBugAlarm("hexagon_path: translate is not a hexagon");
        if (!hexagons_share_2path(out.back(), *hx))
            throw KernelBugAlarm("hexagon_path: consecutive translates share no 2-path");
        out.push_back(*hx);
    }
    if (!out.back().contains(v))
        throw CurveError("hexagon_path: v is not a vertex of the final translate");
    return out;
}

}  // namespace hexlab

namespace hexlab {

HUniverse make_h_universe(std::vector<TorelliVertex> verts, int workers) {
    (void)workers;
    HUniverse H;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (auto& v : verts)
        if (v.tag == TorelliVertex::Tag::H) H.hs.push_back(v);
    int n = static_cast<int>(H.hs.size());
    H.adj.assign(n, std::vector<char>(n, 0));
    std::vector<Trace> traces(n);
    for (int i = 0; i < n; ++i) traces[i] = trace_multicurve(H.hs[i].merged);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Triangulation& T = *H.hs[i].merged.tri;
            bool a = geometric_intersection(T, traces[i], traces[j], H.hs[i].merged.w,
                                            H.hs[j].merged.w) == 0;
            H.adj[i][j] = H.adj[j][i] = a ? 1 : 0;
        }
    return H;
}

std::optional<Hexagon> find_type1_witness(const TorelliVertex& bp1, const TorelliVertex& bp2,
                                          const HUniverse& H) {
    const int n = static_cast<int>(H.hs.size());
    std::vector<char> adj1(n), adj2(n);
    for (int i = 0; i < n; ++i) {
        adj1[i] = vertices_adjacent(H.hs[i], bp1) ? 1 : 0;
        adj2[i] = vertices_adjacent(H.hs[i], bp2) ? 1 : 0;
    }
    for (int a = 0; a < n; ++a) {
        if (!adj1[a] || !adj2[a]) continue;
        for (int c = 0; c < n; ++c) {
            if (c == a || !adj1[c] || adj2[c] || H.adj[a][c]) continue;
            for (int e = 0; e < n; ++e) {
                if (e == a || e == c || !adj2[e] || adj1[e]) continue;
                if (H.adj[a][e] || H.adj[c][e]) continue;
                for (int d = 0; d < n; ++d) {
                    if (d == a || d == c || d == e) continue;
                    if (!H.adj[c][d] || !H.adj[d][e] || H.adj[a][d]) continue;
                    if (adj1[d] || adj2[d]) continue;
                    auto hx = is_hexagon({H.hs[a], bp1, H.hs[c], H.hs[d], H.hs[e], bp2});
                    if (hx && hx->type == 1) return hx;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Hexagon> find_type1_through(const Multicurve& x, const CurvePool& pool,
                                          const HUniverse& H) {
    std::vector<Multicurve> partners;
    for (const auto& ec : pool.curves) {
        if (ec.separating) continue;
        if (ec.curve.w == x.w) continue;
        if (geometric_intersection(ec.curve, x) != 0) continue;
        if (!is_bounding_pair(x, ec.curve)) continue;
        partners.push_back(ec.curve);
        if (partners.size() >= 6) break;
    }
    for (size_t i = 0; i < partners.size(); ++i)
        for (size_t j = i + 1; j < partners.size(); ++j) {
            auto w = find_type1_witness(make_bp_vertex(x, partners[i]),
                                        make_bp_vertex(x, partners[j]), H);
            if (w) return w;
        }
    return std::nullopt;
}

}  // namespace hexlab
