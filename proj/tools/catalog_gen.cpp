// builds the frozen curve/arc catalog by bounded search and verifies every
// recorded property before writing data/catalog_<surface>.json
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>

#include "hexlab/arc.hpp"
#include "hexlab/catalog.hpp"
#include "hexlab/cut.hpp"
#include "hexlab/explorer.hpp"
#include "hexlab/hexagon.hpp"
#include "hexlab/intersection.hpp"
#include "hexlab/twist.hpp"

using namespace hexlab;

namespace {

struct Pools {
    std::vector<Multicurve> nonsep, hcurves, pcurves, seps;
};

Pools make_pools(const Triangulation& T, Weight W) {
    Pools p;
    for (const auto& c : enumerate_single_curves(T, W)) {
        if (!c.separating) {
            p.nonsep.push_back(c.curve);
        } else {
            p.seps.push_back(c.curve);
            if (c.kind == SeparatingKind::HCurve) p.hcurves.push_back(c.curve);
            if (c.kind == SeparatingKind::PCurve) p.pcurves.push_back(c.curve);
        }
    }
    return p;
}

long long gi(const Multicurve& a, const Multicurve& b) { return geometric_intersection(a, b); }

std::vector<Multicurve> find_chain(const std::vector<Multicurve>& ns) {
    std::vector<int> chain;
    std::function<bool(int)> grow = [&](int depth) -> bool {
        if (depth == 5) return true;
        for (int k = 0; k < static_cast<int>(ns.size()); ++k) {
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j) {
                long long want = (j == depth - 1) ? 1 : 0;
                if (gi(ns[chain[j]], ns[k]) != want) ok = false;
            }
            if (!ok) continue;
            chain.push_back(k);
            if (grow(depth + 1)) return true;
            chain.pop_back();
        }
        return false;
    };
    for (int k0 = 0; k0 < static_cast<int>(ns.size()); ++k0) {
        chain = {k0};
        if (grow(1)) {
            std::vector<Multicurve> out;
            for (int i : chain) out.push_back(ns[i]);
            return out;
        }
    }
    throw std::runtime_error("no chain found");
}

void emit_intersections(Catalog* cat) {
    auto names = cat->curve_names();
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            cat->put_intersection(names[i], names[j],
                                  gi(cat->curve(names[i]), cat->curve(names[j])));
}

std::string cls_of(const Multicurve& c) {
    if (!is_separating(c)) return "nonsep";
    switch (classify_separating(c)) {
        case SeparatingKind::HCurve: return "h-curve";
        case SeparatingKind::PCurve: return "p-curve";
        default: return "other";
    }
}

void gen_S2_1() {
    auto T = load_surface("S2_1");
    Catalog cat(std::make_shared<Triangulation>(T));
    const Triangulation& CT = cat.tri();

    auto lift = [&](const Multicurve& m) { return Multicurve{&CT, m.w}; };

    std::printf("[S2_1] pools...\n");
    Pools p22 = make_pools(CT, 22);
    std::printf("  nonsep=%zu h=%zu\n", p22.nonsep.size(), p22.hcurves.size());

    // --- chain ---
    std::vector<Multicurve> small_ns;
    for (const auto& c : p22.nonsep)
        if (c.total_weight() <= 12) small_ns.push_back(c);
    auto chain = find_chain(small_ns);
    for (int i = 0; i < 5; ++i)
        cat.put_curve("chain.alpha" + std::to_string(i + 1), chain[i].w, "nonsep");
    std::printf("  chain done\n");

    // --- type 3: hexagon from arcs, compatible with the chain ---
    auto arcs = enumerate_arcs(CT, 4);
    std::vector<std::pair<NormalArc, TorelliVertex>> arc_bps;
    for (const auto& l : arcs) {
        try {
            auto [c1, c2] = bp_from_arc(l);
            arc_bps.push_back({l, make_bp_vertex(lift(c1), lift(c2))});
        } catch (const CurveError&) {
        }
    }
    std::vector<TorelliVertex> hverts;
    for (const auto& h : p22.hcurves) hverts.push_back(make_h_vertex(h));

    struct ThetaPick {
        Hexagon hex;
        NormalArc lb, ld, lf;
        Multicurve alpha, beta, gamma;
    };
    std::optional<ThetaPick> theta;
    auto first_disjoint_intersecting = [&](const TorelliVertex& u, const TorelliVertex& v,
                                           const TorelliVertex& w) -> const Multicurve* {
        for (const auto& z : p22.nonsep)
            if (gi(z, u.merged) == 0 && gi(z, v.merged) == 0 && gi(z, w.merged) != 0)
                return &z;
        return nullptr;
    };
    for (size_t ib = 0; ib < arc_bps.size() && !theta; ++ib)
        for (size_t id = ib + 1; id < arc_bps.size() && !theta; ++id) {
            const auto& B = arc_bps[ib].second;
            const auto& D = arc_bps[id].second;
            if (B == D || vertices_adjacent(B, D)) continue;
            for (size_t iff = id + 1; iff < arc_bps.size() && !theta; ++iff) {
                const auto& F = arc_bps[iff].second;
                if (F == B || F == D) continue;
                if (vertices_adjacent(F, B) || vertices_adjacent(F, D)) continue;
                for (const auto& A : hverts) {
                    if (!vertices_adjacent(A, F) || !vertices_adjacent(A, B)) continue;
                    if (vertices_adjacent(A, D)) continue;
                    for (const auto& C : hverts) {
                        if (C == A || !vertices_adjacent(C, B) || !vertices_adjacent(C, D))
                            continue;
                        if (vertices_adjacent(C, F) || vertices_adjacent(C, A)) continue;
                        for (const auto& E : hverts) {
                            if (E == A || E == C) continue;
                            if (!vertices_adjacent(E, D) || !vertices_adjacent(E, F)) continue;
                            if (vertices_adjacent(E, B) || vertices_adjacent(E, A) ||
                                vertices_adjacent(E, C))
                                continue;
                            auto hx = is_hexagon({A, B, C, D, E, F});
                            if (!hx || hx->type != 3) continue;
                            // chain curves must fix three consecutive vertices
                            bool ok = true;
                            for (const auto& g : chain) {
                                bool found = false;
                                for (int s = 0; s < 6 && !found; ++s) {
                                    bool all = true;
                                    for (int k = 0; k < 3; ++k)
                                        all = all &&
                                              gi(g, hx->v[(s + k) % 6].merged) == 0;
                                    found = all;
                                }
                                ok = ok && found;
                            }
                            if (!ok) continue;
                            const Multicurve* al = first_disjoint_intersecting(A, D, F);
                            const Multicurve* be = first_disjoint_intersecting(B, E, A);
                            const Multicurve* ga = first_disjoint_intersecting(C, F, B);
                            if (!al || !be || !ga) continue;
                            ThetaPick tp{*hx, arc_bps[ib].first, arc_bps[id].first,
                                         arc_bps[iff].first, *al, *be, *ga};
                            // keep the explicit tuple order (A,B,C,D,E,F)
                            auto ordered = is_hexagon({A, B, C, D, E, F});
                            tp.hex = *ordered;
                            theta = tp;
                            // record in tuple order
                            cat.put_curve("type3.a", A.merged.w, "h-curve");
                            cat.put_curve("type3.c", C.merged.w, "h-curve");
                            cat.put_curve("type3.e", E.merged.w, "h-curve");
                            cat.put_curve("type3.b0", B.first.w, "nonsep");
                            cat.put_curve("type3.b1", B.second->w, "nonsep");
                            cat.put_curve("type3.d0", D.first.w, "nonsep");
                            cat.put_curve("type3.d1", D.second->w, "nonsep");
                            cat.put_curve("type3.f0", F.first.w, "nonsep");
                            cat.put_curve("type3.f1", F.second->w, "nonsep");
                            cat.put_curve("type3.alpha", al->w, "nonsep");
                            cat.put_curve("type3.beta", be->w, "nonsep");
                            cat.put_curve("type3.gamma", ga->w, "nonsep");
                            cat.put_arc("type3.lb", arc_bps[ib].first);
                            cat.put_arc("type3.ld", arc_bps[id].first);
                            cat.put_arc("type3.lf", arc_bps[iff].first);
                            break;
                        }
                        if (theta) break;
                    }
                    if (theta) break;
                }
            }
        }
    if (!theta) throw std::runtime_error("no theta");
    std::printf("  theta done\n");

    // --- type 1 ---
    Pools p26 = make_pools(CT, 26);
    std::printf("  pools26: nonsep=%zu h=%zu\n", p26.nonsep.size(), p26.hcurves.size());
    Multicurve t1_alpha = lift(chain[0]);
    std::vector<Multicurve> H1;
    for (const auto& h : p26.hcurves)
        if (gi(h, t1_alpha) == 0) H1.push_back(h);
    std::vector<Multicurve> B1;
    for (const auto& c : p26.nonsep)
        if (!(c.w == t1_alpha.w) && is_bounding_pair(t1_alpha, c)) B1.push_back(c);
    std::printf("  type1 search: H=%zu partners=%zu\n", H1.size(), B1.size());
    std::optional<Hexagon> t1hex;
    Multicurve t1_b1{&CT, {}}, t1_f1{&CT, {}};
    std::vector<TorelliVertex> t1_hverts;
    for (const auto& h : H1) t1_hverts.push_back(make_h_vertex(h));
    for (size_t x = 0; x < B1.size() && !t1hex; ++x)
        for (size_t y = x + 1; y < B1.size() && !t1hex; ++y) {
            auto bp1 = make_bp_vertex(t1_alpha, B1[x]);
            auto bp2 = make_bp_vertex(t1_alpha, B1[y]);
            auto w = find_type1_witness(bp1, bp2, t1_hverts);
            if (w) {
                t1hex = w;
                t1_b1 = B1[x];
                t1_f1 = B1[y];
            }
        }
    if (!t1hex) throw std::runtime_error("no type-1 hexagon");
    {
        // record in the frame (a, b={alpha,b1}, c, d, e, f={alpha,f1})
        auto data = type1_shared_curve(*t1hex);
        if (!(data.alpha.w == t1_alpha.w)) throw std::runtime_error("type1 alpha mismatch");
        // rotate the stored hexagon so v[1] and v[5] are the BPs
        std::array<TorelliVertex, 6> v = t1hex->v;
        int bp_at = -1;
        for (int s = 0; s < 6; ++s)
            if (v[s].tag == TorelliVertex::Tag::BP &&
                v[(s + 4) % 6].tag == TorelliVertex::Tag::BP)
                bp_at = s;
        std::array<TorelliVertex, 6> w;
        for (int s = 0; s < 6; ++s) w[s] = v[(bp_at + 5 + s) % 6];
        cat.put_curve("type1.alpha", t1_alpha.w, "nonsep");
        cat.put_curve("type1.a", w[0].merged.w, "h-curve");
        cat.put_curve("type1.b1", (w[1].first.w == t1_alpha.w ? w[1].second->w : w[1].first.w),
                      "nonsep");
        cat.put_curve("type1.c", w[2].merged.w, "h-curve");
        cat.put_curve("type1.d", w[3].merged.w, "h-curve");
        cat.put_curve("type1.e", w[4].merged.w, "h-curve");
        cat.put_curve("type1.f1", (w[5].first.w == t1_alpha.w ? w[5].second->w : w[5].first.w),
                      "nonsep");
    }
    std::printf("  type1 done\n");

    // --- type 2: smallest census hexagon at W=18 ---
    auto verts18 = enumerate_vertices(CT, 20, 0);
    auto view18 = build_torelli_view(CT, verts18, "W=20", 0);
    auto cycles = find_simple_cycles(view18, 6);
    std::optional<Hexagon> t2hex;
    for (const auto& cyc : cycles) {
        if (cyc.size() != 6) continue;
        std::vector<TorelliVertex> six;
        for (int i : cyc) six.push_back(view18.vertices[i]);
        auto hx = is_hexagon(six);
        if (hx && hx->type == 2) {
            t2hex = hx;
            break;
        }
    }
    if (!t2hex) throw std::runtime_error("no type-2 hexagon at W=20");
    CurvePool pool = make_curve_pool(CT, 22, 10);
    auto [a0, d0] = special_curves(*t2hex);
    Multicurve zt = zeta(*t2hex, pool);
    long long m0 = twist_exponent(*t2hex, zt, 6);
    std::printf("  type2: base m0=%lld\n", m0);
    {
        // frame (a, b, c, d, e, f) with BPs at 0 and 3
        std::vector<int> bp;
        for (int i = 0; i < 6; ++i)
            if (t2hex->v[i].tag == TorelliVertex::Tag::BP) bp.push_back(i);
        std::array<const TorelliVertex*, 6> f{};
        for (int s = 0; s < 6; ++s) f[s] = &t2hex->v[(bp[0] + s) % 6];
        const auto& A = *f[0];
        const auto& D = *f[3];
        Multicurve a1 = (A.first.w == a0.w) ? *A.second : A.first;
        Multicurve d1 = (D.first.w == d0.w) ? *D.second : D.first;
        // recenter (b, c) at the zeta-orbit weight minimum so the two-sided
        // family stays in search range
        Multicurve b = f[1]->merged, c = f[2]->merged;
        long long best_k = 0;
        Weight best = b.total_weight();
        for (long long k = -3; k <= 3; ++k) {
            Weight tw = dehn_twist(zt, b, k).total_weight();
            if (tw < best) {
                best = tw;
                best_k = k;
            }
        }
        b = dehn_twist(zt, b, best_k);
        c = dehn_twist(zt, c, best_k);
        cat.put_curve("type2.a0", a0.w, "nonsep");
        cat.put_curve("type2.a1", a1.w, "nonsep");
        cat.put_curve("type2.b", b.w, "h-curve");
        cat.put_curve("type2.c", c.w, "h-curve");
        cat.put_curve("type2.d0", d0.w, "nonsep");
        cat.put_curve("type2.d1", d1.w, "nonsep");
        cat.put_curve("type2.zeta", zt.w, "nonsep");
        cat.put_curve("type2.bprime", dehn_twist(zt, b, 1).w, "h-curve");
        cat.put_curve("type2.cprime", dehn_twist(zt, c, 1).w, "h-curve");
        // companions of the m = +1 and m = -1 family members
        auto A_bp = make_bp_vertex(lift(a0), a1);
        auto D_bp = make_bp_vertex(lift(d0), d1);
        for (long long m : {+1LL, -1LL}) {
            auto hx = build_type2_hexagon(A_bp, b, c, D_bp, zt, m);
            std::array<TorelliVertex, 4> L{make_h_vertex(dehn_twist(zt, b, m)), A_bp,
                                           make_h_vertex(b), make_h_vertex(c)};
            auto comps = companion_hexagons(hx, pool, 6, L);
            if (comps.size() != 1) throw std::runtime_error("companion count != 1");
            if (m == 1) {
                cat.put_curve("type2.eta_plus", comps[0].eta.w, "nonsep");
                cat.put_curve("type2.x1", comps[0].x1.w, "nonsep");
            } else {
                cat.put_curve("type2.eta_minus", comps[0].eta.w, "nonsep");
                cat.put_curve("type2.y1", comps[0].x1.w, "nonsep");
            }
        }
    }
    std::printf("  type2 done\n");

    // --- gene curves for the E-graph square ---
    {
        Multicurve alpha = cat.curve("type1.alpha");
        Multicurve a1c = cat.curve("type1.b1");
        Multicurve a2c = cat.curve("type1.f1");
        std::optional<Multicurve> g1, g2, g3, g4;
        for (const auto& z : p22.nonsep) {
            if (gi(z, alpha) != 0) continue;
            if (!g1 && gi(z, a1c) == 0 && gi(z, a2c) != 0) {
                g1 = z;
                continue;
            }
            if (g1 && !g2 && gi(z, a2c) == 0 && gi(z, a1c) != 0 && gi(z, *g1) == 0) {
                g2 = z;
                continue;
            }
        }
        for (const auto& z : p22.nonsep) {
            if (gi(z, alpha) != 0) continue;
            if (g1 && z.w == g1->w) continue;
            if (g2 && z.w == g2->w) continue;
            // gamma3/gamma4 must move both BP partners to spread the squares
            if (gi(z, a1c) == 0 || gi(z, a2c) == 0) continue;
            if (!g3) {
                g3 = z;
                continue;
            }
            if (!g4 && !(z.w == g3->w)) {
                g4 = z;
                break;
            }
        }
        if (!g1 || !g2 || !g3 || !g4) throw std::runtime_error("gene curves not found");
        cat.put_curve("gene.gamma1", g1->w, "nonsep");
        cat.put_curve("gene.gamma2", g2->w, "nonsep");
        cat.put_curve("gene.gamma3", g3->w, "nonsep");
        cat.put_curve("gene.gamma4", g4->w, "nonsep");
    }
    std::printf("  gene done\n");

    emit_intersections(&cat);
    std::ofstream out(data_dir() + "/catalog_S2_1.json");
    out << cat.to_json_text() << "\n";
    std::printf("  catalog_S2_1.json written\n");
}

void gen_S1_3() {
    auto T = load_surface("S1_3");
    Catalog cat(std::make_shared<Triangulation>(T));
    const Triangulation& CT = cat.tri();

    auto curves = enumerate_single_curves(CT, 16);
    std::printf("[S1_3] curves=%zu\n", curves.size());
    std::vector<Multicurve> seps, ns;
    std::vector<SeparatingKind> sk;
    for (const auto& c : curves) {
        Multicurve m{&CT, c.curve.w};
        if (c.separating) {
            seps.push_back(m);
            sk.push_back(c.kind);
        } else {
            ns.push_back(m);
        }
    }

    // pants punctures of a p-curve
    auto pants_punct = [&](const Multicurve& c) -> std::set<int> {
        for (const auto& piece : cut_invariants(c).pieces)
            if (piece.genus == 0 && piece.num_boundary() == 1 && piece.punctures.size() == 2)
                return {piece.punctures.begin(), piece.punctures.end()};
        return {};
    };
    // separates punctures 1 and 2 (the alpha boundaries)?
    auto splits_alphas = [&](const Multicurve& c) {
        auto rep = cut_invariants(c);
        if (rep.pieces.size() != 2) return false;
        for (const auto& piece : rep.pieces) {
            bool has1 = false, has2 = false;
            for (int q : piece.punctures) {
                has1 = has1 || q == 1;
                has2 = has2 || q == 2;
            }
            if (has1 && has2) return false;
        }
        return true;
    };

    std::vector<int> side_idx;  // candidates for b1/f1: p-curves splitting 1|2
    std::vector<int> mid_idx;   // candidates for a,c,d,e
    for (int i = 0; i < static_cast<int>(seps.size()); ++i) {
        if (sk[i] == SeparatingKind::PCurve && splits_alphas(seps[i]))
            side_idx.push_back(i);
        else if (!splits_alphas(seps[i]))
            mid_idx.push_back(i);
    }
    std::printf("  b1/f1 candidates=%zu mid=%zu\n", side_idx.size(), mid_idx.size());

    bool found = false;
    for (int ib : side_idx) {
        for (int if_ : side_idx) {
            if (if_ == ib || gi(seps[ib], seps[if_]) == 0) continue;
            for (int ia : mid_idx) {
                if (gi(seps[ia], seps[ib]) != 0 || gi(seps[ia], seps[if_]) != 0) continue;
                for (int ic : mid_idx) {
                    if (ic == ia) continue;
                    if (gi(seps[ic], seps[ib]) != 0) continue;
                    if (gi(seps[ic], seps[ia]) == 0 || gi(seps[ic], seps[if_]) == 0) continue;
                    for (int id : mid_idx) {
                        if (id == ia || id == ic) continue;
                        if (gi(seps[id], seps[ic]) != 0) continue;
                        if (gi(seps[id], seps[ia]) == 0 || gi(seps[id], seps[ib]) == 0 ||
                            gi(seps[id], seps[if_]) == 0)
                            continue;
                        for (int ie : mid_idx) {
                            if (ie == ia || ie == ic || ie == id) continue;
                            if (gi(seps[ie], seps[id]) != 0 || gi(seps[ie], seps[if_]) != 0)
                                continue;
                            if (gi(seps[ie], seps[ia]) == 0 || gi(seps[ie], seps[ib]) == 0 ||
                                gi(seps[ie], seps[ic]) == 0)
                                continue;
                            cat.put_curve("fig1.a", seps[ia].w,
                                          sk[ia] == SeparatingKind::HCurve ? "h-curve"
                                                                           : "p-curve");
                            cat.put_curve("fig1.b1", seps[ib].w, "p-curve");
                            cat.put_curve("fig1.c", seps[ic].w,
                                          sk[ic] == SeparatingKind::HCurve ? "h-curve"
                                                                           : "p-curve");
                            cat.put_curve("fig1.d", seps[id].w,
                                          sk[id] == SeparatingKind::HCurve ? "h-curve"
                                                                           : "p-curve");
                            cat.put_curve("fig1.e", seps[ie].w,
                                          sk[ie] == SeparatingKind::HCurve ? "h-curve"
                                                                           : "p-curve");
                            cat.put_curve("fig1.f1", seps[if_].w, "p-curve");
                            found = true;
                            break;
                        }
                        if (found) break;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (found) break;
    }
    if (!found) throw std::runtime_error("no fig1 hexagon in S1_3");
    std::printf("  fig1 done\n");

    // --- fig2 pentagon (A, b, c, d, Z) with A = {a0,a1}, Z = {a0,zeta} ---
    auto verts = enumerate_vertices(CT, 12, 0);
    auto view = build_torelli_view(CT, verts, "S1_3 W=12", 0);
    auto pents = find_pentagons(view);
    std::printf("  pentagons at W=12: %zu\n", pents.size());
    bool got = false;
    for (const auto& P : pents) {
        // rotate: two adjacent BPs at positions 0 and 4
        std::array<TorelliVertex, 5> v = P.v;
        for (int r = 0; r < 5 && !got; ++r) {
            std::array<TorelliVertex, 5> w;
            for (int s = 0; s < 5; ++s) w[s] = v[(r + s) % 5];
            if (w[0].tag != TorelliVertex::Tag::BP || w[4].tag != TorelliVertex::Tag::BP)
                continue;
            // shared curve a0
            std::optional<Multicurve> a0;
            for (const Multicurve* x : {&w[0].first, &*w[0].second})
                for (const Multicurve* y : {&w[4].first, &*w[4].second})
                    if (x->w == y->w) a0 = *x;
            if (!a0) continue;
            Multicurve a1 = (w[0].first.w == a0->w) ? *w[0].second : w[0].first;
            Multicurve zt = (w[4].first.w == a0->w) ? *w[4].second : w[4].first;
            cat.put_curve("fig2.a0", a0->w, "nonsep");
            cat.put_curve("fig2.a1", a1.w, "nonsep");
            cat.put_curve("fig2.b", w[1].merged.w, cls_of(w[1].merged));
            cat.put_curve("fig2.c", w[2].merged.w, cls_of(w[2].merged));
            cat.put_curve("fig2.d", w[3].merged.w, cls_of(w[3].merged));
            cat.put_curve("fig2.zeta", zt.w, "nonsep");
            got = true;
        }
        if (got) break;
    }
    if (!got) throw std::runtime_error("no fig2 pentagon");
    std::printf("  fig2 done\n");

    emit_intersections(&cat);
    std::ofstream out(data_dir() + "/catalog_S1_3.json");
    out << cat.to_json_text() << "\n";
    std::printf("  catalog_S1_3.json written\n");
}

}  // namespace

int main(int argc, char** argv) {
    std::string which = argc > 1 ? argv[1] : "all";
    try {
        if (which == "S2_1" || which == "all") gen_S2_1();
        if (which == "S1_3" || which == "all") gen_S1_3();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "catalog_gen failed: %s\n", e.what());
        return 1;
    }
    return 0;
}
