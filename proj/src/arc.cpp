#include "hexlab/arc.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hexlab/cut.hpp"
#include "hexlab/intersection.hpp"
#include "json.hpp"

namespace hexlab {

namespace {

int opposite_corner_of_side(int side) {
    return 3 * Triangulation::tri_of(side) + Triangulation::loc_of(side);
}

}  // namespace

int NormalArc::start_corner() const {
    if (is_edge_parallel()) {
        int s0 = tri->sides_of_edge(parallel_edge)[0];
        return 3 * Triangulation::tri_of(s0) + (Triangulation::loc_of(s0) + 1) % 3;
    }
    return opposite_corner_of_side(word.front());
}

int NormalArc::end_corner() const {
    if (is_edge_parallel()) {
        int s0 = tri->sides_of_edge(parallel_edge)[0];
        return 3 * Triangulation::tri_of(s0) + (Triangulation::loc_of(s0) + 2) % 3;
    }
    int in = tri->partner(word.back());
    return opposite_corner_of_side(in);
}

std::array<int, 2> NormalArc::endpoints() const {
    return {tri->puncture_of_corner(start_corner()), tri->puncture_of_corner(end_corner())};
}

std::vector<Weight> NormalArc::weights() const {
    std::vector<Weight> w(tri->num_edges(), 0);
    for (int s : word) w[tri->edge_of_side(s)] += 1;
    return w;
}

std::vector<int> NormalArc::end_counts() const {
    std::vector<int> eps(tri->num_sides(), 0);
    if (!is_edge_parallel()) {
        eps[start_corner()] += 1;
        eps[end_corner()] += 1;
    }
    return eps;
}

std::vector<int> NormalArc::canonical() const {
    if (is_edge_parallel()) return {-1, parallel_edge};
    std::vector<int> rev(word.rbegin(), word.rend());
    for (int& s : rev) s = tri->partner(s);
    return std::min(word, rev);
}

namespace {

// strands of an arc system traced from total weights + per-corner end counts
struct SysStrand {
    std::vector<int> word;  // exit sides, start corner -> end corner
    // middle-band index of the first/last crossing on its side (radial data)
    int start_mid = -1, end_mid = -1;
};

struct SysTrace {
    std::vector<SysStrand> open;
    std::vector<std::vector<int>> closed;  // cyclic words of closed strands
    bool ok = false;
};

struct Layout {
    // per side: n_lo (corner k+1 arcs), eps (ends to corner k), n_hi
    Weight n_lo, eps, n_hi;
};

SysTrace trace_arc_system(const Triangulation& T, const std::vector<Weight>& w,
                          const std::vector<int>& eps) {
    SysTrace out;
    const int ns = T.num_sides();
    std::vector<Layout> lay(ns);
    for (int t = 0; t < T.num_triangles(); ++t) {
        Weight u[3];
        for (int k = 0; k < 3; ++k) {
            int s = Triangulation::side_id(t, k);
            u[k] = w[T.edge_of_side(s)] - eps[3 * t + k];
            if (u[k] < 0) return out;
        }
        Weight n[3];
        for (int c = 0; c < 3; ++c) {
            Weight v = u[(c + 1) % 3] + u[(c + 2) % 3] - u[c];
            if (v < 0 || v % 2 != 0) return out;
            n[c] = v / 2;
        }
        // an end chord into corner c crosses every corner-c arc, and end
        // chords into two different corners of one triangle cross each other
        int end_corners = 0;
        for (int c = 0; c < 3; ++c) {
            if (eps[3 * t + c] > 0) {
                ++end_corners;
                if (n[c] != 0) return out;
            }
        }
        if (end_corners > 1) return out;
        for (int k = 0; k < 3; ++k) {
            int s = Triangulation::side_id(t, k);
            lay[s] = Layout{n[(k + 1) % 3], static_cast<Weight>(eps[3 * t + k]), n[(k + 2) % 3]};
            if (lay[s].n_lo + lay[s].eps + lay[s].n_hi != w[T.edge_of_side(s)]) return out;
        }
    }

    auto side_w = [&](int s) { return w[T.edge_of_side(s)]; };
    // chord partner inside the triangle; (-1, mid_index) marks an arc end
    auto chord = [&](int s, Weight pos) -> std::pair<int, Weight> {
        int t = Triangulation::tri_of(s), k = Triangulation::loc_of(s);
        const Layout& L = lay[s];
        if (pos < L.n_lo) {
            // corner k+1 arc j = pos: other end (side k+2, w_{k+2}-1-j)
            int s2 = Triangulation::side_id(t, (k + 2) % 3);
            return {s2, side_w(s2) - 1 - pos};
        }
        if (pos < L.n_lo + L.eps) return {-1, pos - L.n_lo};  // ends at corner k
        // corner k+2 arc j = w-1-pos: other end (side k+1, j)
        Weight j = side_w(s) - 1 - pos;
        int s1 = Triangulation::side_id(t, (k + 1) % 3);
        return {s1, j};
    };
    auto across = [&](int s, Weight pos) -> std::pair<int, Weight> {
        return {T.partner(s), side_w(s) - 1 - pos};
    };

    std::map<std::pair<int, Weight>, char> used;
    for (int s = 0; s < ns; ++s)
        for (Weight p = 0; p < side_w(s); ++p) used[{s, p}] = 0;

    // open strands: start from each end slot
    for (int s0 = 0; s0 < ns; ++s0) {
        const Layout& L = lay[s0];
        for (Weight i = 0; i < L.eps; ++i) {
            Weight pos0 = L.n_lo + i;
            if (used[{s0, pos0}]) continue;
            SysStrand st;
            st.start_mid = static_cast<int>(i);
            // leaves the corner, crosses side s0 at pos0
            int s = s0;
            Weight pos = pos0;
            for (;;) {
                used[{s, pos}] = 1;
                st.word.push_back(s);
                auto [s2, pos2] = across(s, pos);
                used[{s2, pos2}] = 1;
                auto [s3, pos3] = chord(s2, pos2);
                if (s3 == -1) {
                    st.end_mid = static_cast<int>(pos3);
                    break;
                }
                s = s3;
                pos = pos3;
            }
            out.open.push_back(std::move(st));
        }
    }
    // leftovers are closed strands
    for (int s0 = 0; s0 < ns; ++s0)
        for (Weight p0 = 0; p0 < side_w(s0); ++p0) {
            if (used[{s0, p0}]) continue;
            std::vector<int> word;
            int s = s0;
            Weight pos = p0;
            do {
                auto [sc, pc] = chord(s, pos);
                if (sc == -1) return out;  // end slot reached twice: corrupt
                used[{sc, pc}] = 1;
                word.push_back(sc);
                auto [sa, pa] = across(sc, pc);
                used[{sa, pa}] = 1;
                s = sa;
                pos = pa;
            } while (!(s == s0 && pos == p0));
            out.closed.push_back(std::move(word));
        }
    out.ok = true;
    return out;
}

std::vector<int> word_canonical(const Triangulation& T, const std::vector<int>& word) {
    std::vector<int> rev(word.rbegin(), word.rend());
    for (int& s : rev) s = T.partner(s);
    return std::min(word, rev);
}

}  // namespace

NormalArc arc_from_word(const Triangulation& T, std::vector<int> word) {
    if (word.empty()) throw CurveError("empty arc word; use arc_parallel_to_edge");
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        if (Triangulation::tri_of(word[i + 1]) != Triangulation::tri_of(T.partner(word[i])))
            throw CurveError("arc word not a dual path");
        if (word[i + 1] == T.partner(word[i])) throw CurveError("arc word has a spur");
    }
    NormalArc a{&T, std::move(word), -1};
    // embeddedness: the arc's own system trace must reproduce it
    auto tr = trace_arc_system(T, a.weights(), a.end_counts());
    if (!tr.ok || tr.open.size() != 1 || !tr.closed.empty() ||
        word_canonical(T, tr.open[0].word) != a.canonical())
        throw CurveError("arc word is not embeddable");
    return a;
}

NormalArc arc_parallel_to_edge(const Triangulation& T, int edge) {
    if (edge < 0 || edge >= T.num_edges()) throw CurveError("bad edge id");
    return NormalArc{&T, {}, edge};
}

std::vector<NormalArc> enumerate_arcs(const Triangulation& T, int max_crossings) {
    std::set<std::vector<int>> seen;
    std::vector<NormalArc> out;
    for (int e = 0; e < T.num_edges(); ++e) {
        out.push_back(arc_parallel_to_edge(T, e));
        seen.insert(out.back().canonical());
    }
    std::vector<int> word;
    std::function<void()> dfs = [&]() {
        if (!word.empty()) {
            auto can = word_canonical(T, word);
            if (!seen.count(can)) {
                // keep only embeddable words
                try {
                    NormalArc a = arc_from_word(T, word);
                    seen.insert(can);
                    out.push_back(a);
                } catch (const CurveError&) {
                }
            }
        }
        if (static_cast<int>(word.size()) >= max_crossings) return;
        if (word.empty()) {
            for (int s = 0; s < T.num_sides(); ++s) {
                word.push_back(s);
                dfs();
                word.pop_back();
            }
        } else {
            int u = Triangulation::tri_of(T.partner(word.back()));
            for (int k = 0; k < 3; ++k) {
                int s = Triangulation::side_id(u, k);
                if (s == T.partner(word.back())) continue;
                word.push_back(s);
                dfs();
                word.pop_back();
            }
        }
    };
    dfs();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool arcs_disjoint(const NormalArc& a, const NormalArc& b) {
    const Triangulation& T = *a.tri;
    if (a == b) return true;
    if (a.is_edge_parallel() && b.is_edge_parallel()) return true;  // distinct edges
    if (a.is_edge_parallel()) return b.weights()[a.parallel_edge] == 0;
    if (b.is_edge_parallel()) return a.weights()[b.parallel_edge] == 0;
    auto wa = a.weights(), wb = b.weights();
    std::vector<Weight> w(T.num_edges());
    for (int e = 0; e < T.num_edges(); ++e) w[e] = wa[e] + wb[e];
    auto ea = a.end_counts(), eb = b.end_counts();
    std::vector<int> eps(T.num_sides());
    for (int c = 0; c < T.num_sides(); ++c) eps[c] = ea[c] + eb[c];
    auto tr = trace_arc_system(T, w, eps);
    if (!tr.ok || tr.open.size() != 2 || !tr.closed.empty()) return false;
    std::multiset<std::vector<int>> got, want;
    got.insert(word_canonical(T, tr.open[0].word));
    got.insert(word_canonical(T, tr.open[1].word));
    want.insert(a.canonical());
    want.insert(b.canonical());
    return got == want;
}

bool arc_curve_disjoint(const NormalArc& a, const Multicurve& c) {
    const Triangulation& T = *a.tri;
    if (a.is_edge_parallel()) return c.w[a.parallel_edge] == 0;
    auto wa = a.weights();
    std::vector<Weight> w(T.num_edges());
    for (int e = 0; e < T.num_edges(); ++e) w[e] = wa[e] + c.w[e];
    auto tr = trace_arc_system(T, w, a.end_counts());
    if (!tr.ok || tr.open.size() != 1) return false;
    if (word_canonical(T, tr.open[0].word) != a.canonical()) return false;
    // the closed strands must reproduce the curve's components
    std::multiset<std::vector<int>> got, want;
    for (const auto& cw : tr.closed) got.insert(canonical_unoriented(T, cw));
    Trace tc = trace_multicurve(c);
    for (const auto& comp : tc.comps) want.insert(canonical_unoriented(T, comp.word));
    return got == want;
}

// ---------------------------------------------------------------------------
// radial germ structure and neighborhood-boundary walks

namespace {

// one germ of the system at a puncture
struct Germ {
    int strand;  // index of the arc/strand
    int which;   // 0 = start germ, 1 = end germ
};

// radial cyclic germ lists per puncture for a system of traced strands plus
// edge-parallel arcs; rotation follows corner_rot_next (sweeps each sector in
// increasing middle-band position, then the flanking side c+1 slot)
struct RadialData {
    std::vector<std::vector<Germ>> at;  // per puncture, cyclic order
    // position of each germ: (strand, which) -> (puncture, index)
    std::map<std::pair<int, int>, std::pair<int, int>> pos;

    const Germ& step(int punct, int idx, int dir, int steps = 1) const {
        const auto& cyc = at[punct];
        int n = static_cast<int>(cyc.size());
        int j = ((idx + dir * steps) % n + n) % n;
        return cyc[j];
    }
};

struct WalkSystem {
    const Triangulation* T;
    // per strand: word (possibly empty for edge-parallel) and its edge id
    struct Strand {
        std::vector<int> word;
        int parallel_edge = -1;
        int start_corner, end_corner;       // corner ids
        int start_mid = 0, end_mid = 0;     // middle-band indices (word strands)
    };
    std::vector<Strand> strands;
    RadialData radial;
};

// builds radial data; `emit_all_edges` = also include non-system edge germs
// (needed for neighborhood walks that cross them); system edge-parallel arcs
// claim their slots
struct RadialItem {
    bool is_edge_slot;
    int edge_side;  // side crossed at this slot (exit side when rotating +)
    Germ germ;      // valid when a system germ occupies the position
    bool has_germ;
};

std::vector<std::vector<RadialItem>> radial_items(const Triangulation& T,
                                                  const WalkSystem& sys) {
    // map: corner -> (mid index -> germ) for word strands
    std::map<std::pair<int, int>, Germ> word_germs;  // (corner, mid) -> germ
    std::map<std::pair<int, int>, Germ> edge_germs;  // (edge, end#) -> germ
    for (int i = 0; i < static_cast<int>(sys.strands.size()); ++i) {
        const auto& st = sys.strands[i];
        if (st.parallel_edge >= 0) {
            edge_germs[{st.parallel_edge, 0}] = Germ{i, 0};
            edge_germs[{st.parallel_edge, 1}] = Germ{i, 1};
        } else {
            word_germs[{st.start_corner, st.start_mid}] = Germ{i, 0};
            word_germs[{st.end_corner, st.end_mid}] = Germ{i, 1};
        }
    }
    std::vector<std::vector<RadialItem>> items(T.num_punctures());
    for (int v = 0; v < T.num_punctures(); ++v) {
        for (int corner : T.corners_at(v)) {
            int t = corner / 3, c = corner % 3;
            // sector germs by increasing middle index
            std::vector<std::pair<int, Germ>> sector;
            for (const auto& [key, g] : word_germs)
                if (key.first == corner) sector.push_back({key.second, g});
            std::sort(sector.begin(), sector.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [mid, g] : sector)
                items[v].push_back(RadialItem{false, -1, g, true});
            // flanking slot: crossing side c+1 at its corner-c end
            int side = Triangulation::side_id(t, (c + 1) % 3);
            int e = T.edge_of_side(side);
            RadialItem slot{true, side, Germ{-1, -1}, false};
            auto it = edge_germs.find({e, 0});
            if (it != edge_germs.end()) {
                // which end of the edge is this slot: end germ if the canonical
                // side is (t, c+1), start germ otherwise
                bool canonical_here = T.sides_of_edge(e)[0] == side;
                auto g = edge_germs.at({e, canonical_here ? 1 : 0});
                slot.germ = g;
                slot.has_germ = true;
            }
            items[v].push_back(slot);
        }
    }
    return items;
}

// face/neighborhood successor walk.  State: (strand, side) with side 0 = left
// of the strand direction; traversal direction = forward for side 0.  At the
// arrival germ the walk steps against the rotation (radial -1) to the next
// *system* germ, emitting the side letters of ordinary edge slots it passes.
struct WalkState {
    int strand, side;
    bool operator<(const WalkState& o) const {
        return std::tie(strand, side) < std::tie(o.strand, o.side);
    }
    bool operator==(const WalkState& o) const = default;
};

struct StepResult {
    WalkState next;
    std::vector<int> emitted;  // exit sides crossed while rotating
};

struct WalkContext {
    const Triangulation* T;
    const WalkSystem* sys;
    std::vector<std::vector<RadialItem>> items;  // per puncture
    // germ location: (strand, which) -> (puncture, item index)
    std::map<std::pair<int, int>, std::pair<int, int>> where;

    void locate() {
        for (int v = 0; v < static_cast<int>(items.size()); ++v)
            for (int i = 0; i < static_cast<int>(items[v].size()); ++i)
                if (items[v][i].has_germ)
                    where[{items[v][i].germ.strand, items[v][i].germ.which}] = {v, i};
    }

    int puncture_of_corner(int corner) const { return T->puncture_of_corner(corner); }

    StepResult step(const WalkState& s) const {
        const auto& st = sys->strands[s.strand];
        // arrival germ: side 0 travels start->end, so arrives at the end germ
        int which = (s.side == 0) ? 1 : 0;
        auto [v, idx] = where.at({s.strand, which});
        const auto& cyc = items[v];
        int n = static_cast<int>(cyc.size());
        StepResult res;
        for (int k = 1; k <= n; ++k) {
            const RadialItem& it = cyc[((idx - k) % n + n) % n];
            if (it.has_germ) {
                // continue away from the puncture: leaving via a start germ
                // travels forward (face stays on side 0), via an end germ
                // travels backward (side 1)
                res.next = WalkState{it.germ.strand, it.germ.which == 0 ? 0 : 1};
                return res;
            }
            if (it.is_edge_slot) {
                // rotating against rot_next exits through side c+2 of the
                // sector *before* the slot; equivalently the partner of the
                // slot's side seen from the far triangle
                res.emitted.push_back(T->partner(it.edge_side));
            }
        }
        throw std::logic_error("radial walk found no system germ");
    }

    // letters of one full strand-side traversal
    std::vector<int> strand_letters(const WalkState& s) const {
        const auto& st = sys->strands[s.strand];
        if (st.parallel_edge >= 0) return {};  // runs along the edge, no crossings
        if (s.side == 0) return st.word;
        std::vector<int> rev(st.word.rbegin(), st.word.rend());
        for (int& x : rev) x = T->partner(x);
        return rev;
    }
};

WalkContext make_context(const Triangulation& T, const WalkSystem& sys) {
    WalkContext ctx;
    ctx.T = &T;
    ctx.sys = &sys;
    ctx.items = radial_items(T, sys);
    ctx.locate();
    return ctx;
}

WalkSystem single_arc_system(const NormalArc& l) {
    WalkSystem sys;
    sys.T = l.tri;
    WalkSystem::Strand st;
    if (l.is_edge_parallel()) {
        st.parallel_edge = l.parallel_edge;
        st.start_corner = l.start_corner();
        st.end_corner = l.end_corner();
    } else {
        auto tr = trace_arc_system(*l.tri, l.weights(), l.end_counts());
        if (!tr.ok || tr.open.size() != 1) throw CurveError("arc failed to trace");
        st.word = tr.open[0].word;
        st.start_mid = tr.open[0].start_mid;
        st.end_mid = tr.open[0].end_mid;
        st.start_corner = opposite_corner_of_side(st.word.front());
        st.end_corner = opposite_corner_of_side(l.tri->partner(st.word.back()));
    }
    sys.strands.push_back(st);
    return sys;
}

// boundary circles of a regular neighborhood of (arc + its end punctures):
// closed words, one per orbit of the walk
std::vector<std::vector<int>> neighborhood_boundary(const NormalArc& l) {
    const Triangulation& T = *l.tri;
    WalkSystem sys = single_arc_system(l);
    WalkContext ctx = make_context(T, sys);
    std::vector<std::vector<int>> circles;
    std::set<WalkState> seen;
    for (int side : {0, 1}) {
        WalkState s0{0, side};
        if (seen.count(s0)) continue;
        std::vector<int> word;
        WalkState s = s0;
        do {
            seen.insert(s);
            auto letters = ctx.strand_letters(s);
            word.insert(word.end(), letters.begin(), letters.end());
            auto res = ctx.step(s);
            word.insert(word.end(), res.emitted.begin(), res.emitted.end());
            s = res.next;
        } while (!(s == s0));
        circles.push_back(word);
    }
    return circles;
}

}  // namespace

std::pair<Multicurve, Multicurve> bp_from_arc(const NormalArc& l) {
    const Triangulation& T = *l.tri;
    int base = T.basepoint_puncture();
    auto ends = l.endpoints();
    if (ends[0] != base || ends[1] != base)
        throw CurveError("bp_from_arc needs both endpoints at the boundary puncture");
    auto circles = neighborhood_boundary(l);
    if (circles.size() != 2)
        throw CurveError("bp_from_arc: arc is separating (single boundary circle)");
    Multicurve c1 = curve_from_word(T, circles[0]);
    Multicurve c2 = curve_from_word(T, circles[1]);
    if (!is_bounding_pair(c1, c2))
        throw CurveError("bp_from_arc: boundary curves do not form a bounding pair");
    if (c2.w < c1.w) std::swap(c1, c2);
    return {c1, c2};
}

Multicurve pcurve_from_arc(const NormalArc& l) {
    const Triangulation& T = *l.tri;
    auto ends = l.endpoints();
    if (ends[0] == ends[1]) throw CurveError("pcurve_from_arc needs distinct endpoints");
    auto circles = neighborhood_boundary(l);
    if (circles.size() != 1)
        throw std::logic_error("pcurve_from_arc: expected one boundary circle");
    Multicurve c = curve_from_word(T, circles[0]);
    if (!is_single_curve(c)) throw CurveError("pcurve_from_arc: degenerate boundary");
    return c;
}

std::optional<NormalArc> arc_in_pants(const Multicurve& pcurve,
                                      const std::vector<NormalArc>& pool) {
    auto rep = cut_invariants(pcurve);
    std::vector<int> pants_punctures;
    for (const auto& p : rep.pieces)
        if (p.genus == 0 && p.num_boundary() == 1 && p.punctures.size() == 2)
            pants_punctures = p.punctures;
    if (pants_punctures.empty()) return std::nullopt;
    for (const auto& l : pool) {
        auto e = l.endpoints();
        if (std::minmax(e[0], e[1]) !=
            std::minmax(pants_punctures[0], pants_punctures[1]))
            continue;
        if (!arc_curve_disjoint(l, pcurve)) continue;
        return l;
    }
    return std::nullopt;
}

std::vector<int> complement_face_sides(const std::vector<NormalArc>& arcs) {
    if (arcs.empty()) return {};
    const Triangulation& T = *arcs[0].tri;
    // joint trace of the non-parallel arcs
    std::vector<Weight> w(T.num_edges(), 0);
    std::vector<int> eps(T.num_sides(), 0);
    std::vector<const NormalArc*> parallels;
    int word_arcs = 0;
    for (const auto& a : arcs) {
        if (a.is_edge_parallel()) {
            parallels.push_back(&a);
            continue;
        }
        ++word_arcs;
        auto wa = a.weights();
        for (int e = 0; e < T.num_edges(); ++e) w[e] += wa[e];
        auto ea = a.end_counts();
        for (int c = 0; c < T.num_sides(); ++c) eps[c] += ea[c];
    }
    WalkSystem sys;
    sys.T = &T;
    if (word_arcs > 0) {
        auto tr = trace_arc_system(T, w, eps);
        if (!tr.ok || static_cast<int>(tr.open.size()) != word_arcs || !tr.closed.empty())
            throw CurveError("complement_face_sides: system is not pairwise disjoint");
        for (const auto& st : tr.open) {
            WalkSystem::Strand s;
            s.word = st.word;
            s.start_mid = st.start_mid;
            s.end_mid = st.end_mid;
            s.start_corner = opposite_corner_of_side(st.word.front());
            s.end_corner = opposite_corner_of_side(T.partner(st.word.back()));
            sys.strands.push_back(s);
        }
    }
    for (const NormalArc* p : parallels) {
        WalkSystem::Strand s;
        s.parallel_edge = p->parallel_edge;
        s.start_corner = p->start_corner();
        s.end_corner = p->end_corner();
        sys.strands.push_back(s);
    }
    WalkContext ctx = make_context(T, sys);
    std::vector<int> sides;
    std::set<WalkState> seen;
    for (int i = 0; i < static_cast<int>(sys.strands.size()); ++i)
        for (int side : {0, 1}) {
            WalkState s0{i, side};
            if (seen.count(s0)) continue;
            int count = 0;
            WalkState s = s0;
            do {
                seen.insert(s);
                ++count;
                s = ctx.step(s).next;
            } while (!(s == s0));
            sides.push_back(count);
        }
    std::sort(sides.begin(), sides.end());
    return sides;
}

ArcView build_arc_view(const Triangulation& T, int max_crossings, bool kind_dual) {
    ArcView view;
    view.tri = &T;
    view.dual_only = kind_dual;
    view.provenance = "arcs with <= " + std::to_string(max_crossings) + " crossings";
    auto all = enumerate_arcs(T, max_crossings);
    int base = T.basepoint_puncture();
    int other = -1;
    for (int b : T.kind().boundary_punctures)
        if (b != base) other = b;
    for (const auto& a : all) {
        if (kind_dual) {
            auto e = a.endpoints();
            if (!((e[0] == base && e[1] == other) || (e[0] == other && e[1] == base))) continue;
        }
        view.arcs.push_back(a);
    }
    int n = view.size();
    view.adj.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            view.adj[i][j] = view.adj[j][i] = arcs_disjoint(view.arcs[i], view.arcs[j]) ? 1 : 0;
    return view;
}

namespace {
void bron_kerbosch(const ArcView& view, std::vector<int>& R, std::vector<int> P,
                   std::vector<int> X, std::vector<std::vector<int>>* out) {
    if (P.empty() && X.empty()) {
        out->push_back(R);
        return;
    }
    auto Pcopy = P;
    for (int v : Pcopy) {
        R.push_back(v);
        std::vector<int> P2, X2;
        for (int u : P)
            if (view.adj[v][u]) P2.push_back(u);
        for (int u : X)
            if (view.adj[v][u]) X2.push_back(u);
        bron_kerbosch(view, R, P2, X2, out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
    }
}
}  // namespace

std::vector<std::vector<int>> maximal_simplices(const ArcView& view) {
    std::vector<int> R, P, X;
    for (int i = 0; i < view.size(); ++i) P.push_back(i);
    std::vector<std::vector<int>> out;
    bron_kerbosch(view, R, P, X, &out);
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NormalArc> link_arcs_at_basepoint(const ArcView& view,
                                              const std::vector<int>& simplex) {
    const Triangulation& T = *view.tri;
    int base = T.basepoint_puncture();
    int max_crossings = 0;
    for (int i : simplex)
        max_crossings = std::max(max_crossings, static_cast<int>(view.arcs[i].word.size()));
    // the square diagonals can cross about twice as often as the square
    // sides; the pool is shared across repeated link queries
    static std::map<std::pair<std::string, int>, std::vector<NormalArc>> pool_cache;
    int bound = 2 * max_crossings + 4;
    auto key = std::pair{T.state_key({}), bound};
    auto it = pool_cache.find(key);
    if (it == pool_cache.end()) it = pool_cache.emplace(key, enumerate_arcs(T, bound)).first;
    const auto& all = it->second;
    std::vector<NormalArc> out;
    for (const auto& l : all) {
        auto e = l.endpoints();
        if (e[0] != base || e[1] != base) continue;
        bool ok = true;
        for (int i : simplex) ok = ok && arcs_disjoint(l, view.arcs[i]);
        if (ok) out.push_back(l);
    }
    return out;
}

std::string export_arc_json(const ArcView& view) {
    nlohmann::json j;
    j["schema"] = "hexlab-arcview-1";
    j["kind"] = view.dual_only ? "arcs-dual" : "arcs-all";
    j["triangulation"] = view.tri->name();
    j["provenance"] = view.provenance;
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& a : view.arcs) {
        nlohmann::json ja;
        ja["word"] = a.word;
        if (a.is_edge_parallel()) ja["parallel_edge"] = a.parallel_edge;
        ja["weights"] = a.weights();
        ja["endpoints"] = a.endpoints();
        arcs.push_back(ja);
    }
    j["arcs"] = arcs;
    nlohmann::json edges = nlohmann::json::array();
    for (int x = 0; x < view.size(); ++x)
        for (int y = x + 1; y < view.size(); ++y)
            if (view.adj[x][y]) edges.push_back({x, y});
    j["edges"] = edges;
    return j.dump(1);
}

}  // namespace hexlab
