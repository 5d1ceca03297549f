#include "hexlab/overlay.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hexlab {

namespace {
constexpr long long kKeyStride = 1LL << 32;
long long key_of(std::pair<int, long long> p) { return p.first * kKeyStride + p.second; }
bool in_ccw_arc(long long x, long long from, long long to) {
    if (from < to) return x > from && x < to;
    return x > from || x < to;
}
}  // namespace

Overlay::Overlay(const Triangulation& T, const Multicurve& a, const Multicurve& b) : T_(T) {
    ta_ = trace_multicurve(a);
    tb_ = trace_multicurve(b);
    for (const auto* tr : {&ta_, &tb_})
        for (const auto& c : tr->comps)
            if (c.length() < 2) throw CurveError("overlay: degenerate length-1 component");
    edge_seq_.assign(T.num_edges(), {});
    for (int which = 0; which < 2; ++which) {
        const Trace& tr = which == 0 ? ta_ : tb_;
        for (int c = 0; c < static_cast<int>(tr.comps.size()); ++c)
            for (int j = 0; j < tr.comps[c].length(); ++j)
                edge_seq_[T.edge_of_side(tr.comps[c].word[j])].push_back(Tok{which, c, j});
    }
    for (auto& seq : edge_seq_) {
        std::stable_sort(seq.begin(), seq.end(), [&](const Tok& x, const Tok& y) {
            if (x.which != y.which) return x.which < y.which;  // start with A before B
            int px = comp(x.which, x.comp).pos[x.j];
            int py = comp(y.which, y.comp).pos[y.j];
            return px < py;
        });
    }
}

int Overlay::find_slot(int edge, const Tok& t) const {
    const auto& seq = edge_seq_[edge];
    for (int q = 0; q < static_cast<int>(seq.size()); ++q)
        if (seq[q] == t) return q;
    throw std::logic_error("overlay token not found");
}

std::pair<int, long long> Overlay::boundary_pos(int, int side, const Tok& t) const {
    int e = T_.edge_of_side(side);
    int q = find_slot(e, t);
    long long local =
        (T_.sides_of_edge(e)[0] == side) ? q : static_cast<long long>(edge_seq_[e].size()) - 1 - q;
    return {Triangulation::loc_of(side), local};
}

std::vector<Overlay::Cross> Overlay::all_crossings() const {
    struct ChordData {
        ChordRef ref;
        long long k_entry, k_exit;
    };
    std::vector<std::vector<ChordData>> by_tri_a(T_.num_triangles()), by_tri_b(T_.num_triangles());
    for (int which = 0; which < 2; ++which) {
        const Trace& tr = which == 0 ? ta_ : tb_;
        for (int c = 0; c < static_cast<int>(tr.comps.size()); ++c) {
            const auto& cm = tr.comps[c];
            int L = cm.length();
            for (int j = 0; j < L; ++j) {
                int exit_side = cm.word[j];
                int entry_side = T_.partner(cm.word[(j + L - 1) % L]);
                int t = Triangulation::tri_of(exit_side);
                ChordData cd;
                cd.ref = ChordRef{which, c, j};
                cd.k_entry = key_of(boundary_pos(t, entry_side, Tok{which, c, (j + L - 1) % L}));
                cd.k_exit = key_of(boundary_pos(t, exit_side, Tok{which, c, j}));
                (which == 0 ? by_tri_a : by_tri_b)[t].push_back(cd);
            }
        }
    }
    std::vector<Cross> out;
    for (int t = 0; t < T_.num_triangles(); ++t)
        for (const auto& ca : by_tri_a[t])
            for (const auto& cb : by_tri_b[t]) {
                bool b_entry_in = in_ccw_arc(cb.k_entry, ca.k_entry, ca.k_exit);
                bool b_exit_in = in_ccw_arc(cb.k_exit, ca.k_entry, ca.k_exit);
                if (b_entry_in == b_exit_in) continue;
                out.push_back(Cross{ca.ref, cb.ref, t, b_entry_in ? +1 : -1});
            }
    return out;
}

std::vector<int> Overlay::crossings_on_chord(const std::vector<Cross>& xs,
                                             const ChordRef& c) const {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
        const auto& r = (c.which == 0) ? xs[i].a : xs[i].b;
        if (r.comp == c.comp && r.j == c.j) idx.push_back(i);
    }
    if (idx.size() <= 1) return idx;
    const auto& comp_c = comp(c.which, c.comp);
    int L = comp_c.length();
    int exit_side = comp_c.word[c.j];
    int entry_side = T_.partner(comp_c.word[(c.j + L - 1) % L]);
    int t = Triangulation::tri_of(exit_side);
    long long k_entry =
        key_of(boundary_pos(t, entry_side, Tok{c.which, c.comp, (c.j + L - 1) % L}));
    long long k_exit = key_of(boundary_pos(t, exit_side, Tok{c.which, c.comp, c.j}));
    auto sep_key = [&](const Cross& x) {
        const auto& d = (c.which == 0) ? x.b : x.a;
        const auto& comp_d = comp(d.which, d.comp);
        int Ld = comp_d.length();
        int d_exit = comp_d.word[d.j];
        int d_entry = T_.partner(comp_d.word[(d.j + Ld - 1) % Ld]);
        long long ke = key_of(boundary_pos(t, d_entry, Tok{d.which, d.comp, (d.j + Ld - 1) % Ld}));
        long long kx = key_of(boundary_pos(t, d_exit, Tok{d.which, d.comp, d.j}));
        long long k = in_ccw_arc(ke, k_entry, k_exit) ? ke : kx;
        return k >= k_entry ? k - k_entry : k + 3 * kKeyStride - k_entry;
    };
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return sep_key(xs[i]) < sep_key(xs[j]); });
    return idx;
}

long long Overlay::count_crossings() const {
    return static_cast<long long>(all_crossings().size());
}

bool Overlay::remove_one_bigon() {
    auto xs = all_crossings();
    if (xs.empty()) return false;

    // per-chord ordered crossing lists, built once per round
    std::map<std::tuple<int, int, int>, std::vector<int>> lists;
    auto chord_key = [](const ChordRef& c) { return std::tuple{c.which, c.comp, c.j}; };
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
        lists[chord_key(xs[i].a)];
        lists[chord_key(xs[i].b)];
    }
    for (auto& [key, vec] : lists) {
        ChordRef c{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
        vec = crossings_on_chord(xs, c);
    }
    auto list_of = [&](const ChordRef& c) -> const std::vector<int>* {
        auto it = lists.find(chord_key(c));
        return it == lists.end() ? nullptr : &it->second;
    };

    // from crossing xi along curve `which` in direction dir to the next
    // crossing; records the edges (and tokens) passed
    auto walk = [&](int xi, int which, int dir, std::vector<int>* edges,
                    std::vector<Tok>* toks) -> int {
        ChordRef c = (which == 0) ? xs[xi].a : xs[xi].b;
        int L = comp(c.which, c.comp).length();
        const auto* cur = list_of(c);
        int pos = -1;
        for (int q = 0; q < static_cast<int>(cur->size()); ++q)
            if ((*cur)[q] == xi) pos = q;
        long long guard = 2LL * L + 4 + static_cast<long long>(xs.size());
        while (guard-- > 0) {
            if (dir > 0) {
                if (cur && pos + 1 < static_cast<int>(cur->size())) return (*cur)[pos + 1];
                Tok tk{c.which, c.comp, c.j};
                toks->push_back(tk);
                edges->push_back(T_.edge_of_side(comp(c.which, c.comp).word[c.j]));
                c = ChordRef{c.which, c.comp, (c.j + 1) % L};
                cur = list_of(c);
                pos = -1;
            } else {
                if (cur && pos > 0) return (*cur)[pos - 1];
                int jprev = (c.j + L - 1) % L;
                Tok tk{c.which, c.comp, jprev};
                toks->push_back(tk);
                edges->push_back(T_.edge_of_side(comp(c.which, c.comp).word[jprev]));
                c = ChordRef{c.which, c.comp, jprev};
                cur = list_of(c);
                pos = cur ? static_cast<int>(cur->size()) : 0;
            }
        }
        return -1;
    };

    for (int xi = 0; xi < static_cast<int>(xs.size()); ++xi) {
        for (int da : {+1, -1})
            for (int db : {+1, -1}) {
                std::vector<int> ea, eb;
                std::vector<Tok> tka, tkb;
                int ya = walk(xi, 0, da, &ea, &tka);
                if (ya < 0 || ya == xi) continue;
                std::vector<int> eb2;
                int yb = walk(xi, 1, db, &eb, &tkb);
                if (yb != ya) continue;
                if (ea != eb) continue;
                // empty bigon: every rung pair must be adjacent on its edge
                for (size_t r = 0; r < tka.size(); ++r) {
                    int e = ea[r];
                    int qa = find_slot(e, tka[r]);
                    int qb = find_slot(e, tkb[r]);
                    if (std::abs(qa - qb) != 1)
                        throw std::logic_error("overlay: non-adjacent bigon rung");
                    std::swap(edge_seq_[e][qa], edge_seq_[e][qb]);
                }
                return true;
            }
    }
    return false;
}

long long Overlay::tighten() {
    while (remove_one_bigon()) {
    }
    return count_crossings();
}

std::vector<Overlay::Crossing> Overlay::crossings_along_b(int comp_b) const {
    auto xs = all_crossings();
    std::vector<Crossing> out;
    const auto& cm = tb_.comps[comp_b];
    for (int j = 0; j < cm.length(); ++j) {
        auto idx = crossings_on_chord(xs, ChordRef{1, comp_b, j});
        for (int i : idx)
            out.push_back(Crossing{xs[i].a.comp, xs[i].a.j, comp_b, j, xs[i].sign});
    }
    return out;
}

long long oracle_intersection(const Multicurve& a, const Multicurve& b) {
    if (a.tri != b.tri && !(*a.tri == *b.tri)) throw CurveError("mismatched triangulations");
    Overlay ov(*a.tri, a, b);
    return ov.tighten();
}

}  // namespace hexlab
