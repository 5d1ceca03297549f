#include "hexlab/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hexlab {

Weight Multicurve::total_weight() const { return std::accumulate(w.begin(), w.end(), Weight{0}); }

bool weights_admissible(const Triangulation& T, const std::vector<Weight>& w, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (static_cast<int>(w.size()) != T.num_edges()) return fail("weight vector length mismatch");
    for (Weight x : w)
        if (x < 0) return fail("negative weight");
    bool any = false;
    for (Weight x : w) any = any || x > 0;
    if (!any) return fail("empty multicurve");
    for (int t = 0; t < T.num_triangles(); ++t) {
        Weight a = w[T.edge_of_side(Triangulation::side_id(t, 0))];
        Weight b = w[T.edge_of_side(Triangulation::side_id(t, 1))];
        Weight c = w[T.edge_of_side(Triangulation::side_id(t, 2))];
        if ((a + b + c) % 2 != 0)
            return fail("parity violation in triangle " + std::to_string(t));
        if (a > b + c || b > c + a || c > a + b)
            return fail("negative corner count in triangle " + std::to_string(t));
    }
    return true;
}

Multicurve validate_multicurve(const Triangulation& T, const std::vector<Weight>& w) {
    std::string why;
    if (!weights_admissible(T, w, &why)) throw CurveError(why);
    return Multicurve{&T, w};
}

namespace {

// point = (global side, index along the side from its corner k+1 end)
struct Pt {
    int side;
    Weight idx;
    bool operator==(const Pt&) const = default;
};

Weight side_weight(const Triangulation& T, const std::vector<Weight>& w, int s) {
    return w[T.edge_of_side(s)];
}

// chord partner inside the triangle owning p.side
Pt chord_other_end(const Triangulation& T, const std::vector<Weight>& w, Pt p) {
    int t = Triangulation::tri_of(p.side), k = Triangulation::loc_of(p.side);
    auto sw = [&](int loc) { return side_weight(T, w, Triangulation::side_id(t, loc)); };
    Weight wk = sw(k), wk1 = sw((k + 1) % 3), wk2 = sw((k + 2) % 3);
    Weight n_k1 = (wk2 + wk - wk1) / 2;  // corner arcs at corner k+1 (sides k+2 and k)
    // corner k+1 arcs: (side k, j) <-> (side k+2, w_{k+2}-1-j), j in [0, n_k1)
    if (p.idx < n_k1) return Pt{Triangulation::side_id(t, (k + 2) % 3), wk2 - 1 - p.idx};
    // corner k+2 arcs: (side k, w_k-1-j) <-> (side k+1, j), j in [0, n_k2)
    Weight j = wk - 1 - p.idx;
    return Pt{Triangulation::side_id(t, (k + 1) % 3), j};
}

Pt across_edge(const Triangulation& T, const std::vector<Weight>& w, Pt p) {
    int q = T.partner(p.side);
    return Pt{q, side_weight(T, w, p.side) - 1 - p.idx};
}

}  // namespace

Trace trace_multicurve(const Multicurve& m) {
    const Triangulation& T = *m.tri;
    std::string why;
    if (!weights_admissible(T, m.w, &why)) throw CurveError(why);

    std::vector<std::vector<char>> used(T.num_sides());
    for (int s = 0; s < T.num_sides(); ++s) used[s].assign(side_weight(T, m.w, s), 0);

    Trace tr;
    for (int s0 = 0; s0 < T.num_sides(); ++s0) {
        for (Weight i0 = 0; i0 < side_weight(T, m.w, s0); ++i0) {
            if (used[s0][i0]) continue;
            TraceComponent comp;
            Pt p{s0, i0};
            do {
                Pt q = chord_other_end(T, m.w, p);  // exits through q.side
                used[q.side][q.idx] = 1;
                Pt r = across_edge(T, m.w, q);  // same point, entering next triangle
                used[r.side][r.idx] = 1;
                comp.word.push_back(q.side);
                int e = T.edge_of_side(q.side);
                bool canon = (T.sides_of_edge(e)[0] == q.side);
                comp.pos.push_back(
                    static_cast<int>(canon ? q.idx : side_weight(T, m.w, q.side) - 1 - q.idx));
                p = r;
            } while (!(p == Pt{s0, i0}));
            tr.comps.push_back(std::move(comp));
        }
    }
    return tr;
}

std::vector<int> reversed_word(const Triangulation& T, const std::vector<int>& word) {
    std::vector<int> out(word.rbegin(), word.rend());
    for (int& s : out) s = T.partner(s);
    return out;
}

std::vector<int> canonical_rotation(const std::vector<int>& word) {
    if (word.empty()) return word;
    // Booth's algorithm is overkill at these lengths
    std::vector<int> best = word;
    std::vector<int> cur = word;
    for (size_t r = 1; r < word.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

std::vector<int> canonical_unoriented(const Triangulation& T, const std::vector<int>& word) {
    auto a = canonical_rotation(word);
    auto b = canonical_rotation(reversed_word(T, word));
    return std::min(a, b);
}

bool words_equal_cyclic(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    return canonical_rotation(a) == canonical_rotation(b);
}

std::vector<int> reduce_cyclic_word(const Triangulation& T, std::vector<int> word) {
    // linear pass with a stack, then fold the cyclic seam
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> st;
        for (int s : word) {
            if (!st.empty() && s == T.partner(st.back())) {
                st.pop_back();
                changed = true;
            } else {
                st.push_back(s);
            }
        }
        while (st.size() >= 2 && st.back() != st.front() &&
               st.front() == T.partner(st.back())) {
            st.erase(st.begin());
            st.pop_back();
            changed = true;
        }
        word = std::move(st);
    }
    return word;
}

std::vector<Weight> word_weights(const Triangulation& T, const std::vector<int>& word) {
    std::vector<Weight> w(T.num_edges(), 0);
    for (int s : word) w[T.edge_of_side(s)] += 1;
    return w;
}

Multicurve curve_from_word(const Triangulation& T, const std::vector<int>& word) {
    auto red = reduce_cyclic_word(T, word);
    if (red.empty()) throw CurveError("null-homotopic word");
    return validate_multicurve(T, word_weights(T, red));
}

std::vector<ComponentEntry> components(const Multicurve& m) {
    Trace tr = trace_multicurve(m);
    const Triangulation& T = *m.tri;
    std::map<std::vector<int>, int> mult;
    for (const auto& c : tr.comps) mult[canonical_unoriented(T, c.word)] += 1;
    std::vector<ComponentEntry> out;
    for (const auto& [word, k] : mult)
        out.push_back({Multicurve{&T, word_weights(T, word)}, k});
    std::sort(out.begin(), out.end(),
              [](const ComponentEntry& a, const ComponentEntry& b) { return a.curve < b.curve; });
    return out;
}

bool is_single_curve(const Multicurve& m) {
    std::string why;
    if (!m.tri || !weights_admissible(*m.tri, m.w, &why)) return false;
    auto cs = components(m);
    return cs.size() == 1 && cs[0].multiplicity == 1;
}

Multicurve multicurve_union(const std::vector<Multicurve>& parts) {
    if (parts.empty()) throw CurveError("empty union");
    Multicurve out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].tri != out.tri) throw CurveError("union across triangulations");
        for (size_t e = 0; e < out.w.size(); ++e) out.w[e] += parts[i].w[e];
    }
    return out;
}

std::string weights_to_string(const std::vector<Weight>& w) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ']';
    return os.str();
}

}  // namespace hexlab
