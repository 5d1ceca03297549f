#include "hexlab/cut.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hexlab/intersection.hpp"

namespace hexlab {

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

struct FaceData {
    std::vector<std::pair<int, int>> segments;      // (global side, segment idx in side-local coords)
    std::vector<std::tuple<int, int, int>> chords;  // (comp, j, side 0=left 1=right)
    std::vector<int> corners;                       // global corner ids
};

}  // namespace

CutReport cut_invariants(const Multicurve& m) {
    const Triangulation& T = *m.tri;
    auto comp_entries = components(m);
    for (const auto& ce : comp_entries)
        if (ce.multiplicity > 1) throw CurveError("cut along repeated component");

    Trace tr = trace_multicurve(m);
    const int ncomp = static_cast<int>(tr.comps.size());
    // map traced components to the sorted component list
    std::vector<int> comp_index(ncomp, -1);
    for (int c = 0; c < ncomp; ++c) {
        auto ww = word_weights(T, tr.comps[c].word);
        for (int k = 0; k < static_cast<int>(comp_entries.size()); ++k)
            if (comp_entries[k].curve.w == ww) comp_index[c] = k;
        if (comp_index[c] < 0) throw std::logic_error("cut: component match failed");
    }

    // per-triangle boundary element parse
    // elements: corner / segment / slot; chords = non-crossing slot pairs
    struct Slot {
        int comp, j, end;  // end: 0 = entry of chord j, 1 = exit of chord j
    };
    // collect points per side in local ascending order
    std::vector<std::vector<std::pair<int, Slot>>> pts(T.num_sides());  // (local idx, slot)
    auto side_len = [&](int s) { return m.w[T.edge_of_side(s)]; };
    for (int c = 0; c < ncomp; ++c) {
        const auto& cm = tr.comps[c];
        int L = cm.length();
        for (int j = 0; j < L; ++j) {
            int exit_side = cm.word[j];
            int e = T.edge_of_side(exit_side);
            Weight w = m.w[e];
            long long local_exit =
                (T.sides_of_edge(e)[0] == exit_side) ? cm.pos[j] : w - 1 - cm.pos[j];
            pts[exit_side].push_back({static_cast<int>(local_exit), Slot{c, j, 1}});
            int entry_side = T.partner(exit_side);
            long long local_entry =
                (T.sides_of_edge(e)[0] == entry_side) ? cm.pos[j] : w - 1 - cm.pos[j];
            int jn = (j + 1) % L;
            pts[entry_side].push_back({static_cast<int>(local_entry), Slot{c, jn, 0}});
        }
    }
    for (auto& v : pts) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.first < b.first;
    });

    std::vector<FaceData> faces;
    // face id of each (global side, segment idx)
    std::map<std::pair<int, int>, int> seg_face;

    for (int t = 0; t < T.num_triangles(); ++t) {
        // element list around the triangle: corner (k+1), side k slots with
        // segments interleaved, for k = 0,1,2
        struct Elem {
            int type;  // 0 corner, 1 segment, 2 slot
            int a, b;  // corner: global corner; segment: (side, idx); slot: index into pts[side]
            int side;
        };
        std::vector<Elem> elems;
        for (int k = 0; k < 3; ++k) {
            int s = Triangulation::side_id(t, k);
            elems.push_back({0, 3 * t + (k + 1) % 3, 0, -1});
            int n = static_cast<int>(pts[s].size());
            for (int i = 0; i <= n; ++i) {
                elems.push_back({1, s, i, s});
                if (i < n) elems.push_back({2, i, 0, s});
            }
        }
        // match chord endpoints: slot -> position in elems
        std::map<std::pair<int, std::pair<int, int>>, int> pos_of;  // ((comp,(j,end)) -> elem pos)
        for (int p = 0; p < static_cast<int>(elems.size()); ++p) {
            if (elems[p].type != 2) continue;
            const Slot& sl = pts[elems[p].side][elems[p].a].second;
            pos_of[{sl.comp, {sl.j, sl.end}}] = p;
        }
        // chords in this triangle: exit of chord j pairs with entry of chord j
        struct ChordPos {
            int p_entry, p_exit, comp, j;
        };
        std::vector<ChordPos> chords;
        for (const auto& [key, p] : pos_of) {
            if (key.second.second != 1) continue;  // iterate exits
            int c = key.first, j = key.second.first;
            auto it = pos_of.find({c, {j, 0}});
            if (it == pos_of.end()) throw std::logic_error("cut: chord entry missing");
            chords.push_back({it->second, p, c, j});
        }
        // open/close structure keyed by element position
        std::map<int, std::pair<int, bool>> chord_at;  // pos -> (chord idx, is_opening)
        for (int ci = 0; ci < static_cast<int>(chords.size()); ++ci) {
            int p1 = std::min(chords[ci].p_entry, chords[ci].p_exit);
            int p2 = std::max(chords[ci].p_entry, chords[ci].p_exit);
            chord_at[p1] = {ci, true};
            chord_at[p2] = {ci, false};
        }
        std::vector<int> face_stack;
        faces.push_back({});
        face_stack.push_back(static_cast<int>(faces.size()) - 1);
        std::vector<int> inner_face_of(chords.size(), -1);
        for (int p = 0; p < static_cast<int>(elems.size()); ++p) {
            const Elem& el = elems[p];
            int cur = face_stack.back();
            if (el.type == 0) {
                faces[cur].corners.push_back(el.a);
            } else if (el.type == 1) {
                faces[cur].segments.push_back({el.a, el.b});
                seg_face[{el.a, el.b}] = cur;
            } else {
                auto [ci, opening] = chord_at.at(p);
                const ChordPos& ch = chords[ci];
                // inner face = ccw arc between the chord ends = right of the
                // walk from min-pos to max-pos
                bool min_is_entry = (std::min(ch.p_entry, ch.p_exit) == ch.p_entry);
                int inner_side = min_is_entry ? 1 : 0;  // 1 = right of strand
                if (opening) {
                    faces[cur].chords.push_back({ch.comp, ch.j, 1 - inner_side});
                    faces.push_back({});
                    int nf = static_cast<int>(faces.size()) - 1;
                    faces[nf].chords.push_back({ch.comp, ch.j, inner_side});
                    inner_face_of[ci] = nf;
                    face_stack.push_back(nf);
                } else {
                    if (face_stack.back() != inner_face_of[ci])
                        throw std::logic_error("cut: chord nesting broken");
                    face_stack.pop_back();
                }
            }
        }
        if (face_stack.size() != 1) throw std::logic_error("cut: unbalanced chords");
    }

    // glue faces across edge segments
    DSU dsu(static_cast<int>(faces.size()));
    for (int e = 0; e < T.num_edges(); ++e) {
        int s0 = T.sides_of_edge(e)[0], s1 = T.sides_of_edge(e)[1];
        Weight w = m.w[e];
        for (Weight i = 0; i <= w; ++i) {
            int f0 = seg_face.at({s0, static_cast<int>(i)});
            int f1 = seg_face.at({s1, static_cast<int>(w - i)});
            dsu.unite(f0, f1);
        }
    }

    // piece assembly
    std::map<int, int> piece_of_root;
    auto piece_id = [&](int face) {
        int r = dsu.find(face);
        auto it = piece_of_root.find(r);
        if (it != piece_of_root.end()) return it->second;
        int id = static_cast<int>(piece_of_root.size());
        piece_of_root[r] = id;
        return id;
    };
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) piece_id(f);
    int npieces = static_cast<int>(piece_of_root.size());

    std::vector<int> Fcnt(npieces, 0), Eint(npieces, 0);
    std::vector<std::vector<int>> punct(npieces);
    std::vector<std::vector<CutBoundary>> circles(npieces);

    for (int f = 0; f < static_cast<int>(faces.size()); ++f) Fcnt[piece_id(f)] += 1;
    for (int e = 0; e < T.num_edges(); ++e) {
        int s0 = T.sides_of_edge(e)[0];
        Weight w = m.w[e];
        for (Weight i = 0; i <= w; ++i) Eint[piece_id(seg_face.at({s0, static_cast<int>(i)}))] += 1;
    }
    // punctures: all sectors of one puncture must land in one piece
    for (int v = 0; v < T.num_punctures(); ++v) {
        int pc = -1;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            for (int corner : faces[f].corners)
                if (T.puncture_of_corner(corner) == v) {
                    int pid = piece_id(f);
                    if (pc == -1) pc = pid;
                    if (pc != pid) throw std::logic_error("cut: puncture split across pieces");
                }
        punct[pc].push_back(v);
    }
    // boundary circles: left and right circle of each component
    for (int c = 0; c < ncomp; ++c) {
        int left_piece = -1, right_piece = -1;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            for (const auto& [cc, j, side] : faces[f].chords) {
                if (cc != c) continue;
                (side == 0 ? left_piece : right_piece) = piece_id(f);
            }
        if (left_piece < 0 || right_piece < 0) throw std::logic_error("cut: lost a circle");
        circles[left_piece].push_back({comp_index[c], 0});
        circles[right_piece].push_back({comp_index[c], 1});
    }

    CutReport rep;
    for (const auto& ce : comp_entries) rep.cut_components.push_back(ce.curve);
    for (int p = 0; p < npieces; ++p) {
        CutPiece piece;
        piece.euler_filled = static_cast<int>(punct[p].size()) - Eint[p] + Fcnt[p];
        piece.boundary = circles[p];
        piece.punctures = punct[p];
        std::sort(piece.punctures.begin(), piece.punctures.end());
        std::sort(piece.boundary.begin(), piece.boundary.end(),
                  [](const CutBoundary& a, const CutBoundary& b) {
                      return std::pair{a.component, a.side} < std::pair{b.component, b.side};
                  });
        int B = piece.num_boundary();
        int g2 = 2 - B - piece.euler_filled;
        if (g2 < 0 || g2 % 2 != 0) throw std::logic_error("cut: bad piece Euler characteristic");
        piece.genus = g2 / 2;
        rep.pieces.push_back(std::move(piece));
    }
    std::sort(rep.pieces.begin(), rep.pieces.end(), [](const CutPiece& a, const CutPiece& b) {
        return std::tuple{a.genus, a.num_boundary(), a.punctures} <
               std::tuple{b.genus, b.num_boundary(), b.punctures};
    });

    // chi additivity guard
    int chi_sum = 0;
    for (const auto& p : rep.pieces)
        chi_sum += p.euler_filled - static_cast<int>(p.punctures.size());
    int chi_cut = T.kind().euler_characteristic();
    if (chi_sum != chi_cut) throw std::logic_error("cut: Euler characteristic not additive");
    return rep;
}

bool is_separating(const Multicurve& a) {
    if (!is_single_curve(a)) throw CurveError("is_separating needs a single curve");
    return cut_invariants(a).pieces.size() == 2;
}

bool is_essential(const Multicurve& a) {
    if (!is_single_curve(a)) return false;
    for (const auto& p : cut_invariants(a).pieces)
        if (p.genus == 0 && p.num_boundary() == 1 && p.punctures.size() <= 1) return false;
    return true;
}

SeparatingKind classify_separating(const Multicurve& a) {
    auto rep = cut_invariants(a);
    if (rep.pieces.size() != 2) return SeparatingKind::NotSeparating;
    for (const auto& p : rep.pieces) {
        if (p.genus == 1 && p.num_boundary() == 1 && p.punctures.empty())
            return SeparatingKind::HCurve;
        if (p.genus == 0 && p.num_boundary() == 1 && p.punctures.size() == 2)
            return SeparatingKind::PCurve;
    }
    return SeparatingKind::Other;
}

bool is_bounding_pair(const Multicurve& a, const Multicurve& b) {
    if (!is_single_curve(a) || !is_single_curve(b)) return false;
    if (a.w == b.w) return false;
    if (geometric_intersection(a, b) != 0) return false;
    if (is_separating(a) || is_separating(b)) return false;
    return cut_invariants(multicurve_union({a, b})).pieces.size() == 2;
}

bool capped_isotopic(const Multicurve& a, const Multicurve& b) {
    if (!is_single_curve(a) || !is_single_curve(b))
        throw CurveError("capped_isotopic needs single curves");
    if (a.w == b.w) return true;
    if (geometric_intersection(a, b) != 0)
        throw CurveError("capped_isotopic called on intersecting curves");
    int base = a.tri->basepoint_puncture();
    auto rep = cut_invariants(multicurve_union({a, b}));
    // components are sorted; identify which index is a and which is b
    int ia = -1, ib = -1;
    for (int i = 0; i < static_cast<int>(rep.cut_components.size()); ++i) {
        if (rep.cut_components[i].w == a.w) ia = i;
        if (rep.cut_components[i].w == b.w) ib = i;
    }
    for (const auto& p : rep.pieces) {
        if (p.num_boundary() != 2) continue;
        if (p.boundary[0].component == p.boundary[1].component) continue;
        if (!((p.boundary[0].component == ia && p.boundary[1].component == ib) ||
              (p.boundary[0].component == ib && p.boundary[1].component == ia)))
            continue;
        if (p.genus != 0) continue;
        if (p.punctures.empty()) return true;  // annulus
        if (p.punctures.size() == 1 && p.punctures[0] == base) return true;
    }
    return false;
}

}  // namespace hexlab
