#pragma once

#include "hexlab/curve.hpp"

namespace hexlab {

// Explicit two-curve diagram on the triangulation: both curves keep their own
// taut position, the per-edge interleaving of the two point sets is state.
// Tightening removes an empty bigon per round (two crossings each time) until
// the diagram realizes the geometric intersection number.
//
// This is the independent oracle for geometric_intersection and the substrate
// for the Dehn twist surgery.
class Overlay {
public:
    // curve index 0 = A, 1 = B
    Overlay(const Triangulation& T, const Multicurve& a, const Multicurve& b);

    // removes bigons until minimal; returns the final crossing count
    long long tighten();
    long long count_crossings() const;

    struct Crossing {
        int comp_a, chord_a;  // chord index = word position of the chord's exit
        int comp_b, chord_b;
        int sign;  // sign of the frame (A-tangent, B-tangent), traced orientations
    };
    // crossings in order along component `comp_b` of B (chord order, then
    // order along each chord); diagram must be tight
    std::vector<Crossing> crossings_along_b(int comp_b) const;

    const Trace& trace_a() const { return ta_; }
    const Trace& trace_b() const { return tb_; }

private:
    struct Tok {
        int which;  // 0 = A, 1 = B
        int comp;
        int j;  // word index: token is the crossing where the strand exits word[j]
    };
    friend bool operator==(const Tok& x, const Tok& y) {
        return x.which == y.which && x.comp == y.comp && x.j == y.j;
    }

    const Triangulation& T_;
    Trace ta_, tb_;
    std::vector<std::vector<Tok>> edge_seq_;  // per edge, canonical-side order

    const TraceComponent& comp(int which, int c) const {
        return which == 0 ? ta_.comps[c] : tb_.comps[c];
    }
    int find_slot(int edge, const Tok& t) const;
    // boundary position of a chord endpoint inside its triangle: (local side, slot)
    std::pair<int, long long> boundary_pos(int tri, int side, const Tok& t) const;

    struct ChordRef {
        int which, comp, j;
    };  // chord j of a component: entry token (j-1), exit token j
    struct Cross {
        ChordRef a, b;
        int tri;
        int sign;
    };
    std::vector<Cross> all_crossings() const;
    // crossings on one chord ordered from its entry end
    std::vector<int> crossings_on_chord(const std::vector<Cross>& xs, const ChordRef& c) const;

    bool remove_one_bigon();
};

// oracle entry point: exact geometric intersection by overlay tightening
long long oracle_intersection(const Multicurve& a, const Multicurve& b);

}  // namespace hexlab
