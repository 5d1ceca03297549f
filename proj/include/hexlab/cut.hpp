#pragma once

#include "hexlab/curve.hpp"

namespace hexlab {

// cutting S along a multicurve: per piece topology plus provenance of every
// boundary circle (which component it is a side of)
struct CutBoundary {
    int component;  // index into the component list of the cut system
    int side;       // 0 = left of the traced orientation, 1 = right
};

struct CutPiece {
    int genus = 0;
    std::vector<CutBoundary> boundary;
    std::vector<int> punctures;
    int euler_filled = 0;  // punctures counted as interior points

    int num_boundary() const { return static_cast<int>(boundary.size()); }
};

struct CutReport {
    std::vector<CutPiece> pieces;
    std::vector<Multicurve> cut_components;  // indexing for CutBoundary::component
};

// m must have no repeated component (multiplicity 1 everywhere)
CutReport cut_invariants(const Multicurve& m);

// classification built on cutting
bool is_separating(const Multicurve& single_curve);
bool is_essential(const Multicurve& single_curve);

enum class SeparatingKind { HCurve, PCurve, Other, NotSeparating };
SeparatingKind classify_separating(const Multicurve& single_curve);

bool is_bounding_pair(const Multicurve& a, const Multicurve& b);

// pi-equivalence of two disjoint curves under capping the basepoint puncture:
// true iff a = b, or one complementary piece bounded by exactly one copy of a
// and one copy of b is an annulus or a pair of pants whose third end is the
// basepoint puncture.  Calling it on intersecting curves is a contract
// violation and throws.
bool capped_isotopic(const Multicurve& a, const Multicurve& b);

}  // namespace hexlab
