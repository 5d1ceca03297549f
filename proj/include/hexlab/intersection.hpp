#pragma once

#include "hexlab/curve.hpp"

namespace hexlab {

// exact geometric intersection number of two multicurves on one
// triangulation.  Counting rule: every crossing of two taut curves lies in a
// unique maximal fellow-traveling segment of the two strands (they share at
// least one full edge because the dual graph is trivalent); the segment
// contributes a crossing iff the strands separate to opposite sides at its
// two ends, read from the ccw order of the triangle sides.
Weight geometric_intersection(const Multicurve& a, const Multicurve& b);

// same count for pre-traced curves (hot path for enumeration)
Weight geometric_intersection(const Triangulation& T, const Trace& a, const Trace& b,
                              const std::vector<Weight>& wa, const std::vector<Weight>& wb);

// signed count for oriented single curves, antisymmetric; orientations are
// the traced ones of the given words
long long algebraic_intersection(const Triangulation& T, const std::vector<int>& word_a,
                                 const std::vector<int>& word_b);
long long algebraic_intersection(const Multicurve& a, const Multicurve& b);

// crossing classes between two oriented component words; used by the twist
// surgery and by algebraic_intersection
struct CrossingClass {
    int a_start;  // backward-maximal match start in a
    int b_start;  // matching position in b (after orientation flip when eps<0)
    int len;      // matched letters
    int eps;      // +1 aligned, -1 anti-aligned
    int sign;     // crossing sign for the traced orientations
};
// empty result with equal=true means the words are the same unoriented curve
struct CrossingClasses {
    std::vector<CrossingClass> classes;
    bool equal = false;
};
CrossingClasses crossing_classes(const Triangulation& T, const std::vector<int>& a,
                                 const std::vector<int>& b);

}  // namespace hexlab
