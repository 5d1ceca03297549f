#pragma once

#include "hexlab/curve.hpp"

namespace hexlab {

// left Dehn twist t_a^k(b).  Computed on a tight overlay of a and b: every
// geometric crossing reroutes b around a's cycle, k loops in the direction
// given by the crossing sign, then the word renormalizes by spur reduction.
// "Left" is pinned by [t_a(b)] = [b] + <a,b>[a] for the traced orientations
// and the surface orientation of the triangulation files.
Multicurve dehn_twist(const Multicurve& a, const Multicurve& b, long long k);

// composition of twists applied right-to-left: word = {(curve, power), ...}
struct TwistStep {
    Multicurve curve;
    long long power;
};
Multicurve apply_twist_word(const std::vector<TwistStep>& word, const Multicurve& b);

}  // namespace hexlab
