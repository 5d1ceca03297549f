#pragma once

#include <string>
#include <vector>

#include "hexlab/triangulation.hpp"

namespace hexlab {

struct CurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// isotopy class of a multicurve as per-edge crossing counts; weight vector
// equality is the complete isotopy test
struct Multicurve {
    const Triangulation* tri = nullptr;
    std::vector<Weight> w;

    bool operator==(const Multicurve& o) const { return w == o.w; }
    bool operator<(const Multicurve& o) const { return w < o.w; }
    Weight total_weight() const;
};

// one traced component: cyclic word of directed crossings.  word[j] is the
// global side the strand exits through at step j; pos[j] is the crossing slot
// on the canonical side (edge_sides(e)[0]) of that edge, so slots order all
// strands of the trace along each edge consistently.
struct TraceComponent {
    std::vector<int> word;
    std::vector<int> pos;
    int length() const { return static_cast<int>(word.size()); }
};

struct Trace {
    std::vector<TraceComponent> comps;
};

// parity + triangle-inequality check; throws CurveError with the reason
Multicurve validate_multicurve(const Triangulation& T, const std::vector<Weight>& w);
bool weights_admissible(const Triangulation& T, const std::vector<Weight>& w,
                        std::string* why = nullptr);

// splits a valid multicurve into connected strands; components with equal
// unoriented canonical words are parallel copies
Trace trace_multicurve(const Multicurve& m);

// component list with multiplicities; each entry is a single curve
struct ComponentEntry {
    Multicurve curve;
    int multiplicity;
};
std::vector<ComponentEntry> components(const Multicurve& m);
bool is_single_curve(const Multicurve& m);

// cyclic word utilities (words are exit-side sequences)
std::vector<int> reduce_cyclic_word(const Triangulation& T, std::vector<int> word);
std::vector<int> reversed_word(const Triangulation& T, const std::vector<int>& word);
std::vector<int> canonical_rotation(const std::vector<int>& word);
std::vector<int> canonical_unoriented(const Triangulation& T, const std::vector<int>& word);
bool words_equal_cyclic(const std::vector<int>& a, const std::vector<int>& b);

// weights of the isotopy class represented by a (not necessarily reduced)
// closed word; empty after reduction -> throws (null-homotopic)
Multicurve curve_from_word(const Triangulation& T, const std::vector<int>& word);
std::vector<Weight> word_weights(const Triangulation& T, const std::vector<int>& word);

// weight vector of the union (disjointness is the caller's claim, used for
// cutting along several curves at once)
Multicurve multicurve_union(const std::vector<Multicurve>& parts);

std::string weights_to_string(const std::vector<Weight>& w);

}  // namespace hexlab
