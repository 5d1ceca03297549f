#pragma once

#include <optional>

#include "hexlab/curve.hpp"

namespace hexlab {

// isotopy class of an essential ideal arc.  A reduced nonempty crossing word
// determines the class (the end sectors are forced opposite the first/last
// crossed sides); arcs isotopic to a triangulation edge carry no crossings
// and are stored by edge id.
struct NormalArc {
    const Triangulation* tri = nullptr;
    std::vector<int> word;   // reduced exit-side path, empty for edge-parallel
    int parallel_edge = -1;  // set iff word is empty

    bool is_edge_parallel() const { return word.empty(); }
    // corner ids the arc leaves from / arrives at
    int start_corner() const;
    int end_corner() const;
    std::array<int, 2> endpoints() const;  // punctures, in (start, end) order
    std::vector<Weight> weights() const;
    std::vector<int> end_counts() const;  // per corner id
    std::vector<int> canonical() const;   // orientation-free key

    bool operator==(const NormalArc& o) const { return canonical() == o.canonical(); }
    bool operator<(const NormalArc& o) const { return canonical() < o.canonical(); }
};

NormalArc arc_from_word(const Triangulation& T, std::vector<int> word);
NormalArc arc_parallel_to_edge(const Triangulation& T, int edge);

// all essential arc classes with at most max_crossings crossings
std::vector<NormalArc> enumerate_arcs(const Triangulation& T, int max_crossings);

// exact disjointness tests (minimal position realizes zero crossings)
bool arcs_disjoint(const NormalArc& a, const NormalArc& b);
bool arc_curve_disjoint(const NormalArc& a, const Multicurve& c);

// non-separating arc with both endpoints at the basepoint puncture -> the
// bounding pair spanned by the boundary of a neighborhood of arc + puncture;
// throws CurveError if the arc is separating or misplaced
std::pair<Multicurve, Multicurve> bp_from_arc(const NormalArc& l);

// arc connecting two distinct punctures -> boundary p-curve of a neighborhood
// of arc + both punctures; throws CurveError on equal endpoints
Multicurve pcurve_from_arc(const NormalArc& l);

// inverse search: the arc inside the pair of pants cut off by a p-curve
std::optional<NormalArc> arc_in_pants(const Multicurve& pcurve,
                                      const std::vector<NormalArc>& pool);

// complement faces of a pairwise-disjoint arc system: returns the number of
// arc-sides of each face boundary walk (an ideal squaring reads {4, 4})
std::vector<int> complement_face_sides(const std::vector<NormalArc>& system);

// arc complex views
struct ArcView {
    const Triangulation* tri = nullptr;
    bool dual_only = false;  // vertices restricted to arcs joining the two marked punctures
    std::vector<NormalArc> arcs;
    std::vector<std::vector<char>> adj;
    std::string provenance;

    int size() const { return static_cast<int>(arcs.size()); }
};
// kind_dual: vertices = arcs connecting basepoint to the other designated
// puncture (the two "boundary" punctures of the model)
ArcView build_arc_view(const Triangulation& T, int max_crossings, bool kind_dual);

// maximal simplices (maximal cliques of the disjointness graph)
std::vector<std::vector<int>> maximal_simplices(const ArcView& view);

// ideal arcs at the basepoint puncture disjoint from every arc of the system
std::vector<NormalArc> link_arcs_at_basepoint(const ArcView& view,
                                              const std::vector<int>& simplex);

std::string export_arc_json(const ArcView& view);

}  // namespace hexlab
