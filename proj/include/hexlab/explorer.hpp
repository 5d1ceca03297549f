#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hexlab/curve.hpp"
#include "hexlab/cut.hpp"
#include "hexlab/homology.hpp"
#include "hexlab/twist.hpp"

namespace hexlab {

// vertex of the Torelli complex: a separating curve or a bounding pair
struct TorelliVertex {
    enum class Tag { H, BP };
    Tag tag;
    Multicurve first;                  // H: the curve; BP: lexicographically smaller curve
    std::optional<Multicurve> second;  // BP only
    Multicurve merged;                 // union weights (i is additive over components)

    bool operator==(const TorelliVertex& o) const {
        return tag == o.tag && merged.w == o.merged.w;
    }
    bool operator<(const TorelliVertex& o) const {
        if (tag != o.tag) return tag < o.tag;
        return merged.w < o.merged.w;
    }
};

TorelliVertex make_h_vertex(const Multicurve& a);
TorelliVertex make_bp_vertex(const Multicurve& a, const Multicurve& b);

// enumerated single curve with cached classification
struct EnumCurve {
    Multicurve curve;
    bool essential = false;
    bool separating = false;
    SeparatingKind kind = SeparatingKind::NotSeparating;
    std::vector<long long> hom;      // class of the traced orientation
    std::vector<long long> hom_abs;  // min(hom, -hom) lexicographically, BP prefilter
};

// all isotopy classes of essential single curves with total weight <= W,
// deterministic order (weight, then lex)
std::vector<EnumCurve> enumerate_single_curves(const Triangulation& T, Weight W);

// all admissible weight vectors with total weight <= W (multicurves)
std::vector<std::vector<Weight>> enumerate_weight_vectors(const Triangulation& T, Weight W);

struct ComplexKind {
    enum Value { Torelli, Curves, SepCurves, ArcsAll, ArcsDual, GraphE, GraphF } value;
    std::string name() const;
};

struct ComplexView {
    ComplexKind kind;
    const Triangulation* tri = nullptr;
    std::vector<TorelliVertex> vertices;
    std::vector<std::vector<char>> adj;
    std::string provenance;  // bound / generator metadata

    int size() const { return static_cast<int>(vertices.size()); }
    bool adjacent(int u, int v) const { return adj[u][v] != 0; }
};

// vertex universe with weight bound: separating curves become H vertices, BP
// pairs are assembled from non-separating curves
std::vector<TorelliVertex> enumerate_vertices(const Triangulation& T, Weight W, int workers = 0);

// orbit of seeds under twist words of length <= radius over the generators
std::vector<TorelliVertex> orbit_ball(const Triangulation& T,
                                      const std::vector<TorelliVertex>& seeds,
                                      const std::vector<Multicurve>& generators, int radius,
                                      int workers = 0);

bool vertices_adjacent(const TorelliVertex& u, const TorelliVertex& v);
std::vector<int> link_of(const ComplexView& view, int v);

ComplexView build_torelli_view(const Triangulation& T, std::vector<TorelliVertex> verts,
                               std::string provenance, int workers = 0);
ComplexView build_sep_curve_view(const Triangulation& T, std::vector<TorelliVertex> verts,
                                 std::string provenance, int workers = 0);

// pi-fiber decomposition of a separating-curve universe (Theorem on tree
// fibers): fibers = transitive closure of capped_isotopic over disjoint pairs
struct FiberReport {
    std::vector<std::vector<int>> fibers;       // vertex indices per fiber
    std::vector<int> fiber_of;                  // vertex -> fiber
    bool all_acyclic = true;
    std::vector<std::vector<int>> cycle_found;  // counterexample cycles if any
    int nontrivial_fibers = 0;                  // fibers with >= 2 vertices
};
FiberReport fiber_forest_check(const ComplexView& sep_view);

// exports; byte-stable for identical inputs
std::string export_dot(const ComplexView& view);
std::string export_json(const ComplexView& view);
ComplexView import_json(const Triangulation& T, const std::string& text);

// applies a twist word to a vertex
TorelliVertex map_vertex(const std::vector<TwistStep>& word, const TorelliVertex& v);

}  // namespace hexlab
