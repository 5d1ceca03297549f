#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexlab {

using Weight = long long;

struct TriangulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// genus / puncture data of a model surface; punctures flagged in
// boundary_punctures stand for boundary components of the compact surface
struct SurfaceKind {
    int genus = 0;
    int punctures = 0;
    std::vector<int> boundary_punctures;

    int euler_characteristic() const { return 2 - 2 * genus - punctures; }
    bool operator==(const SurfaceKind&) const = default;
};

// Combinatorial ideal triangulation.
//
// Conventions (fixed once, everything downstream depends on them):
//  - triangle t has corners 0,1,2 in ccw order; local side k is opposite
//    corner k and is traversed from corner k+1 to corner k+2 along the ccw
//    boundary;
//  - internal side id = 3*t + k (spec files may use arbitrary ids, remapped
//    at load);
//  - glued sides are traversed in opposite directions, so point i (counted
//    from the corner k+1 end) matches point w-1-i on the partner side;
//  - edge ids follow the order of the `gluing` list and are stable under
//    flips.
class Triangulation {
public:
    Triangulation() = default;

    // triangles[t] = 3 file side ids in ccw order; gluing = file side id pairs
    static Triangulation build(const std::vector<std::array<int, 3>>& triangles,
                               const std::vector<std::array<int, 2>>& gluing,
                               const std::vector<int>& boundary_punctures,
                               std::string name);

    static Triangulation from_json_text(const std::string& text);
    static Triangulation load_file(const std::string& path);
    std::string to_json_text() const;

    const std::string& name() const { return name_; }
    const SurfaceKind& kind() const { return kind_; }
    int num_triangles() const { return num_triangles_; }
    int num_sides() const { return 3 * num_triangles_; }
    int num_edges() const { return static_cast<int>(edge_sides_.size()); }
    int num_punctures() const { return kind_.punctures; }

    int partner(int side) const { return partner_[side]; }
    int edge_of_side(int side) const { return edge_of_side_[side]; }
    const std::array<int, 2>& sides_of_edge(int edge) const { return edge_sides_[edge]; }
    static int tri_of(int side) { return side / 3; }
    static int loc_of(int side) { return side % 3; }
    static int side_id(int tri, int loc) { return 3 * tri + loc; }

    // corner id = 3*t + c
    int puncture_of_corner(int corner) const { return vertex_of_corner_[corner]; }
    // corners around a puncture, one full rotational cycle
    const std::vector<int>& corners_at(int puncture) const { return vertex_corners_[puncture]; }
    int next_corner_about_puncture(int corner) const { return corner_rot_next_[corner]; }

    bool edge_is_flippable(int edge) const;

    // flips `edge`; triangle ids are reused, edge ids are stable
    Triangulation flipped(int edge) const;
    // PL transport rule for multicurve weights across flipped(edge)
    std::vector<Weight> transport_across_flip(int edge, const std::vector<Weight>& w) const;

    // designated boundary puncture (first entry of boundary_punctures, or 0)
    int basepoint_puncture() const;

    // label automorphisms as side permutations p with p(3t+k)=3t'+k' cyclic
    // order preserving and commuting with the gluing
    std::vector<std::vector<int>> automorphisms() const;
    std::vector<int> edge_permutation(const std::vector<int>& side_perm) const;

    bool operator==(const Triangulation& o) const { return partner_ == o.partner_; }

    // canonical key for (triangulation, weights) states during searches
    std::string state_key(const std::vector<Weight>& w) const;

private:
    void finalize();  // computes edges, vertices, kind; validates

    std::string name_;
    int num_triangles_ = 0;
    std::vector<int> partner_;  // internal side id -> glued side id
    std::vector<int> edge_of_side_;
    std::vector<std::array<int, 2>> edge_sides_;
    std::vector<int> vertex_of_corner_;
    std::vector<std::vector<int>> vertex_corners_;
    std::vector<int> corner_rot_next_;
    SurfaceKind kind_;
};

// repo data directory resolution: HEXLAB_DATA env var, else ./data, else the
// compile-time source path
std::string data_dir();
Triangulation load_surface(const std::string& name);

}  // namespace hexlab
