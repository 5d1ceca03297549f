#include "hexlab/triangulation.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace hexlab {

using nlohmann::json;

Triangulation Triangulation::build(const std::vector<std::array<int, 3>>& triangles,
                                   const std::vector<std::array<int, 2>>& gluing,
                                   const std::vector<int>& boundary_punctures,
                                   std::string name) {
    Triangulation T;
    T.name_ = std::move(name);
    T.num_triangles_ = static_cast<int>(triangles.size());
    const int ns = 3 * T.num_triangles_;

    // remap file side ids to internal 3t+k
    std::map<int, int> to_internal;
    for (int t = 0; t < T.num_triangles_; ++t)
        for (int k = 0; k < 3; ++k) {
            int fid = triangles[t][k];
            if (to_internal.count(fid))
                throw TriangulationError("duplicate side id " + std::to_string(fid));
            to_internal[fid] = side_id(t, k);
        }
    if (static_cast<int>(to_internal.size()) != ns)
        throw TriangulationError("side id set inconsistent");

    T.partner_.assign(ns, -1);
    T.edge_of_side_.assign(ns, -1);
    for (const auto& pr : gluing) {
        auto ia = to_internal.find(pr[0]);
        auto ib = to_internal.find(pr[1]);
        if (ia == to_internal.end() || ib == to_internal.end())
            throw TriangulationError("gluing references unknown side id");
        int a = ia->second, b = ib->second;
        if (a == b)
            throw TriangulationError("side glued to itself (non-orientable gluing)");
        if (T.partner_[a] != -1 || T.partner_[b] != -1)
            throw TriangulationError("side glued twice");
        T.partner_[a] = b;
        T.partner_[b] = a;
        int e = static_cast<int>(T.edge_sides_.size());
        T.edge_sides_.push_back({a, b});
        T.edge_of_side_[a] = e;
        T.edge_of_side_[b] = e;
    }
    for (int s = 0; s < ns; ++s)
        if (T.partner_[s] == -1) throw TriangulationError("unpaired side " + std::to_string(s));

    T.kind_.boundary_punctures = boundary_punctures;
    T.finalize();
    return T;
}

void Triangulation::finalize() {
    const int ns = num_sides();
    const int nt = num_triangles_;

    // connectivity over triangles
    {
        std::vector<char> seen(nt, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int k = 0; k < 3; ++k) {
                int u = tri_of(partner_[side_id(t, k)]);
                if (!seen[u]) {
                    seen[u] = 1;
                    ++cnt;
                    stack.push_back(u);
                }
            }
        }
        if (cnt != nt) throw TriangulationError("disconnected complex");
    }

    // vertex orbits: rotate (t,c) -> across flanking side c+1 -> (t',k'+1)
    corner_rot_next_.assign(ns, -1);
    for (int t = 0; t < nt; ++t)
        for (int c = 0; c < 3; ++c) {
            int s = side_id(t, (c + 1) % 3);
            int p = partner_[s];
            corner_rot_next_[3 * t + c] = 3 * tri_of(p) + (loc_of(p) + 1) % 3;
        }
    vertex_of_corner_.assign(ns, -1);
    vertex_corners_.clear();
    for (int c0 = 0; c0 < ns; ++c0) {
        if (vertex_of_corner_[c0] != -1) continue;
        int v = static_cast<int>(vertex_corners_.size());
        std::vector<int> cyc;
        int c = c0;
        do {
            vertex_of_corner_[c] = v;
            cyc.push_back(c);
            c = corner_rot_next_[c];
        } while (c != c0);
        vertex_corners_.push_back(std::move(cyc));
    }

    kind_.punctures = static_cast<int>(vertex_corners_.size());
    const int V = kind_.punctures, E = num_edges(), F = nt;
    if (3 * F != 2 * E) throw TriangulationError("3F != 2E");
    int chi_filled = V - E + F;
    if ((2 - chi_filled) % 2 != 0) throw TriangulationError("odd filled Euler characteristic");
    kind_.genus = (2 - chi_filled) / 2;
    if (kind_.genus < 0) throw TriangulationError("negative genus");
    if (kind_.euler_characteristic() >= 0)
        throw TriangulationError("non-hyperbolic type: chi = " +
                                 std::to_string(kind_.euler_characteristic()));
    for (int b : kind_.boundary_punctures)
        if (b < 0 || b >= V) throw TriangulationError("boundary puncture id out of range");
}

bool Triangulation::edge_is_flippable(int edge) const {
    const auto& ss = edge_sides_[edge];
    return tri_of(ss[0]) != tri_of(ss[1]);
}

Triangulation Triangulation::flipped(int edge) const {
    if (!edge_is_flippable(edge))
        throw TriangulationError("flip of self-folded edge " + std::to_string(edge));
    int sA = edge_sides_[edge][0], sB = edge_sides_[edge][1];
    int t1 = tri_of(sA), k1 = loc_of(sA);
    int t2 = tri_of(sB), k2 = loc_of(sB);

    // quad boundary ccw: P,Q in t1 after the diagonal; R,S in t2
    int P = side_id(t1, (k1 + 1) % 3), Q = side_id(t1, (k1 + 2) % 3);
    int R = side_id(t2, (k2 + 1) % 3), S = side_id(t2, (k2 + 2) % 3);

    // new triangles: U=(Q,R,e') on t1's slots, W=(S,P,e') on t2's slots
    // slot map: Q->(t1,0) R->(t1,1) e'->(t1,2)~(t2,2) S->(t2,0) P->(t2,1)
    std::vector<int> new_slot(num_sides(), -1);
    for (int s = 0; s < num_sides(); ++s) new_slot[s] = s;
    new_slot[Q] = side_id(t1, 0);
    new_slot[R] = side_id(t1, 1);
    new_slot[S] = side_id(t2, 0);
    new_slot[P] = side_id(t2, 1);
    new_slot[sA] = side_id(t1, 2);
    new_slot[sB] = side_id(t2, 2);

    Triangulation T;
    T.name_ = name_;
    T.num_triangles_ = num_triangles_;
    T.partner_.assign(num_sides(), -1);
    for (int s = 0; s < num_sides(); ++s) {
        if (s == sA || s == sB) continue;
        T.partner_[new_slot[s]] = new_slot[partner_[s]];
    }
    T.partner_[side_id(t1, 2)] = side_id(t2, 2);
    T.partner_[side_id(t2, 2)] = side_id(t1, 2);

    // stable edge ids
    T.edge_of_side_.assign(num_sides(), -1);
    T.edge_sides_.assign(num_edges(), {-1, -1});
    for (int e = 0; e < num_edges(); ++e) {
        int a, b;
        if (e == edge) {
            a = side_id(t1, 2);
            b = side_id(t2, 2);
        } else {
            a = new_slot[edge_sides_[e][0]];
            b = new_slot[edge_sides_[e][1]];
        }
        T.edge_sides_[e] = {a, b};
        T.edge_of_side_[a] = e;
        T.edge_of_side_[b] = e;
    }
    T.kind_.boundary_punctures = kind_.boundary_punctures;

    // recompute orbits; puncture count and order are preserved because the
    // flip does not touch vertices, but ids could permute -- forbid that by
    // checking a representative corner
    T.finalize();
    if (T.kind_.punctures != kind_.punctures)
        throw TriangulationError("flip changed puncture count");
    return T;
}

std::vector<Weight> Triangulation::transport_across_flip(int edge,
                                                         const std::vector<Weight>& w) const {
    if (!edge_is_flippable(edge)) throw TriangulationError("flip of self-folded edge");
    int sA = edge_sides_[edge][0], sB = edge_sides_[edge][1];
    int t1 = tri_of(sA), k1 = loc_of(sA);
    int t2 = tri_of(sB), k2 = loc_of(sB);
    Weight p = w[edge_of_side_[side_id(t1, (k1 + 1) % 3)]];
    Weight q = w[edge_of_side_[side_id(t1, (k1 + 2) % 3)]];
    Weight r = w[edge_of_side_[side_id(t2, (k2 + 1) % 3)]];
    Weight s = w[edge_of_side_[side_id(t2, (k2 + 2) % 3)]];
    std::vector<Weight> out = w;
    out[edge] = std::max(p + r, q + s) - w[edge];
    return out;
}

int Triangulation::basepoint_puncture() const {
    if (!kind_.boundary_punctures.empty()) return kind_.boundary_punctures.front();
    return 0;
}

std::vector<std::vector<int>> Triangulation::automorphisms() const {
    std::vector<std::vector<int>> out;
    const int nt = num_triangles_;
    for (int t0 = 0; t0 < nt; ++t0)
        for (int rot = 0; rot < 3; ++rot) {
            // propagate the seed "triangle 0 -> (t0, rot)" across gluings
            std::vector<int> tri_img(nt, -1), tri_rot(nt, -1);
            tri_img[0] = t0;
            tri_rot[0] = rot;
            std::vector<int> stack{0};
            bool ok = true;
            while (ok && !stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                for (int k = 0; k < 3; ++k) {
                    int s = side_id(t, k);
                    int img_s = side_id(tri_img[t], (k + tri_rot[t]) % 3);
                    int p = partner_[s], ip = partner_[img_s];
                    int u = tri_of(p), iu = tri_of(ip);
                    int need_rot = (loc_of(ip) - loc_of(p) + 3) % 3;
                    if (tri_img[u] == -1) {
                        tri_img[u] = iu;
                        tri_rot[u] = need_rot;
                        stack.push_back(u);
                    } else if (tri_img[u] != iu || tri_rot[u] != need_rot) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            std::vector<char> hit(nt, 0);
            for (int t = 0; t < nt; ++t) {
                if (tri_img[t] < 0 || hit[tri_img[t]]) {
                    ok = false;
                    break;
                }
                hit[tri_img[t]] = 1;
            }
            if (!ok) continue;
            std::vector<int> perm(num_sides());
            for (int t = 0; t < nt; ++t)
                for (int k = 0; k < 3; ++k)
                    perm[side_id(t, k)] = side_id(tri_img[t], (k + tri_rot[t]) % 3);
            bool commutes = true;
            for (int s = 0; s < num_sides() && commutes; ++s)
                if (perm[partner_[s]] != partner_[perm[s]]) commutes = false;
            if (commutes) out.push_back(std::move(perm));
        }
    return out;
}

std::vector<int> Triangulation::edge_permutation(const std::vector<int>& side_perm) const {
    std::vector<int> ep(num_edges());
    for (int e = 0; e < num_edges(); ++e) ep[e] = edge_of_side_[side_perm[edge_sides_[e][0]]];
    return ep;
}

std::string Triangulation::state_key(const std::vector<Weight>& w) const {
    std::ostringstream os;
    for (int p : partner_) os << p << ',';
    os << '|';
    for (Weight x : w) os << x << ',';
    return os.str();
}

Triangulation Triangulation::from_json_text(const std::string& text) {
    json j = json::parse(text);
    std::vector<std::array<int, 3>> tris;
    for (const auto& t : j.at("triangles")) tris.push_back({t.at(0), t.at(1), t.at(2)});
    std::vector<std::array<int, 2>> glue;
    for (const auto& g : j.at("gluing")) glue.push_back({g.at(0), g.at(1)});
    std::vector<int> bp;
    if (j.contains("boundary_punctures"))
        bp = j.at("boundary_punctures").get<std::vector<int>>();
    auto T = build(tris, glue, bp, j.value("name", std::string{}));
    if (j.contains("punctures")) {
        // the file's corner orbits are validated, not trusted
        auto orbits = j.at("punctures").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(orbits.size()) != T.num_punctures())
            throw TriangulationError("declared puncture count mismatch");
        for (int v = 0; v < static_cast<int>(orbits.size()); ++v) {
            for (int corner : orbits[v])
                if (T.puncture_of_corner(corner) != v)
                    throw TriangulationError("declared puncture orbits mismatch");
        }
    }
    return T;
}

Triangulation Triangulation::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TriangulationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Triangulation::to_json_text() const {
    json j;
    j["name"] = name_;
    json tris = json::array();
    for (int t = 0; t < num_triangles_; ++t)
        tris.push_back({side_id(t, 0), side_id(t, 1), side_id(t, 2)});
    j["triangles"] = tris;
    json glue = json::array();
    for (const auto& e : edge_sides_) glue.push_back({e[0], e[1]});
    j["gluing"] = glue;
    j["punctures"] = vertex_corners_;
    j["boundary_punctures"] = kind_.boundary_punctures;
    return j.dump(2);
}

std::string data_dir() {
    if (const char* env = std::getenv("HEXLAB_DATA")) return env;
    std::ifstream probe("data/S2_1.json");
    if (probe) return "data";
#ifdef HEXLAB_SOURCE_DATA_DIR
    return HEXLAB_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

Triangulation load_surface(const std::string& name) {
    return Triangulation::load_file(data_dir() + "/" + name + ".json");
}

}  // namespace hexlab
