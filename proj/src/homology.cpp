#include "hexlab/homology.hpp"

#include <algorithm>

namespace hexlab {

HomologyBasis homology_basis(const Triangulation& T) {
    HomologyBasis B;
    B.in_tree.assign(T.num_edges(), 0);
    B.basis_index.assign(T.num_edges(), -1);
    // BFS spanning tree of the dual graph from triangle 0
    std::vector<char> seen(T.num_triangles(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int t = queue[qi];
        for (int k = 0; k < 3; ++k) {
            int s = Triangulation::side_id(t, k);
            int u = Triangulation::tri_of(T.partner(s));
            if (!seen[u]) {
                seen[u] = 1;
                B.in_tree[T.edge_of_side(s)] = 1;
                queue.push_back(u);
            }
        }
    }
    for (int e = 0; e < T.num_edges(); ++e)
        if (!B.in_tree[e]) B.basis_index[e] = B.rank++;
    return B;
}

std::vector<long long> homology_class(const Triangulation& T, const HomologyBasis& B,
                                      const std::vector<int>& word) {
    std::vector<long long> v(B.rank, 0);
    for (int s : word) {
        int e = T.edge_of_side(s);
        int bi = B.basis_index[e];
        if (bi < 0) continue;
        v[bi] += (T.sides_of_edge(e)[0] == s) ? +1 : -1;
    }
    return v;
}

std::vector<long long> homology_class(const Multicurve& a, const HomologyBasis& B) {
    Trace tr = trace_multicurve(a);
    if (tr.comps.size() != 1) throw CurveError("homology_class needs a single curve");
    return homology_class(*a.tri, B, tr.comps[0].word);
}

bool is_zero(const std::vector<long long>& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

std::vector<long long> negated(std::vector<long long> v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace hexlab
