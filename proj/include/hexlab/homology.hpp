#pragma once

#include "hexlab/curve.hpp"

namespace hexlab {

// H1 of the surface via its dual spine graph: vertices = triangles, edges =
// triangulation edges; co-tree edges index the basis (rank 2g + p - 1)
struct HomologyBasis {
    std::vector<char> in_tree;     // per edge
    std::vector<int> basis_index;  // per edge, -1 for tree edges
    int rank = 0;
};

HomologyBasis homology_basis(const Triangulation& T);

// class of an oriented closed word: each crossing of edge e adds +-1 on the
// co-tree coordinate of e (sign: + when exiting through the canonical side)
std::vector<long long> homology_class(const Triangulation& T, const HomologyBasis& B,
                                      const std::vector<int>& word);

// single curve with its traced orientation
std::vector<long long> homology_class(const Multicurve& a, const HomologyBasis& B);

bool is_zero(const std::vector<long long>& v);
std::vector<long long> negated(std::vector<long long> v);

}  // namespace hexlab
