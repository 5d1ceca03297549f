#include "hexlab/intersection.hpp"

#include <algorithm>

namespace hexlab {

namespace {

struct Cyc {
    const std::vector<int>* w;
    int n;
    int at(long long i) const { return (*w)[static_cast<size_t>(((i % n) + n) % n)]; }
};

// classes for one orientation pairing; appends to out
void classes_one_eps(const Triangulation& T, const Cyc& A, const Cyc& B, int eps,
                     std::vector<CrossingClass>* out, bool* equal) {
    const int cap = A.n + B.n;
    for (int i = 0; i < A.n; ++i) {
        for (int j = 0; j < B.n; ++j) {
            if (A.at(i) != B.at(j)) continue;
            // backward-maximal representatives only
            if (A.at(i - 1) == B.at(j - 1)) continue;
            int r = 1;
            while (r < cap && A.at(i + r) == B.at(j + r)) ++r;
            if (r >= cap) {
                *equal = true;
                return;
            }
            // forward divergence: entered tri via partner(last), exits u (A), v (B)
            int last = A.at(i + r - 1);
            int pf = T.partner(last);
            int u = A.at(i + r);
            int lf = Triangulation::loc_of(pf);
            bool a_left_front =
                (u == Triangulation::side_id(Triangulation::tri_of(pf), (lf + 2) % 3));
            // backward merge: both exit through first; A entered via partner(A[i-1])
            int first = A.at(i);
            int pa = T.partner(A.at(i - 1));
            int l0 = Triangulation::loc_of(first);
            bool a_left_back =
                (pa == Triangulation::side_id(Triangulation::tri_of(first), (l0 + 1) % 3));
            if (a_left_back == a_left_front) continue;  // bigon side pattern, no crossing
            int sign = (a_left_back && !a_left_front) ? +1 : -1;
            out->push_back(CrossingClass{i, j, r, eps, eps * sign});
        }
    }
}

}  // namespace

CrossingClasses crossing_classes(const Triangulation& T, const std::vector<int>& a,
                                 const std::vector<int>& b) {
    CrossingClasses res;
    if (a.empty() || b.empty()) return res;
    Cyc A{&a, static_cast<int>(a.size())};
    std::vector<int> brev = reversed_word(T, b);
    Cyc Bf{&b, static_cast<int>(b.size())};
    Cyc Br{&brev, static_cast<int>(brev.size())};
    bool equal = false;
    classes_one_eps(T, A, Bf, +1, &res.classes, &equal);
    if (!equal) classes_one_eps(T, A, Br, -1, &res.classes, &equal);
    if (equal) {
        res.classes.clear();
        res.equal = true;
    }
    return res;
}

Weight geometric_intersection(const Triangulation& T, const Trace& a, const Trace& b,
                              const std::vector<Weight>&, const std::vector<Weight>&) {
    Weight total = 0;
    for (const auto& ca : a.comps)
        for (const auto& cb : b.comps) {
            auto cc = crossing_classes(T, ca.word, cb.word);
            if (!cc.equal) total += static_cast<Weight>(cc.classes.size());
        }
    return total;
}

Weight geometric_intersection(const Multicurve& a, const Multicurve& b) {
    if (a.tri != b.tri && !(*a.tri == *b.tri)) throw CurveError("mismatched triangulations");
    Trace ta = trace_multicurve(a), tb = trace_multicurve(b);
    return geometric_intersection(*a.tri, ta, tb, a.w, b.w);
}

long long algebraic_intersection(const Triangulation& T, const std::vector<int>& word_a,
                                 const std::vector<int>& word_b) {
    auto cc = crossing_classes(T, word_a, word_b);
    long long s = 0;
    for (const auto& c : cc.classes) s += c.sign;
    return s;
}

long long algebraic_intersection(const Multicurve& a, const Multicurve& b) {
    if (a.tri != b.tri && !(*a.tri == *b.tri)) throw CurveError("mismatched triangulations");
    Trace ta = trace_multicurve(a), tb = trace_multicurve(b);
    if (ta.comps.size() != 1 || tb.comps.size() != 1)
        throw CurveError("algebraic intersection needs single-component curves");
    return algebraic_intersection(*a.tri, ta.comps[0].word, tb.comps[0].word);
}

}  // namespace hexlab
