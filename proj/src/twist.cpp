#include "hexlab/twist.hpp"

#include <algorithm>

#include "hexlab/overlay.hpp"

namespace hexlab {

Multicurve dehn_twist(const Multicurve& a, const Multicurve& b, long long k) {
    if (a.tri != b.tri && !(*a.tri == *b.tri)) throw CurveError("mismatched triangulations");
    if (!is_single_curve(a)) throw CurveError("dehn_twist: twisting multicurve is not a single curve");
    if (k == 0) return b;

    const Triangulation& T = *a.tri;
    Overlay ov(T, a, b);
    ov.tighten();
    const std::vector<int>& W = ov.trace_a().comps[0].word;
    const int L = static_cast<int>(W.size());

    std::vector<Weight> total(T.num_edges(), 0);
    for (int cb = 0; cb < static_cast<int>(ov.trace_b().comps.size()); ++cb) {
        const auto& beta = ov.trace_b().comps[cb];
        auto xs = ov.crossings_along_b(cb);
        std::vector<int> out;
        size_t xi = 0;
        for (int j = 0; j < beta.length(); ++j) {
            while (xi < xs.size() && xs[xi].chord_b == j) {
                int ja = xs[xi].chord_a;
                long long loops = k * xs[xi].sign;  // sign of (a', b') frame
                if (loops > 0) {
                    // follow a forward from its chord ja
                    for (long long r = 0; r < loops; ++r)
                        for (int t = 0; t < L; ++t) out.push_back(W[(ja + t) % L]);
                } else {
                    // follow a backward: first exit is partner of the letter
                    // that entered a's chord ja
                    for (long long r = 0; r < -loops; ++r)
                        for (int t = 1; t <= L; ++t)
                            out.push_back(T.partner(W[((ja - t) % L + L) % L]));
                }
                ++xi;
            }
            out.push_back(beta.word[j]);
        }
        auto red = reduce_cyclic_word(T, out);
        if (red.empty()) throw CurveError("dehn_twist produced a null-homotopic component");
        auto ww = word_weights(T, red);
        for (int e = 0; e < T.num_edges(); ++e) total[e] += ww[e];
    }
    return validate_multicurve(T, total);
}

Multicurve apply_twist_word(const std::vector<TwistStep>& word, const Multicurve& b) {
    Multicurve cur = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = dehn_twist(it->curve, cur, it->power);
    return cur;
}

}  // namespace hexlab
