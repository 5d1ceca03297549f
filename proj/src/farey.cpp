#include "hexlab/farey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hexlab {

Slope Slope::make(long long p, long long q) {
    if (p == 0 && q == 0) throw std::invalid_argument("0/0 slope");
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return Slope{p, q};
}

std::string Slope::str() const {
    if (q == 0) return "inf";
    return std::to_string(p) + "/" + std::to_string(q);
}

long long farey_i(const Slope& a, const Slope& b) {
    return 2 * std::llabs(a.p * b.q - a.q * b.p);
}

bool farey_adjacent(const Slope& a, const Slope& b) {
    return std::llabs(a.p * b.q - a.q * b.p) == 1;
}

std::array<Slope, 2> farey_triangles(const Slope& a, const Slope& b) {
    if (!farey_adjacent(a, b)) throw std::invalid_argument("farey_triangles: not an edge");
    return {Slope::make(a.p + b.p, a.q + b.q), Slope::make(a.p - b.p, a.q - b.q)};
}

Slope TwistAction::apply(const Slope& s) const {
    return Slope::make(m[0][0] * s.p + m[0][1] * s.q, m[1][0] * s.p + m[1][1] * s.q);
}

TwistAction TwistAction::about(const Slope& s, long long power, int sign) {
    // primitive parabolic fixing s: I + sign * (p,q)^T (-q,p); the full twist
    // is its square, so exponent k contributes I + 2k * N with N^2 = 0
    long long k = 2 * power * sign;
    TwistAction t;
    t.m[0][0] = 1 - k * s.p * s.q;
    t.m[0][1] = k * s.p * s.p;
    t.m[1][0] = -k * s.q * s.q;
    t.m[1][1] = 1 + k * s.p * s.q;
    return t;
}

namespace {
// strict order on the circle: rationals in increasing order, infinity last
bool slope_less(const Slope& a, const Slope& b) {
    if (a == b) return false;
    if (a.q == 0) return false;  // inf is greatest
    if (b.q == 0) return true;
    return a.p * b.q < b.p * a.q;
}
}  // namespace

int circular_orientation(const Slope& a, const Slope& b, const Slope& c) {
    if (a == b || b == c || a == c) throw std::invalid_argument("degenerate triple");
    bool ab = slope_less(a, b), bc = slope_less(b, c), ca = slope_less(c, a);
    int votes = (ab ? 1 : 0) + (bc ? 1 : 0) + (ca ? 1 : 0);
    return votes >= 2 ? +1 : -1;
}

int side_of_edge(const Slope& u, const Slope& v, const Slope& w) {
    if (w == u || w == v) throw std::invalid_argument("vertex on edge");
    return circular_orientation(u, w, v);
}

long long slope_height(const Slope& s) {
    long long p = std::llabs(s.p), q = s.q;
    if (q == 0 || p == 0) return 0;
    long long h = 0;
    while (q != 0) {
        h += p / q;
        long long r = p % q;
        p = q;
        q = r;
    }
    return h;
}

FareyLemmaReport verify_farey_lemma(long long height_bound, long long exponent_bound,
                                    int sign) {
    FareyLemmaReport rep;
    rep.alpha = Slope::infinity();
    rep.beta = Slope::make(0, 1);
    // gamma: the completion of {alpha, beta} whose t_alpha-image is again a
    // completion of {alpha, beta}
    auto comps = farey_triangles(rep.alpha, rep.beta);
    TwistAction ta = TwistAction::about(rep.alpha, 1, sign);
    std::optional<Slope> gamma;
    for (const Slope& c : comps) {
        Slope img = ta.apply(c);
        if (img == comps[0] || img == comps[1]) gamma = c;
    }
    if (!gamma) throw std::logic_error("farey: gamma not found");
    rep.gamma = *gamma;
    rep.t_alpha_gamma = ta.apply(*gamma);

    // delta adjacent to beta: p = +-1; filter by Stern-Brocot height
    std::vector<Slope> deltas;
    for (long long q = 0; q <= (1LL << std::min<long long>(height_bound, 20)); ++q)
        for (long long p : {1LL, -1LL}) {
            if (q == 0 && p != 1) continue;
            Slope d = Slope::make(p, q);
            if (d == rep.alpha || d == rep.beta) continue;
            if (slope_height(d) > height_bound) continue;
            if (!farey_adjacent(d, rep.beta)) continue;
            deltas.push_back(d);
        }
    std::sort(deltas.begin(), deltas.end());
    deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());

    for (const Slope& d : deltas)
        for (long long m = -exponent_bound; m <= exponent_bound; ++m) {
            if (m == 0) continue;
            Slope lhs = TwistAction::about(rep.alpha, m, sign).apply(rep.beta);
            for (long long n = -exponent_bound; n <= exponent_bound; ++n) {
                if (n == 0) continue;
                ++rep.checked;
                Slope rhs = TwistAction::about(d, n, sign).apply(rep.beta);
                if (lhs == rhs) rep.solutions.push_back({d, m, n});
            }
        }

    std::vector<FareySolution> expect = {{rep.gamma, -1, +1}, {rep.t_alpha_gamma, +1, -1}};
    for (const auto& s : rep.solutions) {
        bool ok = false;
        for (const auto& e : expect) ok = ok || s == e;
        if (!ok) rep.counterexamples.push_back(s);
    }
    rep.pass = rep.counterexamples.empty() && rep.solutions.size() == 2;
    return rep;
}

}  // namespace hexlab
