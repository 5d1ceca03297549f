#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hexlab {

// reduced slope p/q with q >= 0; (1, 0) is the point at infinity
struct Slope {
    long long p = 0, q = 1;

    static Slope make(long long p, long long q);
    static Slope infinity() { return Slope{1, 0}; }
    bool operator==(const Slope&) const = default;
    bool operator<(const Slope& o) const { return std::pair{p, q} < std::pair{o.p, o.q}; }
    std::string str() const;
};

// curves of the four-ended sphere meet in even numbers: i = 2|ps' - qr|
long long farey_i(const Slope& a, const Slope& b);
bool farey_adjacent(const Slope& a, const Slope& b);

// the two third-vertices completing an edge to a triangle
std::array<Slope, 2> farey_triangles(const Slope& a, const Slope& b);

// determinant-1 action; the full twist about s is the square of the primitive
// parabolic fixing s.  sign=+1 realizes z -> z+2 at infinity.
struct TwistAction {
    std::array<std::array<long long, 2>, 2> m;
    Slope apply(const Slope& s) const;
    static TwistAction about(const Slope& s, long long power, int sign = +1);
};

// circular order of slopes on the boundary circle: +1 if (a, b, c) are in
// increasing circular order, -1 otherwise
int circular_orientation(const Slope& a, const Slope& b, const Slope& c);
// side of the edge {u, v} containing w (w not an endpoint): +1 or -1
int side_of_edge(const Slope& u, const Slope& v, const Slope& w);

// Stern-Brocot height: continued-fraction coefficient sum of |p|/q
long long slope_height(const Slope& s);

struct FareySolution {
    Slope delta;
    long long m, n;
    bool operator==(const FareySolution&) const = default;
};

struct FareyLemmaReport {
    Slope alpha, beta, gamma, t_alpha_gamma;
    std::vector<FareySolution> solutions;       // all (delta, m, n) found
    std::vector<FareySolution> counterexamples; // solutions outside the lemma's set
    bool pass = false;
    long long checked = 0;
};

// exhaustive verification of the two-solution lemma over delta adjacent to
// beta = 0 with height <= height_bound, 0 < |m|,|n| <= exponent_bound, with
// alpha = infinity; sign chooses the global twist convention
FareyLemmaReport verify_farey_lemma(long long height_bound, long long exponent_bound,
                                    int sign = +1);

}  // namespace hexlab
