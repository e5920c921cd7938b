#pragma once

// The rank-two symplectic weight lattice and its finite Weyl group.
//
// Weights are integer pairs (a, b) meaning a*x1 + b*x2 in the basis of
// fundamental weights. The simple roots are
//     alpha1 = 2*x1 - 2*x2   (long),
//     alpha2 =  -x1 + 2*x2   (short),
// so <mu, alpha1^vee> = a and <mu, alpha2^vee> = b. The reflections
//     s(a,b) = (-a, 2a+b),   t(a,b) = (a+b, -b)
// generate the dihedral group W0 of order 8, with longest element -1.
// The root lattice is exactly {(a,b) : b even}, of index two.
//
// Multiplicities come from Freudenthal's recursion over the W0-invariant
// pairing ip((a,b),(a',b')) = a*a' + (a+b)*(a'+b'); tensor products are
// decomposed by exact character peeling. All arithmetic is exact.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "b2hecke/errors.hpp"

namespace b2hecke {

struct Weight {
    int a = 0;
    int b = 0;

    bool dominant() const { return a >= 0 && b >= 0; }
    friend Weight operator+(Weight x, Weight y) { return {x.a + y.a, x.b + y.b}; }
    friend Weight operator-(Weight x, Weight y) { return {x.a - y.a, x.b - y.b}; }
    Weight operator-() const { return {-a, -b}; }
    friend Weight operator*(int n, Weight x) { return {n * x.a, n * x.b}; }
    bool operator==(const Weight& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return a != o.a ? a < o.a : b < o.b; }
};

inline constexpr Weight kX1{1, 0};
inline constexpr Weight kX2{0, 1};
inline constexpr Weight kAlpha1{2, -2};
inline constexpr Weight kAlpha2{-1, 2};
inline constexpr Weight kRho{1, 1};

// W0-invariant inner product (normalized so short roots have square length 2)
inline long long ip(Weight x, Weight y) {
    return (long long)x.a * y.a + (long long)(x.a + x.b) * (y.a + y.b);
}

// The finite Weyl group W0 = <s, t>, elements addressed by index 0..7 in the
// fixed order e, s, t, st, ts, sts, tst, stst. Tables are built once and
// self-checked (group order, Coxeter relations, Cartan pairings).
class W0 {
public:
    static constexpr int kOrder = 8;
    static constexpr int e = 0;
    static constexpr int s = 1;
    static constexpr int t = 2;
    static constexpr int st = 3;
    static constexpr int ts = 4;
    static constexpr int sts = 5;
    static constexpr int tst = 6;
    static constexpr int w0 = 7;  // stst = tsts = -1

    static int mul(int u, int v);
    static int inverse(int u);
    static int det(int u);       // (-1)^length
    static int length(int u);
    static Weight act(int u, Weight mu);
    static const char* name(int u);  // "e", "s", "t", ...
};

std::vector<Weight> orbit(Weight mu);
Weight dominant_rep(Weight mu);

// multiplicity of the weight mu in the irreducible module V(lambda); 0 when
// mu is not a weight of it. lambda must be dominant.
long long weight_multiplicity(Weight lambda, Weight mu);

long long irrep_dim(Weight lambda);

// full weight diagram of V(lambda): weight -> multiplicity (all > 0)
std::map<Weight, long long> character(Weight lambda);

// decompose an arbitrary Z-combination of weights (a virtual character) into
// irreducible characters; used by tensor products and by the generator
// polynomials of central elements
std::vector<std::pair<Weight, long long>> peel_character(std::map<Weight, long long> ch);

// V(lambda) (x) V(mu) as a multiset of highest weights with multiplicities,
// sorted by decreasing (3a+2b, lex)
std::vector<std::pair<Weight, long long>> tensor_decompose(Weight lambda, Weight mu);

std::string weight_str(Weight mu);

}  // namespace b2hecke
