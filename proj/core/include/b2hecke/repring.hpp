#pragma once

// The representation ring of SL2 x Z/2 with Laurent coefficients, in two
// coordinate systems:
//   - RepElt: the irreducible basis V(k) eps^p, k >= 0, p in {0,1}, with
//     V(m) V(n) = sum_{i<=min(m,n)} V(m+n-2i) (Clebsch-Gordan) and eps^2 = 1;
//   - MonElt: the monomial basis theta'_{m xi} eps^p of the Z/2-graded
//     group algebra of the SL2 weight lattice Z xi, multiplying by adding
//     indices.
// V(k) corresponds to the symmetric monomial sum theta'_k + theta'_{k-2}
// + ... + theta'_{-k}; the two bases are exchanged by expansion and by
// peeling top monomials.
//
// phi_tilde_theta sends the theta-basis of the rank-two lattice here:
// a x1 + b x2 maps to (-1)^a v^a theta'_{(a+b) xi} eps^(b mod 2), fixing the
// generator images theta_{x1} -> -v theta'_xi and theta_{x2} -> theta'_xi eps.

#include <map>
#include <utility>

#include "b2hecke/errors.hpp"
#include "b2hecke/laurent.hpp"
#include "b2hecke/weights.hpp"

namespace b2hecke {

// (k, p) -> coefficient of V(k) eps^p; k >= 0.
using RepElt = std::map<std::pair<int, int>, Laurent>;

// (m, p) -> coefficient of theta'_{m xi} eps^p; m any integer.
using MonElt = std::map<std::pair<int, int>, Laurent>;

// Adds c to the (k,p) coordinate, erasing the entry if it cancels to zero.
void add_coord(RepElt& u, int k, int p, const Laurent& c);

RepElt rf_multiply(const RepElt& u, const RepElt& v);
MonElt mon_multiply(const MonElt& u, const MonElt& v);

MonElt irrep_to_monomial(const RepElt& u);

// Throws NotSymmetric when the input is not invariant under m -> -m.
RepElt monomial_to_irrep(const MonElt& u);

MonElt phi_tilde_theta(Weight x);

}  // namespace b2hecke
