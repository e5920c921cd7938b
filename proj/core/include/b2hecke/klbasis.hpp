#pragma once

// The canonical basis C_w of the Hecke algebra and everything derived from
// it: the polynomials P_{y,w} (C_w = q^{-l(w)/2} sum_{y<=w} P_{y,w} T_y with
// P_{w,w} = 1), the leading coefficients mu(y,w), and base change between
// the T and C bases.
//
// C_w is built from the generator product rule
//   C_g C_u = [2] C_u                              if gu < u,
//   C_g C_u = C_{gu} + sum_{gy<y} mu(y,u) C_y      if gu > u,
// inverted into a recursion on length, with C_e = T_e, C_g = v^-1(T_g+T_e)
// and C_{omega u} = T_omega C_u.  Every expansion is cached; a configurable
// length budget bounds the recursion.

#include <map>

#include "b2hecke/coxeter.hpp"
#include "b2hecke/errors.hpp"
#include "b2hecke/hecke.hpp"
#include "b2hecke/laurent.hpp"

namespace b2hecke {

class KLTable {
public:
    explicit KLTable(int budget = 24) : budget_(budget) {}

    int budget() const { return budget_; }

    // T-basis expansion of C_w, cached.
    const HeckeElt& c_basis(const GroupElt& w);

    // Same recursion but forcing the pivot generator, and uncached; used to
    // confirm the result does not depend on the choice of left descent.
    HeckeElt c_basis_via(const GroupElt& w, Gen g);

    // P_{y,w} as a polynomial in q (zero if y is not below w).
    Laurent kl_polynomial(const GroupElt& y, const GroupElt& w);

    // Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}; zero unless y <= w.
    long long mu(const GroupElt& y, const GroupElt& w);

    // Symmetrized variant: mu(y,w) if y <= w, mu(w,y) if w <= y, else 0.
    long long mu_tilde(const GroupElt& y, const GroupElt& w);

    // Base change.  t_to_c peels the highest-length term repeatedly; exact
    // and total because C_w = v^{-l(w)} T_w + shorter terms.
    HeckeElt t_to_c(const HeckeElt& h);
    HeckeElt c_to_t(const HeckeElt& h);

    // C_x C_y expressed in the C basis.
    HeckeElt c_multiply(const GroupElt& x, const GroupElt& y);

    // Product of two C-basis elements, in the C basis.
    HeckeElt c_mul(const HeckeElt& a, const HeckeElt& b);

private:
    HeckeElt c_basis_from_descent(const GroupElt& w, Gen g);

    int budget_;
    std::map<GroupElt, HeckeElt> cache_;
};

}  // namespace b2hecke
