#pragma once

// The commutative picture inside the Hecke algebra: for each weight x the
// element theta_x, defined from any splitting x = x' - x'' into dominant
// weights by
//     theta_x = (v^{-l(t_{x'})} T_{t_{x'}}) (v^{-l(t_{x''})} T_{t_{x''}})^{-1},
// the orbit sums z_x over the finite Weyl group, and the central elements
//     S_lambda = sum over dominant nu of mult_{V(lambda)}(nu) z_nu,
// which form a basis of the center and multiply like characters:
// S_lambda S_mu = sum_z m_{lambda,mu,z} S_z with tensor-product
// multiplicities m.

#include <utility>
#include <vector>

#include "b2hecke/coxeter.hpp"
#include "b2hecke/errors.hpp"
#include "b2hecke/hecke.hpp"
#include "b2hecke/weights.hpp"

namespace b2hecke {

// The group element translating by mu; demands dominance, where the length
// is additive: l(t_mu) = 4a + 3b.
GroupElt translation_element(Weight mu);

// theta with the canonical splitting x' = (max(a,0), max(b,0)).
HeckeElt theta(Weight x);

// theta from an explicit splitting; both parts must be dominant and the
// result must not depend on the choice (exercised by tests).
HeckeElt theta_decomposed(Weight xp, Weight xpp);

// Orbit sum of thetas over the finite Weyl group orbit of a dominant weight.
HeckeElt z_element(Weight x);

struct CentralElement {
    Weight lambda;
    HeckeElt expansion;  // T basis
};

CentralElement s_element(Weight lambda);

// Does h commute with T_r, T_s, T_t and T_omega?
bool is_central(const HeckeElt& h);

// Returns the tensor-product decomposition of V(lambda) x V(mu) after
// verifying, exactly, that S_lambda S_mu expands accordingly in the Hecke
// algebra.  Throws VerificationFailure when the two sides differ.
std::vector<std::pair<Weight, long long>> central_product(Weight lambda, Weight mu);

}  // namespace b2hecke
