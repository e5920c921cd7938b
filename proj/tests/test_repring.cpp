// The representation ring of SL2 x Z/2: Clebsch-Gordan products, the eps
// grading, the monomial coordinate system, and the theta transport map.

#include <utility>
#include <vector>

#include "b2hecke/repring.hpp"
#include "b2hecke/textio.hpp"
#include "doctest.h"

using namespace b2hecke;

namespace {

RepElt V(int k, int p = 0, Laurent c = Laurent(1)) { return RepElt{{{k, p}, c}}; }

MonElt M(int m, int p = 0, Laurent c = Laurent(1)) { return MonElt{{{m, p}, c}}; }

}  // namespace

TEST_SUITE("repring") {

TEST_CASE("Clebsch-Gordan products") {
    CHECK(rf_multiply(V(1), V(1)) == RepElt{{{0, 0}, Laurent(1)}, {{2, 0}, Laurent(1)}});
    CHECK(rf_multiply(V(2), V(3)) ==
          RepElt{{{1, 0}, Laurent(1)}, {{3, 0}, Laurent(1)}, {{5, 0}, Laurent(1)}});
    CHECK(rf_multiply(V(0), V(4)) == V(4));
    CHECK(rep_str(rf_multiply(V(1), V(1))) == "V(2) + 1");
    // dimension bookkeeping: sum of (k+1) over the product of V(m), V(n)
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            long long dim = 0;
            for (const auto& [kp, c] : rf_multiply(V(m), V(n)))
                dim += (kp.first + 1) * c.coeff(0);
            CHECK(dim == (m + 1) * (n + 1));
        }
    }
}

TEST_CASE("the sign character squares to one") {
    CHECK(rf_multiply(V(0, 1), V(0, 1)) == V(0, 0));
    CHECK(rf_multiply(V(1, 1), V(1, 0)) == RepElt{{{0, 1}, Laurent(1)}, {{2, 1}, Laurent(1)}});
    CHECK(rep_str(rf_multiply(V(2, 1), V(1, 0))) == "V(3)·eps + V(1)·eps");
    CHECK(rf_multiply(V(2, 1), V(1, 1)) == RepElt{{{1, 0}, Laurent(1)}, {{3, 0}, Laurent(1)}});
}

TEST_CASE("Laurent coefficients ride along") {
    RepElt a = V(1, 0, quantum_two());
    RepElt b = V(1, 1, Laurent::v(3));
    RepElt prod = rf_multiply(a, b);
    Laurent c = quantum_two() * Laurent::v(3);
    CHECK(prod == RepElt{{{0, 1}, c}, {{2, 1}, c}});
}

TEST_CASE("monomial coordinates") {
    // V(2) expands into the symmetric monomial sum
    CHECK(irrep_to_monomial(V(2)) ==
          MonElt{{{-2, 0}, Laurent(1)}, {{0, 0}, Laurent(1)}, {{2, 0}, Laurent(1)}});
    MonElt sym{{{-1, 1}, Laurent(1)}, {{1, 1}, Laurent(1)}};
    CHECK(monomial_to_irrep(sym) == V(1, 1));
    // a hand-built symmetric sum resolves into two irreducibles
    MonElt two_layers{{{-2, 0}, Laurent(1)},
                      {{0, 0}, Laurent(2)},
                      {{2, 0}, Laurent(1)}};
    CHECK(monomial_to_irrep(two_layers) ==
          RepElt{{{2, 0}, Laurent(1)}, {{0, 0}, Laurent(1)}});
    // monomials multiply by adding indices, with the eps grading
    CHECK(mon_multiply(M(1, 1), M(1, 1)) == M(2, 0));
    CHECK(mon_multiply(M(2, 0), M(-3, 1)) == M(-1, 1));
    // asymmetric input is rejected
    CHECK_THROWS_AS(monomial_to_irrep(M(1, 0)), NotSymmetric);
    CHECK_THROWS_AS(
        monomial_to_irrep(MonElt{{{-1, 0}, Laurent(1)}, {{1, 0}, Laurent(2)}}),
        NotSymmetric);
}

TEST_CASE("round trip is the identity on irreducible combinations") {
    RepElt mixed{{{3, 0}, quantum_two()}, {{1, 1}, Laurent(-1)}, {{0, 0}, Laurent::v(-2)}};
    CHECK(monomial_to_irrep(irrep_to_monomial(mixed)) == mixed);
}

TEST_CASE("theta transport") {
    // the two generator images
    CHECK(phi_tilde_theta({1, 0}) == M(1, 0, Laurent::term(-1, 1)));
    CHECK(phi_tilde_theta({0, 1}) == M(1, 1));
    CHECK(phi_tilde_theta({0, 0}) == M(0, 0));
    // multiplicative over weight addition, matching theta additivity
    std::vector<std::pair<Weight, Weight>> pairs{
        {{1, 0}, {0, 1}}, {{-1, 0}, {1, 0}}, {{1, -1}, {-1, 1}}, {{2, 1}, {-1, -3}},
    };
    for (const auto& [x, y] : pairs)
        CHECK(mon_multiply(phi_tilde_theta(x), phi_tilde_theta(y)) ==
              phi_tilde_theta(x + y));
    // explicit value: a x1 + b x2 -> (-1)^a v^a theta'_{(a+b) xi} eps^(b mod 2)
    CHECK(phi_tilde_theta({2, 1}) == M(3, 1, Laurent::v(2)));
    CHECK(phi_tilde_theta({-1, 2}) == M(1, 0, Laurent::term(-1, -1)));
}

TEST_CASE("coordinate insertion cancels exactly") {
    RepElt u;
    add_coord(u, 2, 1, quantum_two());
    add_coord(u, 2, 1, -quantum_two());
    CHECK(u.empty());
    add_coord(u, 1, 0, Laurent(5));
    add_coord(u, 1, 0, Laurent(-2));
    CHECK(u == V(1, 0, Laurent(3)));
    CHECK(rep_str(RepElt{}) == "0");
}

}  // TEST_SUITE
