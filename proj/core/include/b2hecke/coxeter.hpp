#pragma once

// The extended affine Weyl group attached to the rank-two root datum in
// weights.hpp.  Elements are pairs (mu, u): the translation by the weight mu
// followed by the finite reflection u, composed as t_mu * u.  The group is
// generated by three involutions r, s, t (r affine, s and t the two finite
// simple reflections) together with a length-zero involution omega that
// normalizes {r, s, t}: conjugation by omega swaps r and t and fixes s.
//
// Length is computed geometrically: it equals the number of affine
// hyperplanes <x, beta^vee> = k (k an integer, beta a positive root)
// separating the fundamental alcove from its image.  Descents, reduced
// words, Bruhat order and length-graded enumeration are all derived from
// that one function.

#include <cstdint>
#include <string>
#include <vector>

#include "b2hecke/errors.hpp"
#include "b2hecke/weights.hpp"

namespace b2hecke {

enum class Gen : uint8_t { r = 0, s = 1, t = 2 };

inline char gen_char(Gen g) { return "rst"[static_cast<int>(g)]; }

class GroupElt {
public:
    GroupElt() : mu_{0, 0}, u_(W0::e) {}

    static GroupElt identity() { return GroupElt(); }
    static GroupElt generator(Gen g);
    static GroupElt omega();
    // The translation t_mu (length-additive on dominant weights).
    static GroupElt translation(Weight mu) { return GroupElt(mu, W0::e); }

    Weight translation_part() const { return mu_; }
    int finite_part() const { return u_; }

    bool is_identity() const { return mu_ == Weight{0, 0} && u_ == W0::e; }

    // Which coset of the index-two subgroup generated by r, s, t the element
    // lies in: 0 for the subgroup itself, 1 for the omega coset.
    int omega_exp() const { return mu_.b & 1; }
    // The omega-free factor w' in w = omega^p * w'.
    GroupElt wprime_part() const;

    GroupElt operator*(const GroupElt& o) const;
    GroupElt inverse() const;

    bool operator==(const GroupElt& o) const { return mu_ == o.mu_ && u_ == o.u_; }
    bool operator!=(const GroupElt& o) const { return !(*this == o); }
    bool operator<(const GroupElt& o) const;

    int length() const;

    // Descent masks over {r, s, t}: bit (int)g is set iff multiplying by g on
    // that side shortens the element.
    uint8_t left_descents() const;
    uint8_t right_descents() const;
    bool has_left_descent(Gen g) const { return left_descents() & (1u << static_cast<int>(g)); }
    bool has_right_descent(Gen g) const { return right_descents() & (1u << static_cast<int>(g)); }

    // Canonical reduced word of the omega-free part, letters 'r'/'s'/'t',
    // chosen by repeatedly taking the smallest left descent (r < s < t).
    std::string word() const;

private:
    GroupElt(Weight mu, int u) : mu_(mu), u_(static_cast<uint8_t>(u)) {}

    Weight mu_;
    uint8_t u_;
};

// Bruhat order.  Elements in different omega cosets are incomparable; within
// a coset the order is the usual one on the subgroup generated by r, s, t.
bool bruhat_leq(const GroupElt& y, const GroupElt& w);

// All elements of length <= max_len, optionally including the omega coset,
// sorted by (length, word, omega exponent).  The layer-by-layer walk grows
// quadratically with max_len, so requests beyond the budget are rejected
// with BudgetExceeded rather than allowed to run away.
std::vector<GroupElt> enumerate_elements(int max_len, bool include_omega = false,
                                         int budget = 64);

// Parse-free product of a letter string such as "rstsr" (left-to-right).
GroupElt word_to_element(const std::string& letters);

}  // namespace b2hecke
