#pragma once

// The Hecke algebra of the extended affine Weyl group over Z[v, v^-1] with
// q = v^2.  Elements are sparse linear combinations of basis symbols indexed
// by group elements, tagged with the basis they are written in: T (standard)
// or C (canonical).  All arithmetic demands matching tags; conversion
// between the two bases lives in klbasis.hpp.
//
// The standard basis satisfies (T_g - q)(T_g + 1) = 0 for the generators
// g in {r, s, t}, T_w T_g = T_{wg} when the length goes up, and
// T_omega T_w = T_{omega w} unconditionally since omega has length zero.

#include <map>

#include "b2hecke/coxeter.hpp"
#include "b2hecke/errors.hpp"
#include "b2hecke/laurent.hpp"

namespace b2hecke {

enum class Basis : uint8_t { T, C };

inline char basis_char(Basis b) { return b == Basis::T ? 'T' : 'C'; }

class HeckeElt {
public:
    explicit HeckeElt(Basis b = Basis::T) : basis_(b) {}

    static HeckeElt unit(Basis b) { return basis_vector(b, GroupElt::identity()); }
    static HeckeElt basis_vector(Basis b, const GroupElt& w);

    Basis basis() const { return basis_; }
    bool is_zero() const { return c_.empty(); }
    size_t size() const { return c_.size(); }
    const std::map<GroupElt, Laurent>& terms() const { return c_; }

    Laurent coeff(const GroupElt& w) const;
    void add_term(const GroupElt& w, const Laurent& c);

    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    HeckeElt& operator*=(const Laurent& c);

    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
    friend HeckeElt operator*(HeckeElt a, const Laurent& c) { return a *= c; }
    friend HeckeElt operator*(const Laurent& c, HeckeElt a) { return a *= c; }
    HeckeElt operator-() const;

    bool operator==(const HeckeElt& o) const { return basis_ == o.basis_ && c_ == o.c_; }
    bool operator!=(const HeckeElt& o) const { return !(*this == o); }

private:
    Basis basis_;
    std::map<GroupElt, Laurent> c_;
};

// Right and left multiplication by the basis symbol of one generator or of
// omega, on T-basis elements.
HeckeElt t_mul_right_gen(const HeckeElt& h, Gen g);
HeckeElt t_mul_left_gen(Gen g, const HeckeElt& h);
HeckeElt t_mul_right_omega(const HeckeElt& h);
HeckeElt t_mul_left_omega(const HeckeElt& h);

// General product in the T basis, folding the right factor one letter at a
// time along reduced words.
HeckeElt t_mul(const HeckeElt& a, const HeckeElt& b);

// T_g^-1 = q^-1 T_g + (q^-1 - 1) T_e; T_omega^-1 = T_omega.
HeckeElt t_generator_inverse(Gen g);

// T_w^-1 for any w, accumulated from generator inverses along a reduced word.
HeckeElt t_inverse(const GroupElt& w);

// The bar involution: v -> v^-1 on coefficients, T_w -> (T_{w^-1})^-1.
HeckeElt bar_involution(const HeckeElt& h);

}  // namespace b2hecke
