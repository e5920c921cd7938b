#include "b2hecke/klbasis.hpp"

#include <string>

namespace b2hecke {

namespace {

Gen smallest_left_descent(const GroupElt& w) {
    uint8_t d = w.left_descents();
    if (d == 0) throw Error("element without left descent in canonical-basis recursion");
    return static_cast<Gen>((d & 1) ? 0 : ((d & 2) ? 1 : 2));
}

}  // namespace

const HeckeElt& KLTable::c_basis(const GroupElt& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    if (w.length() > budget_)
        throw BudgetExceeded("canonical basis requested beyond length budget " +
                             std::to_string(budget_));

    HeckeElt res(Basis::T);
    if (w.is_identity()) {
        res = HeckeElt::unit(Basis::T);
    } else if (w.omega_exp()) {
        res = t_mul_left_omega(c_basis(w.wprime_part()));
    } else {
        res = c_basis_from_descent(w, smallest_left_descent(w));
    }
    return cache_.emplace(w, std::move(res)).first->second;
}

HeckeElt KLTable::c_basis_from_descent(const GroupElt& w, Gen g) {
    GroupElt u = GroupElt::generator(g) * w;
    if (u.length() >= w.length()) throw Error("pivot is not a left descent");
    const HeckeElt& cu = c_basis(u);

    // C_g C_u with C_g = v^-1 (T_g + T_e).
    HeckeElt prod = t_mul_left_gen(g, cu);
    prod += cu;
    prod *= Laurent::v(-1);

    // Subtract mu(y,u) C_y over y < u with g a left descent of y.  Such y
    // necessarily appear in the support of C_u.
    GroupElt ge = GroupElt::generator(g);
    for (const auto& [y, cy] : cu.terms()) {
        if (y == u) continue;
        if ((ge * y).length() >= y.length()) continue;
        long long m = cy.coeff(-y.length() - 1);
        if (m != 0) prod -= Laurent(m) * c_basis(y);
    }
    return prod;
}

HeckeElt KLTable::c_basis_via(const GroupElt& w, Gen g) {
    if (w.is_identity() || w.omega_exp()) throw Error("c_basis_via expects a nonidentity element of the omega-free coset");
    return c_basis_from_descent(w, g);
}

Laurent KLTable::kl_polynomial(const GroupElt& y, const GroupElt& w) {
    if (!bruhat_leq(y, w)) return Laurent();
    return c_basis(w).coeff(y) * Laurent::v(w.length());
}

long long KLTable::mu(const GroupElt& y, const GroupElt& w) {
    if (!bruhat_leq(y, w)) return 0;
    return c_basis(w).coeff(y).coeff(-y.length() - 1);
}

long long KLTable::mu_tilde(const GroupElt& y, const GroupElt& w) {
    if (bruhat_leq(y, w)) return mu(y, w);
    if (bruhat_leq(w, y)) return mu(w, y);
    return 0;
}

HeckeElt KLTable::t_to_c(const HeckeElt& h) {
    if (h.basis() != Basis::T) throw BasisMismatch("t_to_c expects a T-basis element");
    HeckeElt rest = h;
    HeckeElt out(Basis::C);
    while (!rest.is_zero()) {
        const GroupElt* top = nullptr;
        for (const auto& [w, c] : rest.terms())
            if (top == nullptr || w.length() > top->length()) top = &w;
        GroupElt w = *top;
        Laurent a = rest.coeff(w) * Laurent::v(w.length());
        out.add_term(w, a);
        rest -= a * c_basis(w);
        if (!rest.coeff(w).is_zero()) throw Error("base change failed to clear top term");
    }
    return out;
}

HeckeElt KLTable::c_to_t(const HeckeElt& h) {
    if (h.basis() != Basis::C) throw BasisMismatch("c_to_t expects a C-basis element");
    HeckeElt out(Basis::T);
    for (const auto& [w, c] : h.terms()) out += c * c_basis(w);
    return out;
}

HeckeElt KLTable::c_multiply(const GroupElt& x, const GroupElt& y) {
    return t_to_c(t_mul(c_basis(x), c_basis(y)));
}

HeckeElt KLTable::c_mul(const HeckeElt& a, const HeckeElt& b) {
    return t_to_c(t_mul(c_to_t(a), c_to_t(b)));
}

}  // namespace b2hecke
