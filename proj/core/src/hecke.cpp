#include "b2hecke/hecke.hpp"

namespace b2hecke {

namespace {

Laurent q_poly() { return Laurent::term(1, 2); }
Laurent q_minus_one() { return Laurent::term(1, 2) + Laurent(-1); }

void require_basis(const HeckeElt& h, Basis b, const char* who) {
    if (h.basis() != b) throw BasisMismatch(std::string(who) + ": wrong basis tag");
}

}  // namespace

HeckeElt HeckeElt::basis_vector(Basis b, const GroupElt& w) {
    HeckeElt h(b);
    h.add_term(w, Laurent(1));
    return h;
}

Laurent HeckeElt::coeff(const GroupElt& w) const {
    auto it = c_.find(w);
    return it == c_.end() ? Laurent() : it->second;
}

void HeckeElt::add_term(const GroupElt& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    if (basis_ != o.basis_) throw BasisMismatch();
    for (const auto& [w, c] : o.c_) add_term(w, c);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
    if (basis_ != o.basis_) throw BasisMismatch();
    for (const auto& [w, c] : o.c_) add_term(w, -c);
    return *this;
}

HeckeElt& HeckeElt::operator*=(const Laurent& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [w, x] : c_) x *= c;
    return *this;
}

HeckeElt HeckeElt::operator-() const {
    HeckeElt out(basis_);
    for (const auto& [w, c] : c_) out.c_.emplace(w, -c);
    return out;
}

HeckeElt t_mul_right_gen(const HeckeElt& h, Gen g) {
    require_basis(h, Basis::T, "t_mul_right_gen");
    HeckeElt out(Basis::T);
    GroupElt ge = GroupElt::generator(g);
    for (const auto& [w, c] : h.terms()) {
        GroupElt wg = w * ge;
        if (wg.length() > w.length()) {
            out.add_term(wg, c);
        } else {
            out.add_term(wg, c * q_poly());
            out.add_term(w, c * q_minus_one());
        }
    }
    return out;
}

HeckeElt t_mul_left_gen(Gen g, const HeckeElt& h) {
    require_basis(h, Basis::T, "t_mul_left_gen");
    HeckeElt out(Basis::T);
    GroupElt ge = GroupElt::generator(g);
    for (const auto& [w, c] : h.terms()) {
        GroupElt gw = ge * w;
        if (gw.length() > w.length()) {
            out.add_term(gw, c);
        } else {
            out.add_term(gw, c * q_poly());
            out.add_term(w, c * q_minus_one());
        }
    }
    return out;
}

HeckeElt t_mul_right_omega(const HeckeElt& h) {
    require_basis(h, Basis::T, "t_mul_right_omega");
    HeckeElt out(Basis::T);
    GroupElt om = GroupElt::omega();
    for (const auto& [w, c] : h.terms()) out.add_term(w * om, c);
    return out;
}

HeckeElt t_mul_left_omega(const HeckeElt& h) {
    require_basis(h, Basis::T, "t_mul_left_omega");
    HeckeElt out(Basis::T);
    GroupElt om = GroupElt::omega();
    for (const auto& [w, c] : h.terms()) out.add_term(om * w, c);
    return out;
}

HeckeElt t_mul(const HeckeElt& a, const HeckeElt& b) {
    require_basis(a, Basis::T, "t_mul");
    require_basis(b, Basis::T, "t_mul");
    HeckeElt out(Basis::T);
    for (const auto& [y, cy] : b.terms()) {
        HeckeElt acc = a;
        if (y.omega_exp()) acc = t_mul_right_omega(acc);
        for (char letter : y.word()) {
            Gen g = letter == 'r' ? Gen::r : (letter == 's' ? Gen::s : Gen::t);
            acc = t_mul_right_gen(acc, g);
        }
        acc *= cy;
        out += acc;
    }
    return out;
}

HeckeElt t_generator_inverse(Gen g) {
    HeckeElt out(Basis::T);
    out.add_term(GroupElt::generator(g), Laurent::term(1, -2));
    out.add_term(GroupElt::identity(), Laurent::term(1, -2) + Laurent(-1));
    return out;
}

HeckeElt t_inverse(const GroupElt& w) {
    // (T_omega^p T_{g_1} ... T_{g_k})^-1 = T_{g_k}^-1 ... T_{g_1}^-1 T_omega^p
    HeckeElt out = HeckeElt::unit(Basis::T);
    std::string letters = w.word();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        Gen g = *it == 'r' ? Gen::r : (*it == 's' ? Gen::s : Gen::t);
        out = t_mul(out, t_generator_inverse(g));
    }
    if (w.omega_exp()) out = t_mul_right_omega(out);
    return out;
}

HeckeElt bar_involution(const HeckeElt& h) {
    require_basis(h, Basis::T, "bar_involution");
    HeckeElt out(Basis::T);
    for (const auto& [w, c] : h.terms()) out += c.bar() * t_inverse(w.inverse());
    return out;
}

}  // namespace b2hecke
