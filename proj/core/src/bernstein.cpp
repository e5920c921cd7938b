#include "b2hecke/bernstein.hpp"

#include <algorithm>
#include <map>

namespace b2hecke {

GroupElt translation_element(Weight mu) {
    if (!mu.dominant()) throw NotDominant("translation_element needs a dominant weight");
    return GroupElt::translation(mu);
}

HeckeElt theta_decomposed(Weight xp, Weight xpp) {
    if (!xp.dominant() || !xpp.dominant())
        throw NotDominant("theta splitting parts must be dominant");
    GroupElt tp = GroupElt::translation(xp);
    GroupElt tpp = GroupElt::translation(xpp);
    HeckeElt pos = HeckeElt::basis_vector(Basis::T, tp) * Laurent::v(-tp.length());
    HeckeElt neg = t_inverse(tpp) * Laurent::v(tpp.length());
    return t_mul(pos, neg);
}

HeckeElt theta(Weight x) {
    thread_local std::map<Weight, HeckeElt> memo;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    Weight xp{std::max(x.a, 0), std::max(x.b, 0)};
    HeckeElt res = theta_decomposed(xp, xp - x);
    memo.emplace(x, res);
    return res;
}

HeckeElt z_element(Weight x) {
    if (!x.dominant()) throw NotDominant("z_element needs a dominant weight");
    HeckeElt out(Basis::T);
    for (Weight mu : orbit(x)) out += theta(mu);
    return out;
}

CentralElement s_element(Weight lambda) {
    if (!lambda.dominant()) throw NotDominant("s_element needs a dominant weight");
    HeckeElt out(Basis::T);
    for (const auto& [mu, d] : character(lambda))
        if (mu.dominant()) out += Laurent(d) * z_element(mu);
    return CentralElement{lambda, std::move(out)};
}

bool is_central(const HeckeElt& h) {
    for (Gen g : {Gen::r, Gen::s, Gen::t}) {
        HeckeElt tg = HeckeElt::basis_vector(Basis::T, GroupElt::generator(g));
        if (t_mul(h, tg) != t_mul(tg, h)) return false;
    }
    return t_mul_right_omega(h) == t_mul_left_omega(h);
}

std::vector<std::pair<Weight, long long>> central_product(Weight lambda, Weight mu) {
    auto decomposition = tensor_decompose(lambda, mu);
    HeckeElt lhs = t_mul(s_element(lambda).expansion, s_element(mu).expansion);
    HeckeElt rhs(Basis::T);
    for (const auto& [z, m] : decomposition) rhs += Laurent(m) * s_element(z).expansion;
    if (lhs != rhs)
        throw VerificationFailure("central product disagrees with the tensor decomposition for " +
                                  weight_str(lambda) + " times " + weight_str(mu));
    return decomposition;
}

}  // namespace b2hecke
