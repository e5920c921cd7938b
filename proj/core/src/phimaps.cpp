#include "b2hecke/phimaps.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "b2hecke/bernstein.hpp"
#include "b2hecke/errors.hpp"
#include "b2hecke/textio.hpp"

namespace b2hecke {

namespace {

// Shared reader for quotient coordinates: parse each index as a chain
// element, optionally dividing every coefficient by a fixed unit.
RepElt chain_coords_to_rep(const std::map<GroupElt, Laurent>& coords,
                           const Laurent* divisor) {
    RepElt out;
    for (const auto& [w, c] : coords) {
        auto idx = parse_chain_index(w);
        if (!idx)
            throw NotInChain("coordinate index " + element_str(w) +
                             " is not of the form rt(srt)^m w^p");
        add_coord(out, idx->first, idx->second, divisor ? c.divide_exact(*divisor) : c);
    }
    return out;
}

std::string weight_label(Weight lambda) {
    return "(" + std::to_string(lambda.a) + "," + std::to_string(lambda.b) + ")";
}

std::string descent_set_str(uint8_t mask) {
    std::string out = "{";
    for (int g = 0; g < 3; ++g) {
        if (!(mask & (1u << g))) continue;
        if (out.size() > 1) out += ",";
        out += gen_char(static_cast<Gen>(g));
    }
    return out + "}";
}

}  // namespace

RepElt phi1(const std::map<GroupElt, Laurent>& coords) {
    const Laurent two_sq = quantum_two() * quantum_two();
    return chain_coords_to_rep(coords, &two_sq);
}

RepElt phi_s(Weight lambda) {
    if (!lambda.dominant()) throw NotDominant("phi_s needs a dominant weight");
    MonElt acc;
    for (const auto& [mu, d] : character(lambda))
        for (const auto& [kp, c] : phi_tilde_theta(mu))
            add_coord(acc, kp.first, kp.second, Laurent(d) * c);
    return monomial_to_irrep(acc);
}

namespace {

// Characters of the two fundamental weights generate the character ring as a
// polynomial ring; char_polynomial(lambda) is the unique f with
// ch(lambda) = f(ch(x1), ch(x2)), found by peeling the product character.
using XYPoly = std::map<std::pair<int, int>, long long>;

std::map<Weight, long long> convolve(const std::map<Weight, long long>& u,
                                     const std::map<Weight, long long>& v) {
    std::map<Weight, long long> r;
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v) {
            auto it = r.find(wu + wv);
            long long add = chk_mul(cu, cv);
            if (it == r.end()) {
                if (add != 0) r[wu + wv] = add;
            } else {
                it->second = chk_add(it->second, add);
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

XYPoly char_polynomial(Weight lambda, std::map<Weight, XYPoly>& memo) {
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    XYPoly f;
    if (lambda.a == 0 && lambda.b == 0) {
        f[{0, 0}] = 1;
    } else {
        std::map<Weight, long long> prod{{Weight{0, 0}, 1}};
        const auto ch1 = character(kX1);
        const auto ch2 = character(kX2);
        for (int i = 0; i < lambda.a; ++i) prod = convolve(prod, ch1);
        for (int j = 0; j < lambda.b; ++j) prod = convolve(prod, ch2);
        f[{lambda.a, lambda.b}] = 1;
        for (const auto& [mu, n] : peel_character(std::move(prod))) {
            if (mu == lambda) {
                if (n != 1) throw Error("product character has top multiplicity != 1");
                continue;
            }
            for (const auto& [ij, c] : char_polynomial(mu, memo)) {
                auto it = f.find(ij);
                long long add = chk_mul(n, c);
                if (it == f.end()) {
                    f[ij] = chk_sub(0, add);
                } else {
                    it->second = chk_sub(it->second, add);
                    if (it->second == 0) f.erase(it);
                }
            }
        }
    }
    memo[lambda] = f;
    return f;
}

RepElt rep_scale(const RepElt& u, const Laurent& c) {
    RepElt out;
    for (const auto& [kp, cc] : u) add_coord(out, kp.first, kp.second, c * cc);
    return out;
}

}  // namespace

RepElt phi_s_via_generators(Weight lambda, KLTable& tab, CellClassifier& cells) {
    if (!lambda.dominant()) throw NotDominant("phi_s_via_generators needs a dominant weight");
    // base images straight out of the Hecke algebra, no rescaling: the
    // quotient coordinates of C_{rt} S_{x_i} are the coefficient tables
    RepElt ximg = chain_coords_to_rep(
        project_to_quotient(crt_s_product(kX1, true, tab, cells), cells), nullptr);
    RepElt yimg = chain_coords_to_rep(
        project_to_quotient(crt_s_product(kX2, true, tab, cells), cells), nullptr);

    thread_local std::map<Weight, XYPoly> memo;
    XYPoly f = char_polynomial(lambda, memo);

    int maxi = 0, maxj = 0;
    for (const auto& [ij, c] : f) {
        (void)c;
        maxi = std::max(maxi, ij.first);
        maxj = std::max(maxj, ij.second);
    }
    const RepElt one{{{0, 0}, Laurent(1)}};
    std::vector<RepElt> xpow{one}, ypow{one};
    for (int i = 1; i <= maxi; ++i) xpow.push_back(rf_multiply(xpow.back(), ximg));
    for (int j = 1; j <= maxj; ++j) ypow.push_back(rf_multiply(ypow.back(), yimg));

    RepElt acc;
    for (const auto& [ij, c] : f) {
        RepElt term = rep_scale(rf_multiply(xpow[ij.first], ypow[ij.second]), Laurent(c));
        for (const auto& [kp, cc] : term) add_coord(acc, kp.first, kp.second, cc);
    }
    return acc;
}

HeckeElt crt_s_product(Weight lambda, bool mod_c0, KLTable& tab, CellClassifier& cells) {
    if (!lambda.dominant()) throw NotDominant("crt_s_product needs a dominant weight");
    const HeckeElt& crt = tab.c_basis(chain_element(0, 0));
    HeckeElt prod = tab.t_to_c(t_mul(crt, s_element(lambda).expansion));
    return mod_c0 ? reduce_mod_c0(prod, cells) : prod;
}

VerifyReport verify_fundamental_products(KLTable& tab, CellClassifier& cells) {
    VerifyReport rep;
    rep.name = "fundamental crt-s products";

    HeckeElt lhs1 = crt_s_product(kX1, false, tab, cells);
    HeckeElt rhs1(Basis::C);
    rhs1 += HeckeElt::basis_vector(Basis::C, word_to_element("rststr"));
    rhs1 += HeckeElt::basis_vector(Basis::C, word_to_element("tsrsrt"));
    rhs1 -= quantum_two() * HeckeElt::basis_vector(Basis::C, chain_element(1, 0));
    rhs1 += HeckeElt::basis_vector(Basis::C, chain_element(0, 0));
    rep.add({"C[rt]·S(1,0), closed form", lhs1 == rhs1, hecke_str(lhs1), hecke_str(rhs1)});

    HeckeElt lhs2 = crt_s_product(kX2, false, tab, cells);
    HeckeElt inner(Basis::C);
    inner += HeckeElt::basis_vector(Basis::C, chain_element(1, 0));
    inner -= quantum_two() * HeckeElt::basis_vector(Basis::C, chain_element(0, 0));
    HeckeElt rhs2 = tab.t_to_c(t_mul_right_omega(tab.c_to_t(inner)));
    rep.add({"C[rt]·S(0,1), closed form", lhs2 == rhs2, hecke_str(lhs2), hecke_str(rhs2)});
    return rep;
}

VerifyReport verify_chain_product(int m, int n, KLTable& tab, CellClassifier& cells) {
    if (m < 1 || n < 1) throw Error("chain product check needs m, n >= 1");
    VerifyReport rep;
    rep.name = "chain product (" + std::to_string(m) + "," + std::to_string(n) + ")";

    HeckeElt prod = tab.c_multiply(chain_element(m, 0), chain_element(n, 0));
    HeckeElt lhs = reduce_mod_c0(prod, cells);
    rep.note = "discarded a=4 part: " + hecke_str(prod - lhs);

    const Laurent two_sq = quantum_two() * quantum_two();
    HeckeElt rhs(Basis::C);
    for (int i = 0; i <= std::min(m, n); ++i)
        rhs += two_sq * HeckeElt::basis_vector(Basis::C, chain_element(m + n - 2 * i, 0));
    rep.add({"product mod a=4 ideal", lhs == rhs, hecke_str(lhs), hecke_str(rhs)});
    return rep;
}

VerifyReport verify_crt_s_expansion(Weight lambda, KLTable& tab, CellClassifier& cells) {
    VerifyReport rep;
    rep.name = "crt-s expansion " + weight_label(lambda);

    HeckeElt full = crt_s_product(lambda, false, tab, cells);
    HeckeElt lhs = reduce_mod_c0(full, cells);
    rep.note = "discarded a=4 part: " + hecke_str(full - lhs);

    HeckeElt rhs(Basis::C);
    for (const auto& [kp, c] : phi_s(lambda))
        rhs += c * HeckeElt::basis_vector(Basis::C, chain_element(kp.first, kp.second));
    rep.add({"coefficient table vs product", lhs == rhs, hecke_str(lhs), hecke_str(rhs)});
    return rep;
}

VerifyReport verify_quotient_support(Weight lambda, KLTable& tab, CellClassifier& cells) {
    VerifyReport rep;
    rep.name = "quotient support " + weight_label(lambda);

    constexpr uint8_t rt_mask =
        (1u << static_cast<int>(Gen::r)) | (1u << static_cast<int>(Gen::t));
    HeckeElt reduced = crt_s_product(lambda, true, tab, cells);
    for (const auto& [w, c] : reduced.terms()) {
        (void)c;
        bool descents_ok =
            w.left_descents() == rt_mask && w.right_descents() == rt_mask;
        auto idx = parse_chain_index(w);
        std::string shape = idx ? "rt(srt)^" + std::to_string(idx->first) +
                                      (idx->second ? "·w" : "")
                                : "not a chain element";
        rep.add({element_str(w), descents_ok && idx.has_value(),
                 "L=" + descent_set_str(w.left_descents()) +
                     " R=" + descent_set_str(w.right_descents()),
                 shape});
    }
    if (reduced.is_zero()) rep.note = "reduction is empty";
    return rep;
}

VerifyReport verify_phi1_homomorphism(int max_mn, KLTable& tab, CellClassifier& cells) {
    VerifyReport rep;
    rep.name = "quotient algebra homomorphism";
    for (int m = 0; m <= max_mn; ++m)
        for (int n = 0; n <= max_mn; ++n)
            for (int p = 0; p < 2; ++p)
                for (int pp = 0; pp < 2; ++pp) {
                    HeckeElt prod =
                        tab.c_multiply(chain_element(m, p), chain_element(n, pp));
                    RepElt img = phi1(project_to_quotient(prod, cells));
                    RepElt expect = rf_multiply(RepElt{{{m, p}, Laurent(1)}},
                                                RepElt{{{n, pp}, Laurent(1)}});
                    std::string label = "image of (" + std::to_string(m) + "," +
                                        std::to_string(p) + ")x(" + std::to_string(n) +
                                        "," + std::to_string(pp) + ")";
                    rep.add({label, img == expect, rep_str(img), rep_str(expect)});
                }
    return rep;
}

MuScanReport mu_scan(int max_len, KLTable& tab, CellClassifier& cells) {
    MuScanReport rep;
    rep.max_len = max_len;
    constexpr uint8_t st_mask =
        (1u << static_cast<int>(Gen::s)) | (1u << static_cast<int>(Gen::t));

    std::vector<GroupElt> ys, ws;
    for (const auto& w : enumerate_elements(max_len, true, tab.budget())) {
        if ((w.left_descents() & st_mask) || (w.right_descents() & st_mask)) continue;
        int a = cells.a_value(w);
        if (a == 4)
            ys.push_back(w);
        else if (a == 1 || a == 2)
            ws.push_back(w);
    }
    for (const auto& y : ys)
        for (const auto& w : ws) {
            int gap = w.length() - y.length();
            if (gap < 1 || gap > 3) continue;
            if (y.omega_exp() != w.omega_exp()) continue;
            if (!bruhat_leq(y, w)) continue;
            ++rep.pairs_scanned;
            MuScanRow row{y, w, tab.mu(y, w), gap % 2 == 0};
            rep.rows.push_back(row);
            if (row.mu != 0) rep.counterexamples.push_back(row);
        }
    return rep;
}

}  // namespace b2hecke
