#include "b2hecke/repring.hpp"

#include <cstdlib>

namespace b2hecke {

void add_coord(RepElt& u, int k, int p, const Laurent& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(k, p);
    auto [it, inserted] = u.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) u.erase(it);
    }
}

RepElt rf_multiply(const RepElt& u, const RepElt& v) {
    RepElt out;
    for (const auto& [ku, cu] : u) {
        for (const auto& [kv, cv] : v) {
            Laurent c = cu * cv;
            int p = (ku.second + kv.second) & 1;
            int m = ku.first, n = kv.first;
            for (int i = 0; i <= std::min(m, n); ++i) add_coord(out, m + n - 2 * i, p, c);
        }
    }
    return out;
}

MonElt mon_multiply(const MonElt& u, const MonElt& v) {
    MonElt out;
    for (const auto& [ku, cu] : u)
        for (const auto& [kv, cv] : v)
            add_coord(out, ku.first + kv.first, (ku.second + kv.second) & 1, cu * cv);
    return out;
}

MonElt irrep_to_monomial(const RepElt& u) {
    MonElt out;
    for (const auto& [key, c] : u) {
        auto [k, p] = key;
        if (k < 0) throw Error("negative highest weight in irreducible basis");
        for (int j = 0; j <= k; ++j) add_coord(out, k - 2 * j, p, c);
    }
    return out;
}

RepElt monomial_to_irrep(const MonElt& u0) {
    MonElt rest = u0;
    RepElt out;
    while (!rest.empty()) {
        int top = 0;
        for (const auto& [key, c] : rest) top = std::max(top, std::abs(key.first));
        for (int p = 0; p < 2; ++p) {
            Laurent cpos, cneg;
            if (auto it = rest.find({top, p}); it != rest.end()) cpos = it->second;
            if (auto it = rest.find({-top, p}); it != rest.end()) cneg = it->second;
            if (top > 0 && cpos != cneg)
                throw NotSymmetric("monomial element is not invariant under negation of weights");
            if (cpos.is_zero()) continue;
            add_coord(out, top, p, cpos);
            RepElt peel;
            add_coord(peel, top, p, cpos);
            MonElt expanded = irrep_to_monomial(peel);
            for (const auto& [key, c] : expanded) add_coord(rest, key.first, key.second, -c);
        }
        int new_top = 0;
        for (const auto& [key, c] : rest) new_top = std::max(new_top, std::abs(key.first));
        if (!rest.empty() && new_top >= top)
            throw Error("monomial peeling failed to make progress");
    }
    return out;
}

MonElt phi_tilde_theta(Weight x) {
    MonElt out;
    long long sign = (x.a % 2 != 0) ? -1 : 1;
    add_coord(out, x.a + x.b, ((x.b % 2) + 2) % 2, Laurent::term(sign, x.a));
    return out;
}

}  // namespace b2hecke
