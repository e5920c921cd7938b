#include "b2hecke/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace b2hecke {

namespace {

// The fundamental alcove is an open simplex; we track its barycenter-like
// interior point (-4/20, -6/20) in x-coordinates.  None of the four positive
// coroot pairings of any point in its orbit is an integer, so separating
// hyperplanes can be counted with strict inequalities only.
constexpr Weight kBasePoint{-4, -6};  // in units of 1/20
constexpr int kScale = 20;

long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// Number of integer multiples of kScale strictly between p and q.
long long walls_between(long long p, long long q) {
    if (p > q) std::swap(p, q);
    if (p % kScale == 0 || q % kScale == 0) throw Error("alcove point on a wall");
    return floordiv(q, kScale) - floordiv(p, kScale);
}

// Pairings of a point with the four positive coroots.
std::array<long long, 4> coroot_pairings(Weight x) {
    long long a = x.a, b = x.b;
    return {a, b, 2 * a + b, a + b};
}

}  // namespace

GroupElt GroupElt::generator(Gen g) {
    switch (g) {
        case Gen::r: return GroupElt({-1, 0}, W0::sts);
        case Gen::s: return GroupElt({0, 0}, W0::s);
        case Gen::t: return GroupElt({0, 0}, W0::t);
    }
    throw Error("unknown generator");
}

GroupElt GroupElt::omega() { return GroupElt({0, -1}, W0::tst); }

GroupElt GroupElt::operator*(const GroupElt& o) const {
    return GroupElt(mu_ + W0::act(u_, o.mu_), W0::mul(u_, o.u_));
}

GroupElt GroupElt::inverse() const {
    int ui = W0::inverse(u_);
    return GroupElt(-W0::act(ui, mu_), ui);
}

bool GroupElt::operator<(const GroupElt& o) const {
    return std::tie(mu_.a, mu_.b, u_) < std::tie(o.mu_.a, o.mu_.b, o.u_);
}

GroupElt GroupElt::wprime_part() const {
    return omega_exp() ? omega() * *this : *this;
}

int GroupElt::length() const {
    Weight image = W0::act(u_, kBasePoint) + kScale * mu_;
    auto from = coroot_pairings(kBasePoint);
    auto to = coroot_pairings(image);
    long long total = 0;
    for (int i = 0; i < 4; ++i) total += walls_between(from[i], to[i]);
    if (total > INT32_MAX) throw OverflowError();
    return static_cast<int>(total);
}

uint8_t GroupElt::left_descents() const {
    uint8_t mask = 0;
    int len = length();
    for (int g = 0; g < 3; ++g)
        if ((generator(static_cast<Gen>(g)) * *this).length() < len) mask |= (1u << g);
    return mask;
}

uint8_t GroupElt::right_descents() const {
    uint8_t mask = 0;
    int len = length();
    for (int g = 0; g < 3; ++g)
        if ((*this * generator(static_cast<Gen>(g))).length() < len) mask |= (1u << g);
    return mask;
}

std::string GroupElt::word() const {
    GroupElt w = wprime_part();
    std::string out;
    int len = w.length();
    while (!w.is_identity()) {
        uint8_t d = w.left_descents();
        if (d == 0) throw Error("nonidentity element without left descent");
        int g = (d & 1) ? 0 : ((d & 2) ? 1 : 2);
        out.push_back(gen_char(static_cast<Gen>(g)));
        w = generator(static_cast<Gen>(g)) * w;
        if (w.length() != --len) throw Error("length bookkeeping failure in word()");
    }
    return out;
}

namespace {

bool bruhat_leq_impl(const GroupElt& y, const GroupElt& w,
                     std::map<std::pair<GroupElt, GroupElt>, bool>& memo) {
    if (y == w) return true;
    if (y.length() >= w.length()) return false;
    auto key = std::make_pair(y, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    uint8_t d = w.left_descents();
    if (d == 0) throw Error("nonidentity element without left descent");
    Gen g = static_cast<Gen>((d & 1) ? 0 : ((d & 2) ? 1 : 2));
    GroupElt gw = GroupElt::generator(g) * w;
    GroupElt gy = GroupElt::generator(g) * y;
    bool res = (gy.length() < y.length()) ? bruhat_leq_impl(gy, gw, memo)
                                          : bruhat_leq_impl(y, gw, memo);
    memo[key] = res;
    return res;
}

}  // namespace

bool bruhat_leq(const GroupElt& y, const GroupElt& w) {
    if (y.omega_exp() != w.omega_exp()) return false;
    thread_local std::map<std::pair<GroupElt, GroupElt>, bool> memo;
    return bruhat_leq_impl(y.wprime_part(), w.wprime_part(), memo);
}

std::vector<GroupElt> enumerate_elements(int max_len, bool include_omega, int budget) {
    if (max_len > budget)
        throw BudgetExceeded("enumeration length " + std::to_string(max_len) +
                             " exceeds budget " + std::to_string(budget));
    if (max_len < 0) return {};
    std::vector<GroupElt> layer{GroupElt::identity()};
    std::vector<GroupElt> all{GroupElt::identity()};
    std::set<GroupElt> seen{GroupElt::identity()};
    for (int l = 1; l <= max_len; ++l) {
        std::vector<GroupElt> next;
        for (const auto& w : layer) {
            for (int g = 0; g < 3; ++g) {
                GroupElt wg = w * GroupElt::generator(static_cast<Gen>(g));
                if (wg.length() == l && seen.insert(wg).second) next.push_back(wg);
            }
        }
        layer = std::move(next);
        all.insert(all.end(), layer.begin(), layer.end());
    }
    if (include_omega) {
        const size_t n = all.size();
        for (size_t i = 0; i < n; ++i) all.push_back(GroupElt::omega() * all[i]);
    }
    std::vector<std::tuple<int, std::string, int, GroupElt>> keyed;
    keyed.reserve(all.size());
    for (const auto& w : all) keyed.emplace_back(w.length(), w.word(), w.omega_exp(), w);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) {
                  return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x)) <
                         std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y));
              });
    std::vector<GroupElt> out;
    out.reserve(keyed.size());
    for (const auto& k : keyed) out.push_back(std::get<3>(k));
    return out;
}

GroupElt word_to_element(const std::string& letters) {
    GroupElt w = GroupElt::identity();
    for (char c : letters) {
        switch (c) {
            case 'r': w = w * GroupElt::generator(Gen::r); break;
            case 's': w = w * GroupElt::generator(Gen::s); break;
            case 't': w = w * GroupElt::generator(Gen::t); break;
            default: throw ParseError(std::string("bad generator letter '") + c + "'");
        }
    }
    return w;
}

}  // namespace b2hecke
