#include "b2hecke/laurent.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace b2hecke {

int Laurent::min_exp() const {
    if (c_.empty()) throw Error("min_exp of zero");
    return c_.begin()->first;
}

int Laurent::max_exp() const {
    if (c_.empty()) throw Error("max_exp of zero");
    return c_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = c;
        } else {
            it->second = chk_add(it->second, c);
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = chk_sub(0, c);
        } else {
            it->second = chk_sub(it->second, c);
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.c_) {
        for (const auto& [eb, cb] : b.c_) {
            int e = ea + eb;
            long long add = chk_mul(ca, cb);
            auto it = r.c_.find(e);
            if (it == r.c_.end()) {
                if (add != 0) r.c_[e] = add;
            } else {
                it->second = chk_add(it->second, add);
                if (it->second == 0) r.c_.erase(it);
            }
        }
    }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e] = chk_sub(0, c);
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
    if (d.is_zero()) throw NotDivisible("division by zero");
    if (is_zero()) return {};
    const int dtop = d.max_exp();
    const int dbot = d.min_exp();
    const long long dlead = d.c_.rbegin()->second;
    // an exact quotient has exponents in [min_exp - dbot, max_exp - dtop]
    const int qbot = min_exp() - dbot;
    Laurent rem = *this, quo;
    while (!rem.is_zero()) {
        int e = rem.max_exp() - dtop;
        long long lead = rem.c_.rbegin()->second;
        if (e < qbot || lead % dlead != 0)
            throw NotDivisible("quotient is not in Z[v,v^-1]");
        Laurent t = term(lead / dlead, e);
        quo += t;
        rem -= t * d;
    }
    return quo;
}

namespace {

// one monomial c*v^e rendered in the q-convention, without sign
std::string monomial_str(long long c, int e) {
    std::string body;
    if (e == 0) return std::to_string(c);
    if (e % 2 == 0) {
        int k = e / 2;
        body = (k == 1) ? "q" : "q^" + std::to_string(k);
    } else {
        body = "q^(" + std::to_string(e) + "/2)";
    }
    if (c == 1) return body;
    return std::to_string(c) + body;
}

}  // namespace

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    // descending v-exponent
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        long long c = it->second;
        if (first) {
            if (c < 0) out += "-";
            out += monomial_str(std::llabs(c), it->first);
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
            out += monomial_str(std::llabs(c), it->first);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

Laurent quantum_two() { return Laurent::term(1, 1) + Laurent::term(1, -1); }

}  // namespace b2hecke
