#pragma once

// Exact arithmetic in Z[v, v^{-1}] where v^2 = q.
//
// All Hecke coefficients live in this ring. Exponents are counted in v,
// so the element q^k is stored with exponent 2k and half-integral powers
// of q are odd v-exponents. Display uses the q-convention: even exponents
// print as integral powers of q, odd ones as q^(k/2).

#include <iosfwd>
#include <map>
#include <string>

#include "b2hecke/errors.hpp"

namespace b2hecke {

class Laurent {
public:
    Laurent() = default;
    Laurent(long long c) {
        if (c != 0) c_[0] = c;
    }
    static Laurent term(long long coeff, int vexp) {
        Laurent r;
        if (coeff != 0) r.c_[vexp] = coeff;
        return r;
    }
    static Laurent v(int vexp = 1) { return term(1, vexp); }

    bool is_zero() const { return c_.empty(); }
    // coefficient of v^vexp
    long long coeff(int vexp) const {
        auto it = c_.find(vexp);
        return it == c_.end() ? 0 : it->second;
    }
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    const std::map<int, long long>& terms() const { return c_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;

    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // v -> v^{-1} (the bar involution)
    Laurent bar() const;
    // exact division; throws NotDivisible if the quotient does not exist in Z[v,v^{-1}]
    Laurent divide_exact(const Laurent& d) const;

    std::string str() const;

private:
    std::map<int, long long> c_;  // v-exponent -> nonzero coefficient
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

// [2] = v + v^{-1}, the quantum integer that normalizes the cell quotient
Laurent quantum_two();

}  // namespace b2hecke
