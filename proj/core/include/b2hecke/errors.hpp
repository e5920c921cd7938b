#pragma once

// Error types shared across the library, plus checked 64-bit arithmetic.
// Every computation here is exact; a coefficient overflow is a hard error,
// never a silent wraparound.

#include <stdexcept>
#include <string>

namespace b2hecke {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& msg = "integer overflow") : Error(msg) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg = "exact division failed") : Error(msg) {}
};

struct BasisMismatch : Error {
    explicit BasisMismatch(const std::string& msg = "basis mismatch") : Error(msg) {}
};

struct NotDominant : Error {
    explicit NotDominant(const std::string& msg = "weight is not dominant") : Error(msg) {}
};

struct NotInIdeal : Error {
    explicit NotInIdeal(const std::string& msg = "element lies outside the ideal") : Error(msg) {}
};

struct NotInChain : Error {
    explicit NotInChain(const std::string& msg = "index is not of the form rt(srt)^m w^p") : Error(msg) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& msg = "monomial element is not S2-symmetric") : Error(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg = "length budget exceeded") : Error(msg) {}
};

struct VerificationFailure : Error {
    explicit VerificationFailure(const std::string& msg = "exact verification failed") : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg = "parse error") : Error(msg) {}
};

inline long long chk_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("overflow in addition");
    return r;
}

inline long long chk_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("overflow in subtraction");
    return r;
}

inline long long chk_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("overflow in multiplication");
    return r;
}

}  // namespace b2hecke
