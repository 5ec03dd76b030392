#pragma once

#include <cstdint>

#include "egh/errors.hpp"

namespace egh {

// Arithmetic in the prime field F_p. Elements are canonical representatives
// in [0, p). p must fit in 31 bits so that products fit in a uint64_t.

inline constexpr std::uint32_t kMaxPrime = 0x7fffffffu;

inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p ? std::uint32_t(s - p) : std::uint32_t(s);
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t(std::uint64_t(a) * b % p);
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    std::uint32_t base = a % p;
    while (e) {
        if (e & 1) r = fp_mul(r, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

// Inverse via Fermat; p is prime by RingContext invariant.
inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw Error("division by zero in F_p");
    return fp_pow(a, p - 2, p);
}

// Canonical representative of a signed integer.
inline std::uint32_t fp_from_ll(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace egh
