#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace conjprod::numeric {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1u) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1u;
    }
    return result;
}

/// Inverse of a modulo prime p (a must be nonzero mod p).
inline std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a, p - 2, p);
}

/// Prime factorisation by trial division, as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        std::uint64_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Smallest generator of the multiplicative group of F_p.
inline std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    const auto factors = factorize(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;
}

/// Exponent k with p^k == value, if value is a power of p.
inline std::optional<std::uint64_t> log_exact(std::uint64_t value, std::uint64_t p) {
    if (value == 0 || p < 2) return std::nullopt;
    std::uint64_t k = 0;
    while (value % p == 0) {
        value /= p;
        ++k;
    }
    if (value != 1) return std::nullopt;
    return k;
}

}  // namespace conjprod::numeric
