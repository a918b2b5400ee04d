#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace plinear {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k) for non-negative n; zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// p^e as an exact integer.
Integer ipow(const Integer& base, unsigned long e);

/// Canonical representative in [0, m).
Integer mod_floor(const Integer& a, const Integer& m);

std::uint64_t mod_floor_u64(const Integer& a, std::uint64_t m);

/// a * b mod m without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    std::uint64_t s = a + b; // operands < m < 2^63
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return a >= b ? a - b : a + (m - b);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

/// Inverse of a modulo m; throws plinear::Error when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

std::int64_t to_int64(const Integer& a);

inline std::string to_string(const Integer& a) { return a.get_str(); }

} // namespace plinear
