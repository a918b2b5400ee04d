#pragma once

#include <cstdint>
#include <string>

#include "plinear/ring/integer.hpp"

namespace plinear {

/// The ring Z/p^e. Only moduli below 2^63 are representable.
class Modulus {
public:
    Modulus() = default;

    /// Throws plinear::Error if p is not prime, e == 0, or p^e >= 2^63.
    Modulus(std::uint64_t p, unsigned e);

    std::uint64_t prime() const noexcept { return p_; }
    unsigned exponent() const noexcept { return e_; }
    std::uint64_t value() const noexcept { return m_; }

    std::uint64_t reduce(const Integer& a) const { return mod_floor_u64(a, m_); }
    std::uint64_t reduce(std::int64_t a) const noexcept
    {
        std::int64_t r = a % static_cast<std::int64_t>(m_);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m_) : r);
    }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::uint64_t p_ = 0;
    unsigned e_ = 0;
    std::uint64_t m_ = 0;
};

/// An element of Z/p^e. Binary operations require equal moduli.
class Residue {
public:
    Residue() = default;
    Residue(std::uint64_t value, const Modulus& mod);
    Residue(const Integer& value, const Modulus& mod) : v_(mod.reduce(value)), mod_(mod) {}

    std::uint64_t value() const noexcept { return v_; }
    const Modulus& modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Residue& operator+=(const Residue& o);
    Residue& operator-=(const Residue& o);
    Residue& operator*=(const Residue& o);
    Residue operator-() const noexcept { return {v_ == 0 ? 0 : mod_.value() - v_, mod_, Raw{}}; }

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

    /// Throws unless gcd(value, p) == 1.
    Residue inverse() const;

    friend bool operator==(const Residue& a, const Residue& b)
    {
        return a.mod_ == b.mod_ && a.v_ == b.v_;
    }

    std::string to_string() const { return std::to_string(v_); }

private:
    struct Raw {};
    Residue(std::uint64_t v, const Modulus& m, Raw) noexcept : v_(v), mod_(m) {}
    void check(const Residue& o) const;

    std::uint64_t v_ = 0;
    Modulus mod_;
};

// Coefficient-ring hooks used by the generic polynomial containers.
inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_zero(const Residue& a) { return a.is_zero(); }
inline Integer zero_like(const Integer&) { return 0; }
inline Residue zero_like(const Residue& a) { return Residue(std::uint64_t{0}, a.modulus()); }
inline void add_product(Integer& acc, const Integer& a, const Integer& b)
{
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void add_product(Residue& acc, const Residue& a, const Residue& b) { acc += a * b; }
inline std::string coeff_to_string(const Integer& a) { return a.get_str(); }
inline std::string coeff_to_string(const Residue& a) { return a.to_string(); }

} // namespace plinear
