#include "plinear/ring/integer.hpp"

#include <array>

#include "plinear/errors.hpp"

namespace plinear {

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw Error("binomial: negative upper index");
    if (k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are deterministic for all n < 2^64.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Integer ipow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer mod_floor(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::uint64_t mod_floor_u64(const Integer& a, std::uint64_t m)
{
    Integer r = mod_floor(a, Integer(static_cast<unsigned long>(m)));
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m)
{
    Integer r;
    Integer aa(static_cast<unsigned long>(a % m));
    Integer mm(static_cast<unsigned long>(m));
    if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw Error("inv_mod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return r.get_ui();
}

std::int64_t to_int64(const Integer& a)
{
    if (!a.fits_slong_p())
        throw Error("integer " + a.get_str() + " does not fit in 64 bits");
    return a.get_si();
}

} // namespace plinear
