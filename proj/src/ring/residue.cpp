#include "plinear/ring/residue.hpp"

#include "plinear/errors.hpp"

namespace plinear {

Modulus::Modulus(std::uint64_t p, unsigned e) : p_(p), e_(e)
{
    if (!is_prime(p))
        throw Error("modulus: " + std::to_string(p) + " is not prime");
    if (e == 0)
        throw Error("modulus: exponent must be positive");
    Integer m = ipow(Integer(static_cast<unsigned long>(p)), e);
    if (m >= ipow(Integer(2), 63))
        throw Error("modulus: p^r = " + m.get_str() + " exceeds 2^63");
    m_ = m.get_ui();
}

Residue::Residue(std::uint64_t value, const Modulus& mod) : v_(value % mod.value()), mod_(mod) {}

void Residue::check(const Residue& o) const
{
    if (!(mod_ == o.mod_))
        throw RingMismatch("residue moduli differ");
}

Residue& Residue::operator+=(const Residue& o)
{
    check(o);
    v_ = add_mod(v_, o.v_, mod_.value());
    return *this;
}

Residue& Residue::operator-=(const Residue& o)
{
    check(o);
    v_ = sub_mod(v_, o.v_, mod_.value());
    return *this;
}

Residue& Residue::operator*=(const Residue& o)
{
    check(o);
    v_ = mul_mod(v_, o.v_, mod_.value());
    return *this;
}

Residue Residue::inverse() const
{
    return {inv_mod(v_, mod_.value()), mod_, Raw{}};
}

} // namespace plinear
