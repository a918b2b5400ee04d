#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "plinear/errors.hpp"
#include "plinear/ring/integer.hpp"
#include "plinear/ring/residue.hpp"

namespace plinear {

/// Dense univariate polynomial in t over C (Integer or Residue).
/// Trailing zeros are always trimmed; the zero polynomial has degree -1.
template <typename C>
class TPoly {
public:
    using coeff_type = C;

    TPoly() = default;

    explicit TPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static TPoly constant(C c) { return TPoly(std::vector<C>{std::move(c)}); }

    static TPoly monomial(C c, std::size_t degree)
    {
        std::vector<C> v(degree + 1, zero_like(c));
        v[degree] = std::move(c);
        return TPoly(std::move(v));
    }

    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    const std::vector<C>& coeffs() const noexcept { return c_; }

    /// Coefficient of t^i; a default-constructed zero beyond the degree.
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C{}; }

    TPoly& operator+=(const TPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), zero_like(o.c_.back()));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }

    TPoly& operator-=(const TPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), zero_like(o.c_.back()));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    TPoly operator-() const
    {
        TPoly r = *this;
        for (auto& x : r.c_)
            x = -x;
        return r;
    }

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

    friend TPoly operator*(const TPoly& a, const TPoly& b)
    {
        TPoly r;
        add_product(r, a, b);
        return r;
    }

    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    TPoly scaled(const C& k) const
    {
        TPoly r = *this;
        for (auto& x : r.c_)
            x *= k;
        r.trim();
        return r;
    }

    /// Multiplication by t^k.
    TPoly shifted(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<C> v(c_.size() + k, zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i)
            v[i + k] = c_[i];
        return TPoly(std::move(v));
    }

    /// The substitution t -> t^p.
    TPoly frobenius(std::uint64_t p) const
    {
        if (is_zero())
            return {};
        std::vector<C> v((c_.size() - 1) * p + 1, zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i)
            v[i * p] = c_[i];
        return TPoly(std::move(v));
    }

    /// acc += a * b without materializing the product.
    friend void add_product(TPoly& acc, const TPoly& a, const TPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return;
        const std::size_t need = a.c_.size() + b.c_.size() - 1;
        if (acc.c_.size() < need)
            acc.c_.resize(need, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (plinear::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                add_product(acc.c_[i + j], a.c_[i], b.c_[j]);
        }
        acc.trim();
    }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (plinear::is_zero(c_[i]))
                continue;
            if (!s.empty())
                s += " + ";
            s += coeff_to_string(c_[i]);
            if (i == 1)
                s += "*" + var;
            else if (i > 1)
                s += "*" + var + "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && plinear::is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<C> c_;
};

template <typename C>
bool is_zero(const TPoly<C>& a)
{
    return a.is_zero();
}

template <typename C>
TPoly<C> zero_like(const TPoly<C>&)
{
    return {};
}

template <typename C>
std::string coeff_to_string(const TPoly<C>& a)
{
    return "(" + a.to_string() + ")";
}

template <typename C>
C coeff_one();

template <>
inline Integer coeff_one<Integer>()
{
    return 1;
}

template <>
inline TPoly<Integer> coeff_one<TPoly<Integer>>()
{
    return TPoly<Integer>::constant(1);
}

/// Frobenius lift on coefficients: identity on Z, t -> t^p on Z[t].
inline Integer frobenius_coeff(const Integer& a, std::uint64_t) { return a; }

template <typename C>
TPoly<C> frobenius_coeff(const TPoly<C>& a, std::uint64_t p)
{
    return a.frobenius(p);
}

/// Exact division by d; throws plinear::Error when d does not divide a.
inline Integer divexact_coeff(const Integer& a, const Integer& d)
{
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
        throw Error("exact division failed: " + d.get_str() + " does not divide " + a.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline TPoly<Integer> divexact_coeff(const TPoly<Integer>& a, const Integer& d)
{
    std::vector<Integer> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs())
        v.push_back(divexact_coeff(c, d));
    return TPoly<Integer>(std::move(v));
}

/// Canonical residues in [0, m), still as integers.
inline Integer reduce_coeff(const Integer& a, const Integer& m) { return mod_floor(a, m); }

inline TPoly<Integer> reduce_coeff(const TPoly<Integer>& a, const Integer& m)
{
    std::vector<Integer> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs())
        v.push_back(mod_floor(c, m));
    return TPoly<Integer>(std::move(v));
}

inline TPoly<Residue> to_residues(const TPoly<Integer>& a, const Modulus& mod)
{
    std::vector<Residue> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs())
        v.emplace_back(c, mod);
    return TPoly<Residue>(std::move(v));
}

/// Split t^shift * q(t) into digits: t^shift q = sum_m lambda_m(t) t^(p m),
/// deg lambda_m < p, m in [0, count). Throws DegreeEscape when
/// deg(t^shift q) > p*count - 1.
template <typename C>
std::vector<TPoly<C>> tpoly_digit_slice(const TPoly<C>& q, std::uint64_t p, std::size_t shift,
                                        std::size_t count)
{
    std::vector<TPoly<C>> out(count);
    if (q.is_zero())
        return out;
    const std::int64_t top = q.degree() + static_cast<std::int64_t>(shift);
    if (top > static_cast<std::int64_t>(p * count) - 1)
        throw DegreeEscape("digit slice: degree " + std::to_string(top) + " exceeds " +
                           std::to_string(p * count - 1));
    std::vector<std::vector<C>> parts(count);
    const auto& c = q.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t d = i + shift;
        auto& part = parts[d / p];
        if (part.size() < d % p + 1)
            part.resize(d % p + 1, zero_like(c[i]));
        part[d % p] = c[i];
    }
    for (std::size_t m = 0; m < count; ++m)
        out[m] = TPoly<C>(std::move(parts[m]));
    return out;
}

} // namespace plinear
