#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plinear/errors.hpp"
#include "plinear/ring/exp_vec.hpp"
#include "plinear/ring/integer.hpp"
#include "plinear/ring/tpoly.hpp"

namespace plinear {

/// Multivariate Laurent polynomial with coefficients in C (Integer or
/// TPoly<Integer>). Terms are kept in lexicographic exponent order and no
/// zero coefficient is ever stored.
template <typename C>
class LaurentPoly {
public:
    using coeff_type = C;
    using term_map = std::map<ExpVec, C>;

    explicit LaurentPoly(std::size_t nvars = 1) : n_(nvars)
    {
        if (n_ == 0 || n_ > ExpVec::kMaxVars)
            throw Error("LaurentPoly: variable count must be in [1, 8]");
    }

    static LaurentPoly constant(std::size_t nvars, C c)
    {
        LaurentPoly r(nvars);
        r.add_term(ExpVec(nvars), std::move(c));
        return r;
    }

    static LaurentPoly monomial(const ExpVec& e, C c)
    {
        LaurentPoly r(e.size());
        r.add_term(e, std::move(c));
        return r;
    }

    std::size_t nvars() const noexcept { return n_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const term_map& terms() const noexcept { return terms_; }

    C coeff(const ExpVec& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    std::vector<ExpVec> support() const
    {
        std::vector<ExpVec> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_)
            s.push_back(e);
        return s;
    }

    void add_term(const ExpVec& e, const C& c)
    {
        check_len(e);
        if (plinear::is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (plinear::is_zero(it->second))
                terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        check_same(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        check_same(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    /// Exact product; throws RingMismatch on differing variable counts.
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        a.check_same(b);
        LaurentPoly r(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                auto [it, inserted] = r.terms_.try_emplace(ea + eb);
                if (inserted)
                    it->second = zero_like(ca);
                add_product(it->second, ca, cb);
            }
        }
        r.drop_zeros();
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Multiplication by the monomial x^e.
    LaurentPoly shifted(const ExpVec& e) const
    {
        check_len(e);
        LaurentPoly r(n_);
        for (const auto& [k, c] : terms_)
            r.terms_.emplace_hint(r.terms_.end(), k + e, c);
        return r;
    }

    template <typename F>
    LaurentPoly map_coeffs(F&& f) const
    {
        LaurentPoly r(n_);
        for (const auto& [e, c] : terms_) {
            C v = f(c);
            if (!plinear::is_zero(v))
                r.terms_.emplace_hint(r.terms_.end(), e, std::move(v));
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Human-readable rendering with variables x1..xn or the given names.
    std::string to_string(const std::vector<std::string>& vars = {}) const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty())
                s += " + ";
            s += coeff_to_string(it->second);
            for (std::size_t i = 0; i < n_; ++i) {
                if (it->first[i] == 0)
                    continue;
                s += "*" + (i < vars.size() ? vars[i] : "x" + std::to_string(i + 1));
                if (it->first[i] != 1)
                    s += "^" + std::to_string(it->first[i]);
            }
        }
        return s;
    }

private:
    void check_len(const ExpVec& e) const
    {
        if (e.size() != n_)
            throw RingMismatch("exponent vector length " + std::to_string(e.size()) +
                               " != variable count " + std::to_string(n_));
    }

    void check_same(const LaurentPoly& o) const
    {
        if (o.n_ != n_)
            throw RingMismatch("Laurent polynomials in " + std::to_string(n_) + " and " +
                               std::to_string(o.n_) + " variables");
    }

    void drop_zeros()
    {
        std::erase_if(terms_, [](const auto& kv) { return plinear::is_zero(kv.second); });
    }

    std::size_t n_;
    term_map terms_;
};

using IntLaurent = LaurentPoly<Integer>;
using TLaurent = LaurentPoly<TPoly<Integer>>;

template <typename C>
LaurentPoly<C> reduce_mod(const LaurentPoly<C>& a, const Integer& m)
{
    return a.map_coeffs([&](const C& c) { return reduce_coeff(c, m); });
}

/// a^e by binary powering; with a modulus every intermediate product is
/// reduced into [0, m).
template <typename C>
LaurentPoly<C> lp_pow(const LaurentPoly<C>& a, std::uint64_t e,
                      const std::optional<Integer>& mod = std::nullopt)
{
    LaurentPoly<C> result = LaurentPoly<C>::constant(a.nvars(), coeff_one<C>());
    LaurentPoly<C> base = mod ? reduce_mod(a, *mod) : a;
    while (e) {
        if (e & 1) {
            result = result * base;
            if (mod)
                result = reduce_mod(result, *mod);
        }
        e >>= 1;
        if (e) {
            base = base * base;
            if (mod)
                base = reduce_mod(base, *mod);
        }
    }
    if (mod)
        result = reduce_mod(result, *mod);
    return result;
}

/// f^sigma(x^p): exponents scaled by p, t -> t^p inside t-polynomial
/// coefficients, integers unchanged.
template <typename C>
LaurentPoly<C> lp_frobenius(const LaurentPoly<C>& a, std::uint64_t p)
{
    LaurentPoly<C> r(a.nvars());
    for (const auto& [e, c] : a.terms())
        r.add_term(e.scaled(static_cast<std::int64_t>(p)), frobenius_coeff(c, p));
    return r;
}

/// Lift an integer polynomial to t-polynomial coefficients (constants in t).
inline TLaurent to_tlaurent(const IntLaurent& a)
{
    TLaurent r(a.nvars());
    for (const auto& [e, c] : a.terms())
        r.add_term(e, TPoly<Integer>::constant(c));
    return r;
}

/// 1 - t*g.
TLaurent one_minus_t(const IntLaurent& g);

} // namespace plinear
