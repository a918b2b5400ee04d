#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "plinear/errors.hpp"
#include "plinear/polytope/polytope.hpp"
#include "plinear/ring/integer.hpp"
#include "plinear/ring/laurent_poly.hpp"

namespace plinear {

/// Minimal rho >= 1 with rho - ceil(rho/p) >= r - 1. Never exceeds 2r.
std::int64_t choose_rho(std::uint64_t p, unsigned r);

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

inline Integer scale_coeff(const Integer& c, const Integer& k) { return c * k; }
inline TPoly<Integer> scale_coeff(const TPoly<Integer>& c, const Integer& k) { return c.scaled(k); }

template <typename C>
LaurentPoly<C> scaled(const LaurentPoly<C>& a, const Integer& k)
{
    return a.map_coeffs([&](const C& c) { return scale_coeff(c, k); });
}

/// C(sum a_k x^k) = sum a_{pk} x^k. Coefficients pass through untouched.
template <typename C>
LaurentPoly<C> cartier_select(const LaurentPoly<C>& h, std::uint64_t p)
{
    const auto pp = static_cast<std::int64_t>(p);
    LaurentPoly<C> r(h.nvars());
    for (const auto& [e, c] : h.terms())
        if (e.divisible_by(pp))
            r.add_term(e.divided(pp), c);
    return r;
}

/// G with f^p = f^sigma(x^p) - p*G. Throws if the division is not exact.
template <typename C>
LaurentPoly<C> compute_G(const LaurentPoly<C>& f, std::uint64_t p)
{
    const Integer pz(static_cast<unsigned long>(p));
    LaurentPoly<C> diff = lp_frobenius(f, p) - lp_pow(f, p);
    return diff.map_coeffs([&](const C& c) { return divexact_coeff(c, pz); });
}

/// Lattice points of rho*mu together with those of j*mu for j <= rho.
struct StateRegion {
    StateRegion(RegionKind kind, Polytope polytope, std::int64_t rho);

    RegionKind kind;
    Polytope polytope;
    std::int64_t rho;
    LatticePointSet points;
    /// dilations[j] = lattice points of j*mu, j in [1, rho].
    std::vector<LatticePointSet> dilations;
};

/// Immutable data for the Cartier operator mod p^r on M(rho): f, G, the
/// products G^m f^(p*ceil(rho/p) - rho) bucketed by exponent class mod p,
/// and the powers of f^sigma used to rebase onto the denominator
/// f^sigma(x)^rho.
template <typename C>
class CartierContext {
public:
    using Terms = std::vector<std::pair<ExpVec, C>>;

    CartierContext(LaurentPoly<C> f, std::uint64_t p, unsigned r, std::int64_t rho)
        : f_(std::move(f)), p_(p), r_(r), rho_(rho), G_(f_.nvars())
    {
        if (r == 0 || rho < 1)
            throw Error("CartierContext: r and rho must be positive");
        if (!is_prime(p))
            throw Error("CartierContext: " + std::to_string(p) + " is not prime");
        c_ = ceil_div(rho, static_cast<std::int64_t>(p));
        if (rho - c_ < static_cast<std::int64_t>(r) - 1)
            throw Error("CartierContext: rho - ceil(rho/p) < r - 1");
        modulus_ = ipow(Integer(static_cast<unsigned long>(p)), r);
        G_ = compute_G(f_, p);

        const auto lift = static_cast<std::uint64_t>(static_cast<std::int64_t>(p) * c_ - rho);
        LaurentPoly<C> gm = LaurentPoly<C>::constant(f_.nvars(), coeff_one<C>());
        const LaurentPoly<C> fl = lp_pow(f_, lift);
        for (unsigned m = 0; m < r; ++m) {
            if (m > 0)
                gm = gm * G_;
            LaurentPoly<C> prod = gm * fl;
            auto& buckets = products_.emplace_back();
            for (const auto& [e, coeff] : prod.terms())
                buckets[residue_class(e)].emplace_back(e, coeff);
        }

        const LaurentPoly<C> fs = lp_frobenius_coeffs(f_);
        sigma_powers_.push_back(LaurentPoly<C>::constant(f_.nvars(), coeff_one<C>()));
        for (std::int64_t k = 1; k <= rho; ++k)
            sigma_powers_.push_back(sigma_powers_.back() * fs);
    }

    const LaurentPoly<C>& f() const noexcept { return f_; }
    const LaurentPoly<C>& G() const noexcept { return G_; }
    std::uint64_t p() const noexcept { return p_; }
    unsigned r() const noexcept { return r_; }
    std::int64_t rho() const noexcept { return rho_; }
    std::int64_t ceil_rho_p() const noexcept { return c_; }
    const Integer& modulus() const noexcept { return modulus_; }

    /// f^sigma(x)^k for k in [0, rho] (sigma on coefficients only).
    const LaurentPoly<C>& sigma_power(std::int64_t k) const { return sigma_powers_.at(k); }

    /// Terms of G^m f^(p*ceil(rho/p) - rho) whose exponent is congruent to
    /// cls modulo p (components of cls in [0, p)).
    const Terms& product_terms(unsigned m, const ExpVec& cls) const
    {
        static const Terms empty;
        const auto& buckets = products_.at(m);
        auto it = buckets.find(cls);
        return it == buckets.end() ? empty : it->second;
    }

    ExpVec residue_class(const ExpVec& e) const
    {
        ExpVec r = e;
        const auto pp = static_cast<std::int64_t>(p_);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = ((r[i] % pp) + pp) % pp;
        return r;
    }

private:
    LaurentPoly<C> lp_frobenius_coeffs(const LaurentPoly<C>& a) const
    {
        return a.map_coeffs([&](const C& c) { return frobenius_coeff(c, p_); });
    }

    LaurentPoly<C> f_;
    std::uint64_t p_;
    unsigned r_;
    std::int64_t rho_;
    std::int64_t c_ = 1;
    Integer modulus_;
    LaurentPoly<C> G_;
    std::vector<std::map<ExpVec, Terms>> products_;
    std::vector<LaurentPoly<C>> sigma_powers_;
};

/// Degree bound of the Cartier numerators in t: rho*(p-1), which equals
/// p(r-1) + p*ceil(rho/p) - rho for the minimal rho.
inline std::int64_t numerator_degree_bound(std::uint64_t p, std::int64_t rho)
{
    return rho * (static_cast<std::int64_t>(p) - 1);
}

template <typename C>
std::int64_t t_degree(const C&)
{
    return 0;
}

template <>
inline std::int64_t t_degree<TPoly<Integer>>(const TPoly<Integer>& c)
{
    return c.degree();
}

/// Numerator N with C(A / f^rho) = N / f^sigma(x)^rho mod p^r:
///   N = sum_{m<r} p^m binom(ceil(rho/p)+m-1, m) Q_m (f^sigma)^(rho-m-ceil(rho/p)),
///   Q_m = C(A G^m f^(p ceil(rho/p) - rho)).
/// Coefficients are returned as canonical residues in [0, p^r). Throws
/// SupportEscape if some Q_m or N leaves the region, DegreeEscape if a
/// t-degree exceeds its bound.
template <typename C>
LaurentPoly<C> cartier_reduce(const CartierContext<C>& ctx, const LaurentPoly<C>& A,
                              const StateRegion& region)
{
    if (A.nvars() != ctx.f().nvars())
        throw RingMismatch("cartier_reduce: numerator variable count differs from f");
    const auto pp = static_cast<std::int64_t>(ctx.p());
    const std::int64_t c = ctx.ceil_rho_p();
    const Integer pz(static_cast<unsigned long>(ctx.p()));
    LaurentPoly<C> N(A.nvars());

    for (unsigned m = 0; m < ctx.r(); ++m) {
        std::map<ExpVec, C> acc;
        for (const auto& [e, a] : A.terms()) {
            const ExpVec want = ctx.residue_class(-e);
            for (const auto& [w, tc] : ctx.product_terms(m, want)) {
                auto [it, inserted] = acc.try_emplace((e + w).divided(pp));
                if (inserted)
                    it->second = zero_like(a);
                add_product(it->second, a, tc);
            }
        }
        LaurentPoly<C> Q(A.nvars());
        for (auto& [e, v] : acc)
            Q.add_term(e, v);
        if (Q.is_zero())
            continue;

        const auto& allowed = region.dilations.at(static_cast<std::size_t>(m + c));
        for (const auto& [e, v] : Q.terms())
            if (!allowed.contains(e))
                throw SupportEscape("cartier_reduce: Q_" + std::to_string(m) + " has support " +
                                    e.to_string() + " outside " + std::to_string(m + c) + "*mu");

        Integer factor = ipow(pz, m) * binomial(c + m - 1, m);
        Q = reduce_mod(scaled(Q, factor), ctx.modulus());
        N += Q * ctx.sigma_power(ctx.rho() - static_cast<std::int64_t>(m) - c);
    }
    N = reduce_mod(N, ctx.modulus());

    const std::int64_t bound = numerator_degree_bound(ctx.p(), ctx.rho());
    for (const auto& [e, v] : N.terms()) {
        if (!region.points.contains(e))
            throw SupportEscape("cartier_reduce: numerator support " + e.to_string() +
                                " outside the state region");
        if (t_degree(v) > bound)
            throw DegreeEscape("cartier_reduce: t-degree " + std::to_string(t_degree(v)) +
                               " exceeds " + std::to_string(bound));
    }
    return N;
}

} // namespace plinear
