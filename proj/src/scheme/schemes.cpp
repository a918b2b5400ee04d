#include "plinear/scheme/schemes.hpp"

#include <algorithm>

#include "plinear/errors.hpp"
#include "plinear/parallel.hpp"

namespace plinear {

namespace {

std::size_t state_index(const std::vector<ExpVec>& states, const ExpVec& v)
{
    auto it = std::lower_bound(states.begin(), states.end(), v);
    if (it == states.end() || !(*it == v))
        return states.size();
    return static_cast<std::size_t>(it - states.begin());
}

std::vector<Rational> as_rationals(const ExpVec& e)
{
    std::vector<Rational> q;
    for (auto x : e)
        q.emplace_back(static_cast<long>(x));
    return q;
}

} // namespace

std::vector<std::string> default_vars(std::size_t n)
{
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back("x" + std::to_string(i + 1));
    return v;
}

TPoly<Residue> CTScheme::entry(std::size_t i, std::size_t j) const
{
    std::vector<Residue> c;
    for (const auto& m : digit_matrices)
        c.emplace_back(m(i, j), modulus);
    return TPoly<Residue>(std::move(c));
}

CTScheme build_ct_scheme(const IntLaurent& g, const IntLaurent& q, std::uint64_t p, unsigned r,
                         const std::vector<std::string>& vars, const BuildOptions& opts)
{
    if (g.nvars() != q.nvars() || vars.size() != g.nvars())
        throw RingMismatch("build_ct_scheme: g, q and the variable list disagree on n");
    if (g.is_zero())
        throw Error("build_ct_scheme: g is zero");
    const Modulus mod(p, r);
    const std::size_t n = g.nvars();
    Polytope delta = newton_polytope(g.support());
    for (const auto& [e, c] : q.terms())
        if (!membership(delta, e, 1, true))
            throw PrecondNumeratorSupport("numerator term x^" + e.to_string() +
                                          " is not in the interior of the Newton polytope");

    const std::int64_t rho = choose_rho(p, r);
    const StateRegion region(RegionKind::InteriorDilation, delta, rho);
    const TLaurent f = one_minus_t(g);
    const CartierContext<TPoly<Integer>> ctx(f, p, r, rho);
    const auto& pts = region.points.points;
    const std::size_t s = pts.size();
    const auto urho = static_cast<std::size_t>(rho);

    CTScheme out;
    out.p = p;
    out.r = r;
    out.rho = rho;
    out.n = n;
    out.modulus = mod;
    out.source = {vars, g, q};
    for (std::int64_t l = 0; l < rho; ++l)
        for (const auto& u : pts)
            out.states.push_back({l, u});
    const std::size_t S = out.states.size();
    out.digit_matrices.assign(p, ResidueMatrix(S, S, mod.value()));

    std::vector<TLaurent> images(s, TLaurent(n));
    parallel_for(s, opts.threads, [&](std::size_t iu) {
        images[iu] = cartier_reduce(ctx, TLaurent::monomial(pts[iu], TPoly<Integer>::constant(1)),
                                    region);
    });

    for (std::size_t iu = 0; iu < s; ++iu) {
        for (const auto& [v, qv] : images[iu].terms()) {
            const std::size_t iv = region.points.index_of(v);
            for (std::size_t l = 0; l < urho; ++l) {
                auto slices = tpoly_digit_slice(qv, p, l, urho);
                for (std::size_t m = 0; m < urho; ++m) {
                    const auto& c = slices[m].coeffs();
                    for (std::size_t d = 0; d < c.size(); ++d)
                        out.digit_matrices[d](l * s + iu, m * s + iv) = mod.reduce(c[d]);
                }
            }
        }
    }

    out.init.assign(S, 0);
    const std::size_t zero = region.points.index_of(ExpVec(n));
    if (zero < s)
        out.init[zero] = 1;

    out.extraction.assign(S, 0);
    const TLaurent numer = to_tlaurent(q) * lp_pow(f, static_cast<std::uint64_t>(rho - 1));
    for (const auto& [w, cw] : numer.terms()) {
        const std::size_t iw = region.points.index_of(w);
        if (iw == s)
            throw SupportEscape("extraction term x^" + w.to_string() + " outside rho*Delta°");
        const auto& c = cw.coeffs();
        if (static_cast<std::int64_t>(c.size()) > rho)
            throw DegreeEscape("extraction t-degree exceeds rho - 1");
        for (std::size_t j = 0; j < c.size(); ++j)
            out.extraction[j * s + iw] = to_int64(c[j]);
    }
    return out;
}

RatScheme build_rat_scheme(const IntLaurent& P, const IntLaurent& Q, std::uint64_t p, unsigned r,
                           const std::vector<std::string>& vars)
{
    if (P.nvars() != Q.nvars() || vars.size() != P.nvars())
        throw RingMismatch("build_rat_scheme: P, Q and the variable list disagree on n");
    for (const auto* poly : {&P, &Q})
        for (const auto& [e, c] : poly->terms())
            if (!e.non_negative())
                throw Error("build_rat_scheme: P and Q must be polynomials (exponent " +
                            e.to_string() + ")");
    const Modulus mod(p, r);
    const std::size_t n = P.nvars();
    const Integer P0 = P.coeff(ExpVec(n));
    const Integer pz(static_cast<unsigned long>(p));
    if (sgn(P0) == 0 || mpz_divisible_p(P0.get_mpz_t(), pz.get_mpz_t()))
        throw BadConstantTerm("p = " + std::to_string(p) + " divides P(0) = " + P0.get_str());
    Polytope delta = newton_polytope(P.support());
    for (const auto& [e, c] : Q.terms())
        if (!box_closure_contains(delta, as_rationals(e), 1, true))
            throw PrecondNumeratorSupport("numerator term x^" + e.to_string() +
                                          " is not in the box closure of the interior");

    const std::int64_t rho = choose_rho(p, r);
    RatScheme out;
    out.p = p;
    out.r = r;
    out.rho = rho;
    out.n = n;
    out.modulus = mod;
    out.source = {vars, P, Q};
    out.states = box_closure_points(delta, rho).points;
    const std::size_t S = out.states.size();

    out.init.assign(S, 0);
    const std::size_t zero = state_index(out.states, ExpVec(n));
    if (zero < S) {
        const std::uint64_t inv = inv_mod(mod.reduce(P0), mod.value());
        out.init[zero] = pow_mod(inv, static_cast<std::uint64_t>(rho), mod.value());
    }

    out.extraction.assign(S, 0);
    const IntLaurent numer = Q * lp_pow(P, static_cast<std::uint64_t>(rho - 1));
    for (const auto& [w, c] : numer.terms()) {
        const std::size_t iw = state_index(out.states, w);
        if (iw == S)
            throw SupportEscape("extraction term x^" + w.to_string() + " outside rho*B(Delta°)");
        out.extraction[iw] = to_int64(c);
    }
    return out;
}

const ResidueMatrix& RatScheme::digit_matrix(const ExpVec& ell) const
{
    if (ell.size() != n)
        throw RingMismatch("digit vector has " + std::to_string(ell.size()) + " components, scheme has " +
                           std::to_string(n));
    for (auto x : ell)
        if (x < 0 || x >= static_cast<std::int64_t>(p))
            throw Error("digit vector " + ell.to_string() + " outside [0, p)^n");

    std::shared_ptr<const CartierContext<Integer>> ctx;
    std::shared_ptr<const StateRegion> region;
    {
        std::lock_guard lock(lazy_->mu);
        auto it = lazy_->memo.find(ell);
        if (it != lazy_->memo.end())
            return it->second;
        if (!lazy_->ctx) {
            lazy_->region = std::make_shared<const StateRegion>(
                RegionKind::BoxClosure, newton_polytope(source.primary.support()), rho);
            lazy_->ctx = std::make_shared<const CartierContext<Integer>>(source.primary, p, r, rho);
        }
        ctx = lazy_->ctx;
        region = lazy_->region;
    }
    ResidueMatrix m = compute_digit_matrix(ell, *ctx, *region);
    std::lock_guard lock(lazy_->mu);
    return lazy_->memo.try_emplace(ell, std::move(m)).first->second;
}

ResidueMatrix RatScheme::compute_digit_matrix(const ExpVec& ell, const CartierContext<Integer>& ctx,
                                              const StateRegion& region) const
{
    const std::size_t S = states.size();
    if (region.points.points != states)
        throw SchemeFormatError("rational scheme states do not match rho*B(Delta°)");
    ResidueMatrix m(S, S, modulus.value());
    for (std::size_t i = 0; i < S; ++i) {
        IntLaurent image = cartier_reduce(ctx, IntLaurent::monomial(states[i] - ell, 1), region);
        for (const auto& [v, c] : image.terms())
            m(i, state_index(states, v)) = modulus.reduce(c);
    }
    return m;
}

std::map<ExpVec, ResidueMatrix> RatScheme::memoized() const
{
    std::lock_guard lock(lazy_->mu);
    return lazy_->memo;
}

void RatScheme::seed_digit_matrix(const ExpVec& ell, ResidueMatrix m)
{
    std::lock_guard lock(lazy_->mu);
    lazy_->memo.insert_or_assign(ell, std::move(m));
}

std::int64_t RatScheme::degree_product() const
{
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t d = 0;
        for (const auto& [e, c] : source.primary.terms())
            d = std::max(d, e[i]);
        prod *= d;
    }
    return prod;
}

bool operator==(const RatScheme& a, const RatScheme& b)
{
    return a.p == b.p && a.r == b.r && a.rho == b.rho && a.n == b.n && a.modulus == b.modulus &&
           a.states == b.states && a.init == b.init && a.extraction == b.extraction &&
           a.source == b.source && a.memoized() == b.memoized();
}

HasseWitt build_hasse_witt(const IntLaurent& g, std::uint64_t p)
{
    const Modulus mod(p, 1);
    Polytope delta = newton_polytope(g.support());
    HasseWitt out;
    out.p = p;
    out.points = dilated_interior_points(delta, 1);
    if (out.points.size() == 0)
        throw Error("build_hasse_witt: the Newton polytope has no interior lattice point");
    const TLaurent h = lp_pow(one_minus_t(g), p - 1);
    const auto pp = static_cast<std::int64_t>(p);
    for (const auto& u : out.points.points) {
        auto& row = out.H.emplace_back();
        for (const auto& v : out.points.points)
            row.push_back(to_residues(h.coeff(v.scaled(pp) - u), mod));
    }
    return out;
}

} // namespace plinear
