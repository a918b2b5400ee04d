#include "plinear/engine/oracles.hpp"

#include <algorithm>
#include <limits>

#include "plinear/cartier/cartier.hpp"
#include "plinear/errors.hpp"
#include "plinear/polytope/polytope.hpp"

namespace plinear {

namespace {

struct ModOps {
    using T = std::uint64_t;
    std::uint64_t m;

    T from(const Integer& c) const { return mod_floor_u64(c, m); }
    T one() const { return 1 % m; }
    static bool zero(T a) { return a == 0; }
    static void clear(T& a) { a = 0; }
    void addmul(T& acc, T a, T c) const { acc = add_mod(acc, mul_mod(a, c, m), m); }
};

struct ExactOps {
    using T = Integer;

    static T from(const Integer& c) { return c; }
    static T one() { return 1; }
    static bool zero(const T& a) { return sgn(a) == 0; }
    static void clear(T& a) { a = 0; }
    static void addmul(T& acc, const T& a, const T& c)
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    }
};

std::size_t checked_cells(const std::vector<std::int64_t>& extent, std::size_t cap)
{
    std::size_t cells = 1;
    for (auto e : extent) {
        if (e <= 0)
            return 0;
        if (cells > cap / static_cast<std::size_t>(e))
            throw CapExceeded("oracle grid exceeds " + std::to_string(cap) + " cells");
        cells *= static_cast<std::size_t>(e);
    }
    return cells;
}

void check_ct_cap(std::int64_t K, std::size_t n, const OracleCaps& caps)
{
    if (K < 0)
        throw Error("oracle: negative power");
    if (K > ct_cap(caps, n))
        throw CapExceeded("constant-term oracle limited to k <= " + std::to_string(ct_cap(caps, n)) +
                          " for n = " + std::to_string(n));
}

/// Powers of g on a dense grid, keeping only cells that can still reach a target.
template <typename Ops>
std::vector<std::vector<typename Ops::T>> power_table(const IntLaurent& g,
                                                      const std::vector<ExpVec>& targets,
                                                      std::int64_t K, const Ops& ops,
                                                      std::size_t max_cells)
{
    using T = typename Ops::T;
    const std::size_t n = g.nvars();
    std::vector<std::vector<T>> table(static_cast<std::size_t>(K) + 1,
                                      std::vector<T>(targets.size(), T{}));
    if (targets.empty())
        return table;
    for (const auto& t : targets)
        if (t.size() != n)
            throw RingMismatch("oracle: target has the wrong number of variables");

    std::vector<std::int64_t> glo(n, 0), ghi(n, 0), tlo(n), thi(n);
    bool first = true;
    for (const auto& [e, c] : g.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            glo[i] = first ? e[i] : std::min(glo[i], e[i]);
            ghi[i] = first ? e[i] : std::max(ghi[i], e[i]);
        }
        first = false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        tlo[i] = thi[i] = targets[0][i];
        for (const auto& t : targets) {
            tlo[i] = std::min(tlo[i], t[i]);
            thi[i] = std::max(thi[i], t[i]);
        }
    }

    std::vector<std::int64_t> lo(n), hi(n), extent(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::max(std::min<std::int64_t>(0, K * glo[i]), tlo[i] - std::max<std::int64_t>(0, K * ghi[i]));
        hi[i] = std::min(std::max<std::int64_t>(0, K * ghi[i]), thi[i] - std::min<std::int64_t>(0, K * glo[i]));
        extent[i] = hi[i] - lo[i] + 1;
    }
    const std::size_t cells = checked_cells(extent, max_cells);
    if (cells == 0)
        return table;

    std::vector<std::size_t> stride(n);
    stride[n - 1] = 1;
    for (std::size_t i = n - 1; i > 0; --i)
        stride[i - 1] = stride[i] * static_cast<std::size_t>(extent[i]);

    auto inside = [&](const ExpVec& w) {
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] < lo[i] || w[i] > hi[i])
                return false;
        return true;
    };
    auto index = [&](const ExpVec& w) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i)
            idx += static_cast<std::size_t>(w[i] - lo[i]) * stride[i];
        return idx;
    };
    auto point = [&](std::size_t idx) {
        ExpVec w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = lo[i] + static_cast<std::int64_t>(idx / stride[i]);
            idx %= stride[i];
        }
        return w;
    };

    std::vector<std::pair<ExpVec, T>> terms;
    for (const auto& [e, c] : g.terms())
        terms.emplace_back(e, ops.from(c));

    // t - w must lie in a nonnegative multiple (at most rem) of Newton(g)
    std::vector<Facet> facets;
    std::vector<std::int64_t> facet_min;
    try {
        facets = newton_polytope(g.support()).facets();
    } catch (const NotFullDimensional&) {
    }
    for (const auto& f : facets) {
        std::int64_t lo_t = dot(f.normal, targets[0]);
        for (const auto& t : targets)
            lo_t = std::min(lo_t, dot(f.normal, t));
        facet_min.push_back(lo_t);
    }

    std::vector<T> cur(cells), nxt(cells);
    std::vector<char> mark(cells, 0);
    std::vector<std::size_t> live, nlive;
    const ExpVec origin(n);
    if (inside(origin)) {
        cur[index(origin)] = ops.one();
        live.push_back(index(origin));
    }

    auto record = [&](std::int64_t j) {
        for (std::size_t ti = 0; ti < targets.size(); ++ti)
            if (inside(targets[ti]))
                table[static_cast<std::size_t>(j)][ti] = cur[index(targets[ti])];
    };
    record(0);

    for (std::int64_t k = 0; k < K; ++k) {
        const std::int64_t rem = K - k;
        for (std::size_t idx : live) {
            if (Ops::zero(cur[idx]))
                continue;
            const ExpVec w = point(idx);
            bool useful = true;
            for (std::size_t i = 0; i < n && useful; ++i)
                useful = w[i] >= tlo[i] - std::max<std::int64_t>(0, rem * ghi[i]) &&
                         w[i] <= thi[i] - std::min<std::int64_t>(0, rem * glo[i]);
            for (std::size_t f = 0; f < facets.size() && useful; ++f)
                useful = dot(facets[f].normal, w) >=
                         facet_min[f] - std::max<std::int64_t>(0, rem * facets[f].offset);
            if (!useful)
                continue;
            for (const auto& [e, c] : terms) {
                ExpVec w2 = w + e;
                if (!inside(w2))
                    continue;
                const std::size_t j = index(w2);
                if (!mark[j]) {
                    mark[j] = 1;
                    nlive.push_back(j);
                }
                ops.addmul(nxt[j], cur[idx], c);
            }
        }
        for (std::size_t idx : live)
            Ops::clear(cur[idx]);
        std::swap(cur, nxt);
        std::swap(live, nlive);
        nlive.clear();
        for (std::size_t idx : live)
            mark[idx] = 0;
        record(k + 1);
    }
    return table;
}

std::vector<ExpVec> negated_support(const IntLaurent& q)
{
    std::vector<ExpVec> out;
    for (const auto& [e, c] : q.terms())
        out.push_back(-e);
    return out;
}

template <typename F>
void for_each_in_box(const std::vector<std::int64_t>& bounds, F&& fn)
{
    const std::size_t n = bounds.size();
    for (auto b : bounds)
        if (b < 0)
            return;
    ExpVec k(n);
    while (true) {
        fn(k);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (k[i] < bounds[i]) {
                ++k[i];
                break;
            }
            k[i] = 0;
            if (i == 0)
                return;
        }
    }
}

std::vector<std::size_t> box_strides(const std::vector<std::int64_t>& bounds)
{
    const std::size_t n = bounds.size();
    std::vector<std::size_t> stride(n);
    stride[n - 1] = 1;
    for (std::size_t i = n - 1; i > 0; --i)
        stride[i - 1] = stride[i] * static_cast<std::size_t>(bounds[i] + 1);
    return stride;
}

void check_polynomial(const IntLaurent& D, const std::vector<std::int64_t>& bounds)
{
    if (bounds.size() != D.nvars())
        throw RingMismatch("series oracle: bounds do not match the variable count");
    for (auto b : bounds)
        if (b < 0)
            throw Error("series oracle: negative bound");
    for (const auto& [e, c] : D.terms())
        if (!e.non_negative())
            throw Error("series oracle: denominator must be a polynomial");
}

} // namespace

std::int64_t ct_cap(const OracleCaps& caps, std::size_t n)
{
    return n <= 2 ? caps.ct_k_low_dim : caps.ct_k_high_dim;
}

std::vector<std::vector<Integer>> power_coeff_table(const IntLaurent& g,
                                                    const std::vector<ExpVec>& targets,
                                                    std::int64_t K, const OracleCaps& caps)
{
    check_ct_cap(K, g.nvars(), caps);
    return power_table(g, targets, K, ExactOps{}, caps.max_exact_cells);
}

std::vector<std::vector<std::uint64_t>> power_coeff_table_mod(const IntLaurent& g,
                                                              const std::vector<ExpVec>& targets,
                                                              std::int64_t K, std::uint64_t m,
                                                              const OracleCaps& caps)
{
    check_ct_cap(K, g.nvars(), caps);
    return power_table(g, targets, K, ModOps{m}, caps.max_cells);
}

Integer ct_oracle(const IntLaurent& g, const IntLaurent& q, const ExpVec& u, std::int64_t k,
                  const OracleCaps& caps)
{
    std::vector<ExpVec> targets;
    for (const auto& [e, c] : q.terms())
        targets.push_back(-(e + u));
    auto table = power_coeff_table(g, targets, k, caps);
    Integer sum = 0;
    std::size_t i = 0;
    for (const auto& [e, c] : q.terms())
        sum += c * table[static_cast<std::size_t>(k)][i++];
    return sum;
}

std::vector<Integer> ct_sequence(const IntLaurent& g, const IntLaurent& q, std::int64_t K,
                                 const OracleCaps& caps)
{
    auto table = power_coeff_table(g, negated_support(q), K, caps);
    std::vector<Integer> out;
    for (const auto& row : table) {
        Integer sum = 0;
        std::size_t i = 0;
        for (const auto& [e, c] : q.terms())
            sum += c * row[i++];
        out.push_back(sum);
    }
    return out;
}

std::vector<std::uint64_t> ct_sequence_mod(const IntLaurent& g, const IntLaurent& q, std::int64_t K,
                                           std::uint64_t m, const OracleCaps& caps)
{
    auto table = power_coeff_table_mod(g, negated_support(q), K, m, caps);
    std::vector<std::uint64_t> qm;
    for (const auto& [e, c] : q.terms())
        qm.push_back(mod_floor_u64(c, m));
    std::vector<std::uint64_t> out;
    for (const auto& row : table) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < qm.size(); ++i)
            sum = add_mod(sum, mul_mod(qm[i], row[i], m), m);
        out.push_back(sum);
    }
    return out;
}

SeriesGrid<std::uint64_t> inverse_series_mod(const IntLaurent& D, const std::vector<std::int64_t>& bounds,
                                             std::uint64_t m, const OracleCaps& caps)
{
    check_polynomial(D, bounds);
    std::vector<std::int64_t> extent;
    for (auto b : bounds)
        extent.push_back(b + 1);
    SeriesGrid<std::uint64_t> S;
    S.bounds = bounds;
    S.stride = box_strides(bounds);
    S.values.assign(checked_cells(extent, caps.max_cells), 0);

    const ExpVec zero(D.nvars());
    const std::uint64_t inv = inv_mod(mod_floor_u64(D.coeff(zero), m), m);
    std::vector<std::pair<ExpVec, std::uint64_t>> terms;
    for (const auto& [e, c] : D.terms())
        if (!e.is_zero())
            terms.emplace_back(e, mod_floor_u64(-c, m));

    std::size_t idx = 0;
    for_each_in_box(bounds, [&](const ExpVec& k) {
        std::uint64_t acc = k.is_zero() ? 1 % m : 0;
        for (const auto& [e, c] : terms) {
            bool ok = true;
            for (std::size_t i = 0; i < k.size() && ok; ++i)
                ok = k[i] >= e[i];
            if (ok)
                acc = add_mod(acc, mul_mod(c, S.values[idx - S.index(e)], m), m);
        }
        S.values[idx++] = mul_mod(acc, inv, m);
    });
    return S;
}

SeriesGrid<Rational> inverse_series(const IntLaurent& D, const std::vector<std::int64_t>& bounds,
                                    const OracleCaps& caps)
{
    check_polynomial(D, bounds);
    std::vector<std::int64_t> extent;
    for (auto b : bounds)
        extent.push_back(b + 1);
    SeriesGrid<Rational> S;
    S.bounds = bounds;
    S.stride = box_strides(bounds);
    S.values.assign(checked_cells(extent, caps.max_exact_cells), Rational(0));

    const ExpVec zero(D.nvars());
    const Integer d0 = D.coeff(zero);
    if (sgn(d0) == 0)
        throw BadConstantTerm("series oracle: constant term is zero");
    std::size_t idx = 0;
    for_each_in_box(bounds, [&](const ExpVec& k) {
        Rational acc = k.is_zero() ? 1 : 0;
        for (const auto& [e, c] : D.terms()) {
            if (e.is_zero())
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < k.size() && ok; ++i)
                ok = k[i] >= e[i];
            if (ok)
                acc -= Rational(c) * S.values[idx - S.index(e)];
        }
        acc /= Rational(d0);
        S.values[idx++] = acc;
    });
    return S;
}

Rational series_oracle(const IntLaurent& P, const IntLaurent& Q, const std::vector<std::int64_t>& K,
                       const OracleCaps& caps)
{
    std::int64_t deg = 0;
    for (auto k : K) {
        if (k < 0)
            throw Error("series oracle: negative index");
        deg += k;
    }
    if (deg > caps.series_degree)
        throw CapExceeded("series oracle limited to total degree " + std::to_string(caps.series_degree));
    const SeriesGrid<Rational> S = inverse_series(P, K, caps);
    Rational sum = 0;
    const ExpVec target(K);
    for (const auto& [e, c] : Q.terms()) {
        if (!e.non_negative())
            throw Error("series oracle: numerator must be a polynomial");
        ExpVec d = target - e;
        if (d.non_negative())
            sum += Rational(c) * S.at(d);
    }
    return sum;
}

std::vector<Integer> state_vector_oracle(const CTScheme& s, std::int64_t k, const OracleCaps& caps)
{
    const std::size_t np = s.interior_point_count();
    std::vector<ExpVec> targets;
    for (std::size_t i = 0; i < np; ++i)
        targets.push_back(-s.states[i].u);
    auto table = power_coeff_table(s.source.primary, targets, k, caps);
    std::vector<Integer> out(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& st = s.states[i];
        if (k < st.ell)
            continue;
        const std::int64_t j = k - st.ell;
        out[i] = binomial(s.rho + j - 1, j) * table[static_cast<std::size_t>(j)][i % np];
    }
    return out;
}

std::vector<Rational> state_vector_oracle(const RatScheme& s, const std::vector<std::int64_t>& k,
                                          const OracleCaps& caps)
{
    if (k.size() != s.n)
        throw RingMismatch("state_vector_oracle: index arity differs from the scheme");
    std::int64_t deg = 0;
    for (auto x : k)
        deg += x;
    if (deg > caps.series_degree)
        throw CapExceeded("series oracle limited to total degree " + std::to_string(caps.series_degree));
    const SeriesGrid<Rational> S =
        inverse_series(lp_pow(s.source.primary, static_cast<std::uint64_t>(s.rho)), k, caps);
    const ExpVec kv(k);
    std::vector<Rational> out;
    for (const auto& u : s.states) {
        ExpVec d = kv - u;
        out.push_back(d.non_negative() ? S.at(d) : Rational(0));
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> ct_state_vectors_mod(const CTScheme& s, std::int64_t K,
                                                             const OracleCaps& caps)
{
    const std::uint64_t m = s.modulus.value();
    const std::size_t np = s.interior_point_count();
    std::vector<ExpVec> targets;
    for (std::size_t i = 0; i < np; ++i)
        targets.push_back(-s.states[i].u);
    auto table = power_coeff_table_mod(s.source.primary, targets, K, m, caps);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::int64_t k = 0; k <= K; ++k) {
        std::vector<std::uint64_t> v(s.size(), 0);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto& st = s.states[i];
            if (k < st.ell)
                continue;
            const std::int64_t j = k - st.ell;
            v[i] = mul_mod(mod_floor_u64(binomial(s.rho + j - 1, j), m),
                           table[static_cast<std::size_t>(j)][i % np], m);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t m)
{
    const std::uint64_t num = mod_floor_u64(q.get_num(), m);
    const std::uint64_t den = mod_floor_u64(q.get_den(), m);
    return mul_mod(num, inv_mod(den, m), m);
}

CartierIdentityResult cartier_identity_ct(const IntLaurent& g, const IntLaurent& A, std::uint64_t p,
                                          unsigned r, std::int64_t torder)
{
    const std::int64_t rho = choose_rho(p, r);
    const StateRegion region(RegionKind::InteriorDilation, newton_polytope(g.support()), rho);
    const CartierContext<TPoly<Integer>> ctx(one_minus_t(g), p, r, rho);
    const TLaurent N = cartier_reduce(ctx, to_tlaurent(A), region);
    const Integer M = ctx.modulus();
    const auto pp = static_cast<std::int64_t>(p);

    std::vector<IntLaurent> gpow{IntLaurent::constant(g.nvars(), 1)};
    for (std::int64_t k = 1; k <= torder; ++k)
        gpow.push_back(gpow.back() * g);

    std::vector<IntLaurent> Nd;
    for (const auto& [e, tp] : N.terms()) {
        const auto& c = tp.coeffs();
        if (Nd.size() < c.size())
            Nd.resize(c.size(), IntLaurent(g.nvars()));
        for (std::size_t d = 0; d < c.size(); ++d)
            Nd[d].add_term(e, c[d]);
    }

    CartierIdentityResult res;
    for (std::int64_t j = 0; j <= torder; ++j) {
        IntLaurent lhs = cartier_select(A * gpow[static_cast<std::size_t>(j)], p);
        lhs = reduce_mod(scaled(lhs, binomial(rho + j - 1, j)), M);
        IntLaurent rhs(g.nvars());
        for (std::int64_t i = 0; pp * i <= j; ++i) {
            const auto d = static_cast<std::size_t>(j - pp * i);
            if (d < Nd.size())
                rhs += scaled(Nd[d] * gpow[static_cast<std::size_t>(i)], binomial(rho + i - 1, i));
        }
        rhs = reduce_mod(rhs, M);
        ++res.compared;
        if (!(lhs == rhs)) {
            res.ok = false;
            res.detail = "t^" + std::to_string(j) + ": series side " + lhs.to_string() +
                         ", reduced side " + rhs.to_string();
            return res;
        }
    }
    return res;
}

CartierIdentityResult cartier_identity_rat(const IntLaurent& P, const IntLaurent& A, std::uint64_t p,
                                           unsigned r, std::int64_t xorder, const OracleCaps& caps)
{
    const std::int64_t rho = choose_rho(p, r);
    const Modulus mod(p, r);
    const std::uint64_t m = mod.value();
    const StateRegion region(RegionKind::BoxClosure, newton_polytope(P.support()), rho);
    const CartierContext<Integer> ctx(P, p, r, rho);
    const IntLaurent N = cartier_reduce(ctx, A, region);
    const auto pp = static_cast<std::int64_t>(p);
    const std::size_t n = P.nvars();

    std::vector<std::int64_t> bounds(n, pp * xorder);
    for (const auto& [e, c] : A.terms())
        for (std::size_t i = 0; i < n; ++i)
            bounds[i] = std::max(bounds[i], pp * xorder - e[i]);
    const auto S = inverse_series_mod(lp_pow(P, static_cast<std::uint64_t>(rho)), bounds, m, caps);

    CartierIdentityResult res;
    for_each_in_box(std::vector<std::int64_t>(n, xorder), [&](const ExpVec& k) {
        if (!res.ok)
            return;
        std::uint64_t lhs = 0, rhs = 0;
        for (const auto& [a, c] : A.terms()) {
            ExpVec d = k.scaled(pp) - a;
            if (d.non_negative())
                lhs = add_mod(lhs, mul_mod(mod_floor_u64(c, m), S.at(d), m), m);
        }
        for (const auto& [v, c] : N.terms()) {
            ExpVec d = k - v;
            if (d.non_negative())
                rhs = add_mod(rhs, mul_mod(mod_floor_u64(c, m), S.at(d), m), m);
        }
        ++res.compared;
        if (lhs != rhs) {
            res.ok = false;
            res.detail = "x^" + k.to_string() + ": series side " + std::to_string(lhs) +
                         ", reduced side " + std::to_string(rhs);
        }
    });
    return res;
}

} // namespace plinear
