#pragma once

#include <random>
#include <vector>

#include "plinear/ring/laurent_poly.hpp"

namespace testutil {

using plinear::ExpVec;
using plinear::IntLaurent;
using plinear::Integer;
using plinear::Rational;

inline IntLaurent random_laurent(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                                 std::size_t terms, std::int64_t cmax = 4)
{
    std::uniform_int_distribution<std::int64_t> ex(lo, hi), co(-cmax, cmax);
    IntLaurent a(n);
    for (std::size_t i = 0; i < terms; ++i) {
        ExpVec e(n);
        for (std::size_t j = 0; j < n; ++j)
            e[j] = ex(rng);
        a.add_term(e, Integer(static_cast<long>(co(rng))));
    }
    return a;
}

// Value at a rational point with nonzero coordinates.
inline Rational eval_at(const IntLaurent& a, const std::vector<Rational>& x)
{
    Rational s = 0;
    for (const auto& [e, c] : a.terms()) {
        Rational m = c;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::int64_t k = 0; k < e[i]; ++k)
                m *= x[i];
            for (std::int64_t k = 0; k > e[i]; --k)
                m /= x[i];
        }
        s += m;
    }
    return s;
}

// Pascal triangle, independent of the library binomial.
inline std::vector<std::vector<Integer>> pascal(std::size_t n)
{
    std::vector<std::vector<Integer>> t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j)
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
}

inline Integer pas(const std::vector<std::vector<Integer>>& t, std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return 0;
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline IntLaurent x1(std::int64_t e = 1)
{
    return IntLaurent::monomial(ExpVec{e}, 1);
}

inline IntLaurent c1(long c)
{
    return IntLaurent::constant(1, Integer(c));
}

} // namespace testutil
