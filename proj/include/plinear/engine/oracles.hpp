#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plinear/ring/exp_vec.hpp"
#include "plinear/ring/integer.hpp"
#include "plinear/ring/laurent_poly.hpp"
#include "plinear/scheme/schemes.hpp"

namespace plinear {

/// Limits for the brute-force oracles.
struct OracleCaps {
    std::int64_t ct_k_low_dim = 2000;  // n <= 2
    std::int64_t ct_k_high_dim = 200;  // n >= 3
    std::int64_t series_degree = 120;  // total degree of exact series coefficients
    std::size_t max_cells = 40'000'000;
    std::size_t max_exact_cells = 4'000'000;
};

/// Max power k allowed for an n-variable constant-term oracle.
std::int64_t ct_cap(const OracleCaps& caps, std::size_t n);

/// table[j][i] = coefficient of x^targets[i] in g^j, j = 0..K.
std::vector<std::vector<Integer>> power_coeff_table(const IntLaurent& g,
                                                    const std::vector<ExpVec>& targets,
                                                    std::int64_t K, const OracleCaps& caps = {});

/// Same, reduced mod m.
std::vector<std::vector<std::uint64_t>> power_coeff_table_mod(const IntLaurent& g,
                                                              const std::vector<ExpVec>& targets,
                                                              std::int64_t K, std::uint64_t m,
                                                              const OracleCaps& caps = {});

/// ct[x^u q g^k], exactly.
Integer ct_oracle(const IntLaurent& g, const IntLaurent& q, const ExpVec& u, std::int64_t k,
                  const OracleCaps& caps = {});

/// ct[q g^k] for k = 0..K.
std::vector<Integer> ct_sequence(const IntLaurent& g, const IntLaurent& q, std::int64_t K,
                                 const OracleCaps& caps = {});
std::vector<std::uint64_t> ct_sequence_mod(const IntLaurent& g, const IntLaurent& q, std::int64_t K,
                                           std::uint64_t m, const OracleCaps& caps = {});

/// Power-series coefficients on the box [0, bounds]. Entries are stored in
/// lexicographic order of the exponent.
template <typename T>
struct SeriesGrid {
    std::vector<std::int64_t> bounds;
    std::vector<std::size_t> stride;
    std::vector<T> values;

    bool inside(const ExpVec& k) const
    {
        for (std::size_t i = 0; i < bounds.size(); ++i)
            if (k[i] < 0 || k[i] > bounds[i])
                return false;
        return true;
    }

    std::size_t index(const ExpVec& k) const
    {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < bounds.size(); ++i)
            idx += static_cast<std::size_t>(k[i]) * stride[i];
        return idx;
    }

    const T& at(const ExpVec& k) const { return values.at(index(k)); }
};

/// 1/D on the box, mod m (requires gcd(D(0), m) = 1).
SeriesGrid<std::uint64_t> inverse_series_mod(const IntLaurent& D, const std::vector<std::int64_t>& bounds,
                                             std::uint64_t m, const OracleCaps& caps = {});

/// 1/D on the box, exactly (requires D(0) != 0).
SeriesGrid<Rational> inverse_series(const IntLaurent& D, const std::vector<std::int64_t>& bounds,
                                    const OracleCaps& caps = {});

/// Coefficient of x^K in Q/P, exactly.
Rational series_oracle(const IntLaurent& P, const IntLaurent& Q, const std::vector<std::int64_t>& K,
                       const OracleCaps& caps = {});

/// Exact state vector at index k: entry (l,u) is binom(rho+k-l-1, k-l) ct[x^u g^(k-l)].
std::vector<Integer> state_vector_oracle(const CTScheme& s, std::int64_t k, const OracleCaps& caps = {});

/// Exact state vector at multi-index k: entry u is the coefficient of x^k in x^u/P^rho.
std::vector<Rational> state_vector_oracle(const RatScheme& s, const std::vector<std::int64_t>& k,
                                          const OracleCaps& caps = {});

/// State vectors mod p^r for k = 0..K.
std::vector<std::vector<std::uint64_t>> ct_state_vectors_mod(const CTScheme& s, std::int64_t K,
                                                             const OracleCaps& caps = {});

/// Rational number a/b mod m (b must be invertible).
std::uint64_t rational_mod(const Rational& q, std::uint64_t m);

struct CartierIdentityResult {
    bool ok = true;
    std::size_t compared = 0;
    std::string detail;
};

/// Compares C(A/(1-tg)^rho) with N/(1-t^p g)^rho mod p^r through t^torder,
/// N from cartier_reduce.
CartierIdentityResult cartier_identity_ct(const IntLaurent& g, const IntLaurent& A, std::uint64_t p,
                                          unsigned r, std::int64_t torder);

/// Compares C(A/P^rho) with N/P^rho mod p^r on the box [0, xorder]^n.
CartierIdentityResult cartier_identity_rat(const IntLaurent& P, const IntLaurent& A, std::uint64_t p,
                                           unsigned r, std::int64_t xorder,
                                           const OracleCaps& caps = {});

} // namespace plinear
