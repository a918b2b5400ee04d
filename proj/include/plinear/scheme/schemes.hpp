#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "plinear/cartier/cartier.hpp"
#include "plinear/polytope/polytope.hpp"
#include "plinear/ring/laurent_poly.hpp"
#include "plinear/ring/residue.hpp"
#include "plinear/ring/tpoly.hpp"
#include "plinear/scheme/residue_matrix.hpp"

namespace plinear {

/// Where a scheme came from: variable names and the defining polynomials
/// (g, q for constant-term schemes; P, Q for rational ones).
struct SchemeSource {
    std::vector<std::string> vars;
    IntLaurent primary;
    IntLaurent numerator;

    friend bool operator==(const SchemeSource&, const SchemeSource&) = default;
};

struct BuildOptions {
    unsigned threads = 1;
};

/// State t^ell F_u of a constant-term scheme.
struct CTState {
    std::int64_t ell = 0;
    ExpVec u;

    friend bool operator==(const CTState&, const CTState&) = default;
    friend auto operator<=>(const CTState&, const CTState&) = default;
};

/// p-linear scheme for ct[q g^k] mod p^r. The transition matrix
/// M(t) = sum_d M_d t^d is stored as its digit matrices M_0..M_{p-1}; states
/// are ordered by ell, then u lexicographically.
struct CTScheme {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::int64_t rho = 0;
    std::size_t n = 0;
    Modulus modulus;
    std::vector<CTState> states;
    std::vector<ResidueMatrix> digit_matrices;
    std::vector<std::uint64_t> init;
    std::vector<std::int64_t> extraction;
    SchemeSource source;

    std::size_t size() const noexcept { return states.size(); }

    /// The t-polynomial M(t)[i][j].
    TPoly<Residue> entry(std::size_t i, std::size_t j) const;

    /// Number of lattice points of rho*Delta° (states / rho).
    std::size_t interior_point_count() const noexcept
    {
        return rho > 0 ? states.size() / static_cast<std::size_t>(rho) : 0;
    }

    friend bool operator==(const CTScheme&, const CTScheme&) = default;
};

/// Scheme for the coefficients a_k of Q/P mod p^r with multi-index k. The
/// digit matrices Lambda_ell, ell in [0,p)^n, are computed on first use and
/// memoized; copies share the memo.
class RatScheme {
public:
    RatScheme() = default;

    std::uint64_t p = 0;
    unsigned r = 0;
    std::int64_t rho = 0;
    std::size_t n = 0;
    Modulus modulus;
    std::vector<ExpVec> states;
    std::vector<std::uint64_t> init;
    std::vector<std::int64_t> extraction;
    SchemeSource source;

    std::size_t size() const noexcept { return states.size(); }

    /// Lambda_ell with entry (u, v) = lambda_{u,v,ell}. Thread-safe.
    const ResidueMatrix& digit_matrix(const ExpVec& ell) const;

    /// Snapshot of the memoized digit matrices.
    std::map<ExpVec, ResidueMatrix> memoized() const;

    /// Seed the memo (used when loading a file).
    void seed_digit_matrix(const ExpVec& ell, ResidueMatrix m);

    /// Product of degrees of P in each variable.
    std::int64_t degree_product() const;

    friend bool operator==(const RatScheme& a, const RatScheme& b);

private:
    struct Lazy {
        std::mutex mu;
        std::map<ExpVec, ResidueMatrix> memo;
        std::shared_ptr<const CartierContext<Integer>> ctx;
        std::shared_ptr<const StateRegion> region;
    };

    ResidueMatrix compute_digit_matrix(const ExpVec& ell, const CartierContext<Integer>& ctx,
                                       const StateRegion& region) const;

    std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

/// Hasse-Witt matrix over Z/p indexed by the interior lattice points.
struct HasseWitt {
    std::uint64_t p = 0;
    LatticePointSet points;
    std::vector<std::vector<TPoly<Residue>>> H;
};

/// Constant-term scheme for ct[q g^k] mod p^r (q defaults to 1).
CTScheme build_ct_scheme(const IntLaurent& g, const IntLaurent& q, std::uint64_t p, unsigned r,
                         const std::vector<std::string>& vars, const BuildOptions& opts = {});

/// Scheme for the power-series coefficients of Q/P mod p^r.
RatScheme build_rat_scheme(const IntLaurent& P, const IntLaurent& Q, std::uint64_t p, unsigned r,
                           const std::vector<std::string>& vars);

/// Lambda_ell of a rational scheme (memoized).
inline const ResidueMatrix& rat_digit_matrix(const RatScheme& s, const ExpVec& ell)
{
    return s.digit_matrix(ell);
}

/// H_uv(t) = coefficient of x^(p v - u) in (1 - t g)^(p-1), mod p.
HasseWitt build_hasse_witt(const IntLaurent& g, std::uint64_t p);

/// Default variable names x1..xn.
std::vector<std::string> default_vars(std::size_t n);

} // namespace plinear
