#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plinear/engine/oracles.hpp"
#include "plinear/engine/sequences.hpp"
#include "plinear/scheme/schemes.hpp"

namespace plinear {

struct Failure {
    std::string k;
    std::string l;
    std::string lhs;
    std::string rhs;
    std::string note;
};

/// Outcome of a verification sweep. Only the first few failures are kept.
struct Report {
    static constexpr std::size_t kMaxRecorded = 20;

    std::string title;
    std::size_t checked = 0;
    std::size_t failure_count = 0;
    std::vector<Failure> failures;

    bool ok() const noexcept { return failure_count == 0; }
    void fail(Failure f);
    void merge(const Report& other);

    std::string text() const;
    std::string json() const;
};

/// a_{kp+l} = M_l a_k mod p^r against oracle state vectors for every index
/// N = kp+l <= kmax, and eval(N) against the target sequence for N <= kmax.
Report verify_scheme(const CTScheme& s, std::int64_t kmax, const OracleCaps& caps = {});

/// Same over the multi-index box [0, kmax]^n.
Report verify_scheme(const RatScheme& s, std::int64_t kmax, const OracleCaps& caps = {});

/// a_N = prod a_{d_i} mod p over the base-p digits of N, N <= kmax.
Report lucas_check(const SequenceSpec& seq, std::uint64_t p, std::int64_t kmax, const OracleCaps& caps = {});

/// A_{kp+l} = A_l A_k + p A'_l k A_k mod p^2 for k <= kmax, l < p.
Report gessel_check(std::uint64_t p, std::int64_t kmax);

/// The two-state mod p^2 scheme for 2^k and k 2^k, k <= kmax, l < p.
Report two_state_power_check(std::uint64_t p, std::int64_t kmax = 500);

/// F_u(t) = sum_v H_uv(t) F_v(t^p) mod p, compared through t^K.
Report verify_hasse_witt(const IntLaurent& g, std::uint64_t p, std::int64_t K, const OracleCaps& caps = {});

} // namespace plinear
