#pragma once

#include <cstdint>
#include <vector>

#include "plinear/engine/index.hpp"
#include "plinear/ring/residue.hpp"
#include "plinear/scheme/schemes.hpp"

namespace plinear {

/// Digits consumed (most significant first) and the state vector after each step.
struct EvalTrace {
    std::vector<std::vector<std::int64_t>> digits;
    std::vector<std::vector<std::uint64_t>> vectors;
};

/// a_N mod p^r via v = M_{d_0} ... M_{d_m} init.
Residue eval_ct(const CTScheme& s, const BigIndex& N, EvalTrace* trace = nullptr);

/// a_K mod p^r for a multi-index K.
Residue eval_rat(const RatScheme& s, const std::vector<BigIndex>& K, EvalTrace* trace = nullptr);

/// State vector reached after consuming the digits of N.
std::vector<std::uint64_t> ct_state(const CTScheme& s, const BigIndex& N);
std::vector<std::uint64_t> rat_state(const RatScheme& s, const std::vector<BigIndex>& K);

} // namespace plinear
