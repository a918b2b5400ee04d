#include "plinear/engine/evaluate.hpp"

#include "plinear/errors.hpp"

namespace plinear {

namespace {

Residue extract(const std::vector<std::int64_t>& e, const std::vector<std::uint64_t>& v,
                const Modulus& mod)
{
    return Residue(weighted_sum(e, v, mod.value()), mod);
}

} // namespace

std::vector<std::uint64_t> ct_state(const CTScheme& s, const BigIndex& N)
{
    const auto digits = base_p_digits(N, s.p);
    std::vector<std::uint64_t> v = s.init;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        v = s.digit_matrices.at(*it).apply(v);
    return v;
}

Residue eval_ct(const CTScheme& s, const BigIndex& N, EvalTrace* trace)
{
    const auto digits = base_p_digits(N, s.p);
    std::vector<std::uint64_t> v = s.init;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v = s.digit_matrices.at(*it).apply(v);
        if (trace) {
            trace->digits.push_back({static_cast<std::int64_t>(*it)});
            trace->vectors.push_back(v);
        }
    }
    return extract(s.extraction, v, s.modulus);
}

std::vector<std::uint64_t> rat_state(const RatScheme& s, const std::vector<BigIndex>& K)
{
    if (K.size() != s.n)
        throw Error("index has " + std::to_string(K.size()) + " components, scheme has " +
                    std::to_string(s.n) + " variables");
    const auto digits = base_p_digit_vectors(K, s.p);
    std::vector<std::uint64_t> v = s.init;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        v = s.digit_matrix(ExpVec(*it)).apply(v);
    return v;
}

Residue eval_rat(const RatScheme& s, const std::vector<BigIndex>& K, EvalTrace* trace)
{
    if (K.size() != s.n)
        throw Error("index has " + std::to_string(K.size()) + " components, scheme has " +
                    std::to_string(s.n) + " variables");
    const auto digits = base_p_digit_vectors(K, s.p);
    std::vector<std::uint64_t> v = s.init;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v = s.digit_matrix(ExpVec(*it)).apply(v);
        if (trace) {
            trace->digits.push_back(*it);
            trace->vectors.push_back(v);
        }
    }
    return extract(s.extraction, v, s.modulus);
}

} // namespace plinear
