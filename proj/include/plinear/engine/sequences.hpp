#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plinear/engine/oracles.hpp"
#include "plinear/ring/integer.hpp"
#include "plinear/ring/laurent_poly.hpp"

namespace plinear {

enum class SequenceName {
    Apery,
    AperyPrime,
    Franel,
    CentralBinomial,
    MultinomialSquare,
    PowerOf2,
    CustomCt,
    CustomRat,
};

/// A named sequence. `param` is the exponent of franel(l) or the number of
/// parts of multinomial-square(n). Custom sequences carry their polynomials:
/// custom-ct is ct[q g^k]; custom-rat is the diagonal coefficient of Q/P.
struct SequenceSpec {
    SequenceName name = SequenceName::CentralBinomial;
    std::int64_t param = 0;
    std::vector<std::string> vars;
    IntLaurent primary;
    IntLaurent numerator;
};

/// Parses "apery", "apery-prime", "franel(3)", "central-binomial",
/// "multinomial-square(3)", "power-of-2". Custom kinds are built directly.
SequenceSpec parse_sequence_spec(std::string_view text);
std::string to_string(const SequenceSpec& s);

SequenceSpec custom_ct_sequence(const IntLaurent& g, const IntLaurent& q);
SequenceSpec custom_rat_sequence(const IntLaurent& P, const IntLaurent& Q);

/// Exact values a_0..a_K (rational only for apery-prime and custom-rat).
std::vector<Rational> sequence_values(const SequenceSpec& s, std::int64_t K, const OracleCaps& caps = {});

/// Exact integer values; throws if the sequence is not integral.
std::vector<Integer> integer_sequence(const SequenceSpec& s, std::int64_t K, const OracleCaps& caps = {});

/// Direct sums.
std::vector<Integer> apery_numbers(std::int64_t K);
/// A'_k = d/dk of the Apery sum: sum_m binom(k,m)^2 binom(k+m,m)^2 * 2(H_{k+m} - H_{k-m}).
std::vector<Rational> apery_prime_numbers(std::int64_t K);
/// The variant with weights H_k - H_m. It does not satisfy the mod p^2 congruence.
std::vector<Rational> apery_harmonic_tail_numbers(std::int64_t K);
std::vector<Integer> franel_numbers(std::int64_t ell, std::int64_t K);
std::vector<Integer> multinomial_square_numbers(std::int64_t parts, std::int64_t K);

/// Constant-term forms: g with a_k = ct[g^k].
IntLaurent apery_laurent();
IntLaurent franel_laurent(std::int64_t ell);
IntLaurent multinomial_square_laurent(std::int64_t parts);
IntLaurent central_binomial_laurent();

/// (1-x1-x2)(1-x3-x4) - x1x2x3x4, whose diagonal is the Apery sequence.
IntLaurent apery_denominator();

} // namespace plinear
