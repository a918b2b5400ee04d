#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "plinear/ring/integer.hpp"

namespace plinear {

/// Non-negative index of arbitrary size.
using BigIndex = Integer;

/// Parse a non-negative decimal integer (digits only, surrounding blanks allowed).
BigIndex parse_index(std::string_view text);

/// Parse "k1,k2,...".
std::vector<BigIndex> parse_multi_index(std::string_view text);

/// Base-p digits, least significant first. Zero has the single digit 0.
std::vector<std::uint64_t> base_p_digits(const BigIndex& n, std::uint64_t p);

/// Componentwise digits of a multi-index, padded with zeros to a common
/// length. Entry i is the digit vector of weight p^i.
std::vector<std::vector<std::int64_t>> base_p_digit_vectors(const std::vector<BigIndex>& k,
                                                             std::uint64_t p);

} // namespace plinear
