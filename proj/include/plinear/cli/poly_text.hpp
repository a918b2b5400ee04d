#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plinear/ring/laurent_poly.hpp"

namespace plinear {

/// Parse an integer Laurent polynomial.
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' ['-'] int)?
///   base   := int | var | '1/' var | '(' expr ')'
///
/// Negative exponents are only allowed on monomials with unit coefficient.
/// Throws ParseError carrying the byte offset of the offending token.
IntLaurent parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Canonical text that parse_poly maps back to the same polynomial.
std::string format_poly(const IntLaurent& a, const std::vector<std::string>& vars);

/// Split "x,y,z" into names; rejects empty or malformed names.
std::vector<std::string> parse_var_list(std::string_view text);

} // namespace plinear
