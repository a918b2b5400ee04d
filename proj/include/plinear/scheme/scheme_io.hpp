#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "plinear/scheme/schemes.hpp"

namespace plinear {

using AnyScheme = std::variant<CTScheme, RatScheme>;

inline constexpr int kSchemeFormatVersion = 1;

/// Canonical JSON text (sorted keys, no insignificant whitespace, trailing newline).
std::string scheme_to_json(const CTScheme& s);
std::string scheme_to_json(const RatScheme& s);
std::string scheme_to_json(const AnyScheme& s);

/// Parses and validates; throws SchemeFormatError.
AnyScheme scheme_from_json(std::string_view text);

void save_scheme(const AnyScheme& s, const std::filesystem::path& path);
AnyScheme load_scheme(const std::filesystem::path& path);

} // namespace plinear
