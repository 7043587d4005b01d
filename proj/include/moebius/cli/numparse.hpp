#pragma once

#include <cstdint>
#include <string_view>

namespace moebius::cli {

/// Parses a nonnegative integer flag. Plain digits and decimal scientific
/// notation ("1e8", "2.5e3") are accepted as long as the value is an exact
/// integer below 2^64; anything fractional ("1.5", "1e-3") is rejected with
/// DomainError.
std::uint64_t parse_integer_flag(std::string_view text);

}  // namespace moebius::cli
