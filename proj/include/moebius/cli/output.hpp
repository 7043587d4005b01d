#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "moebius/asymptotics.hpp"
#include "moebius/constants.hpp"

namespace moebius::cli {

/// Floats print with 17 significant digits so parsing them back gives the
/// same double, and printing that double again gives the same text.
std::string format_double(double v);

enum class Format { csv, json };

inline constexpr std::string_view kScanCsvHeader = "x,S,M,E,ratio_uncond,ratio_rh,conjecture_mode";

void write_scan(std::ostream& out, std::span<const ScanRow> rows, Format format);
void write_fit(std::ostream& out, const FitResult& fit, Format format);

inline constexpr std::string_view kConstantsHeader = "name,value,tail_bound,prime_limit";

void write_constant(std::ostream& out, std::string_view name, const ConstantEstimate& c);

}  // namespace moebius::cli
