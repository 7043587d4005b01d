#include "moebius/cli/output.hpp"

#include <cmath>
#include <cstdio>

namespace moebius::cli {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_scan(std::ostream& out, std::span<const ScanRow> rows, Format format) {
    if (format == Format::csv) {
        out << kScanCsvHeader << '\n';
        for (const auto& r : rows) {
            out << r.x << ',' << r.S << ',' << format_double(r.M) << ',' << format_double(r.E) << ','
                << format_double(r.ratio_uncond) << ',' << format_double(r.ratio_rh) << ','
                << (r.conjecture_mode ? "true" : "false") << '\n';
        }
        return;
    }
    for (const auto& r : rows) {
        out << "{\"x\":" << r.x << ",\"S\":" << r.S << ",\"M\":" << format_double(r.M)
            << ",\"E\":" << format_double(r.E) << ",\"ratio_uncond\":" << format_double(r.ratio_uncond)
            << ",\"ratio_rh\":" << format_double(r.ratio_rh)
            << ",\"conjecture_mode\":" << (r.conjecture_mode ? "true" : "false") << "}\n";
    }
}

void write_fit(std::ostream& out, const FitResult& fit, Format format) {
    if (format == Format::csv) {
        out << "# fit slope=" << format_double(fit.slope) << " intercept=" << format_double(fit.intercept)
            << " points_used=" << fit.points_used << " residual_rms=" << format_double(fit.residual_rms) << '\n';
        return;
    }
    out << "{\"fit\":true,\"slope\":" << format_double(fit.slope) << ",\"intercept\":" << format_double(fit.intercept)
        << ",\"points_used\":" << fit.points_used << ",\"residual_rms\":" << format_double(fit.residual_rms) << "}\n";
}

void write_constant(std::ostream& out, std::string_view name, const ConstantEstimate& c) {
    out << name << ',' << format_double(c.value) << ',' << format_double(c.tail_bound) << ',' << c.prime_limit << '\n';
}

}  // namespace moebius::cli
