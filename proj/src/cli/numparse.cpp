#include "moebius/cli/numparse.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "moebius/error.hpp"

namespace moebius::cli {

std::uint64_t parse_integer_flag(std::string_view text) {
    const std::string shown(text);
    auto fail = [&](const char* why) { return DomainError("invalid integer '" + shown + "': " + why); };
    if (text.empty()) throw fail("empty");

    std::string_view mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        std::string_view exp_text = text.substr(e + 1);
        bool negative = false;
        if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
            negative = exp_text[0] == '-';
            exp_text.remove_prefix(1);
        }
        if (exp_text.empty() || exp_text.size() > 4) throw fail("bad exponent");
        for (char c : exp_text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("bad exponent");
            exponent = exponent * 10 + (c - '0');
        }
        if (negative) exponent = -exponent;
    }

    // Collect mantissa digits; a decimal point shifts the exponent.
    std::string digits;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_point) throw fail("two decimal points");
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) --exponent;
        } else {
            throw fail("not a nonnegative number");
        }
    }
    if (digits.empty()) throw fail("no digits");

    // Drop trailing zeros that a negative exponent consumes.
    while (exponent < 0 && digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
        ++exponent;
    }
    if (exponent < 0) {
        bool all_zero = digits.find_first_not_of('0') == std::string::npos;
        if (!all_zero) throw fail("not an integer");
        return 0;
    }

    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value = 0;
    auto push_digit = [&](unsigned d) {
        if (value > (kMax - d) / 10) throw fail("too large");
        value = value * 10 + d;
    };
    for (char c : digits) push_digit(unsigned(c - '0'));
    for (long i = 0; i < exponent; ++i) {
        if (value == 0) break;
        push_digit(0);
    }
    return value;
}

}  // namespace moebius::cli
