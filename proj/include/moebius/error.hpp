#pragma once

#include <stdexcept>
#include <string>

namespace moebius {

// Argument outside the mathematical domain of an operation (n = 0, k < 2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Exact arithmetic overflowed, or a requested tolerance cannot be met.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A request would exceed a fixed size guard (segment length, divisor blowup).
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A numeric range precondition failed (x too large, unsorted checkpoints).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace moebius
