#pragma once

#include <stdexcept>
#include <string>

namespace abr {

// Domain precondition violated (width/value/index out of range).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Exhaustive search found zero or multiple patterns for one value.
// Firing would falsify the representability theorem; it must never happen.
class TheoremError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed compressed container or bitstream.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Stream or file failure, message carries path/offset context.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace abr
