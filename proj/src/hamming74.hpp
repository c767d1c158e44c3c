#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

// Hamming(7,4) single-error-correcting codec, even parity, codeword layout
// d4 d3 d2 p3 d1 p2 p1 over bit positions 7..1. The machinery is identical
// for data nibbles produced by either number system; the tag only labels
// demo output.

namespace abr {

enum class NumberSystem { Bns, Abr };

/// Four data bits d4 d3 d2 d1 (d4 leftmost), stored with d1 as bit 0.
struct DataNibble {
    std::uint8_t bits;
    NumberSystem system;

    DataNibble(std::uint8_t data_bits, NumberSystem tag);

    /// d_k for k in 1..4.
    unsigned d(unsigned k) const;
    std::string to_string() const; // "d4 d3 d2 d1" order, e.g. "1011"
};

/// Seven codeword bits; bit k of the stored byte is position k+1.
class Codeword7 {
public:
    explicit Codeword7(std::uint8_t bits);
    static Codeword7 from_string(std::string_view text); // position 7 first

    std::uint8_t bits() const { return bits_; }
    unsigned at_position(unsigned p) const; // p in 1..7
    Codeword7 with_flip(unsigned p) const;

    std::string to_string() const; // position 7 first

    bool operator==(const Codeword7&) const = default;

private:
    std::uint8_t bits_;
};

struct Syndrome {
    unsigned s1, s2, s3;
    unsigned error_position() const { return s3 * 4 + s2 * 2 + s1; } // 0 = clean
};

struct CorrectionResult {
    Codeword7 corrected;
    std::uint8_t data_bits; // d4 d3 d2 d1 as a 4-bit value
    unsigned error_position;
};

/// p1 = parity(d4,d2,d1), p2 = parity(d4,d3,d1), p3 = parity(d4,d3,d2).
Codeword7 h74_encode(const DataNibble& d);

/// s1 over positions {1,3,5,7}, s2 over {2,3,6,7}, s3 over {4,5,6,7}.
Syndrome h74_syndrome(const Codeword7& c);

/// Flips the syndrome-indicated position (if any) and extracts the data
/// bits. Assumes at most one flipped bit; double errors miscorrect.
CorrectionResult h74_correct(const Codeword7& c);

/// Step-by-step demo text: parity construction for `value` in the tagged
/// system, followed by the correction walk when flip_position is 1..7.
std::string render_demo(std::uint64_t value, NumberSystem system, unsigned flip_position);

} // namespace abr
