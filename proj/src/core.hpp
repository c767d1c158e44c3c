#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

// Adaptive Base Representation (ABR) number system.
//
// A width-n bit string (d_{n-1} ... d_1 d_0) denotes the value
//
//     v = sum_i (-1)^epsilon(i) * d_i * B_i
//
// where B_i is the per-index base (see compute_bases) and epsilon flips the
// sign of an even-indexed set digit whose left neighbour is also set. For
// every width n the representable set equals {0, ..., 2^n - 1}, each value
// with exactly one representation; verify.hpp checks this exhaustively.
// Plain binary (BNS) codecs are provided as the comparison baseline.

namespace abr {

inline constexpr unsigned kMaxWidth = 62;       // decode sums stay inside int64
inline constexpr unsigned kMaxSweepWidth = 24;  // guard for full 2^n enumerations

/// Validated bit-string width, 1 <= n <= 62.
struct BitWidth {
    unsigned n;

    explicit BitWidth(unsigned width) : n(width) {
        if (n < 1 || n > kMaxWidth)
            throw RangeError("width " + std::to_string(width) + " out of range [1, " +
                             std::to_string(kMaxWidth) + "]");
    }
};

/// Fixed-width string of binary digits. Index 0 is the rightmost (least
/// significant) digit; the text form prints index n-1 first.
class BitString {
public:
    BitString(std::uint64_t pattern, BitWidth width);

    /// Parses a '0'/'1' string, leftmost character = index n-1.
    static BitString from_string(std::string_view text);

    unsigned width() const { return width_; }
    std::uint64_t pattern() const { return pattern_; }

    /// Digit at index i (0 or 1). Throws RangeError if i >= width.
    unsigned digit(unsigned i) const;

    std::string to_string() const;

    bool operator==(const BitString&) const = default;

private:
    std::uint64_t pattern_;
    unsigned width_;
};

/// Per-index base values B_0 ... B_{n-1} for one width.
class BaseSequence {
public:
    BaseSequence(std::vector<std::uint64_t> bases, BitWidth width);

    unsigned width() const { return static_cast<unsigned>(bases_.size()); }
    std::uint64_t at(unsigned i) const;
    std::span<const std::uint64_t> values() const { return bases_; }

private:
    std::vector<std::uint64_t> bases_;
};

/// Base values from the literal recursive definition:
/// B_i = i+2 for i in {0,1} when n > 1, otherwise
/// B_i = 2^(i+1) - 1 - sum of B_j over odd j < i.
BaseSequence compute_bases(BitWidth n);

/// Cached, shared view of the same values. Read-only after first use.
std::span<const std::uint64_t> bases_for(BitWidth n);

/// Sign-flip corrective term: 1 iff i is even, i <= n-2, d_i = 1 and
/// d_{i+1} = 1; otherwise 0. Keeps runs of consecutive ones from
/// over-representing.
unsigned epsilon(unsigned i, const BitString& s);

/// Value of an ABR bit string. Always lands in [0, 2^width - 1].
std::uint64_t decode(const BitString& s);

/// Unique width-n ABR representation of v. O(n), pair-digit construction;
/// agrees with encode_exhaustive everywhere both are defined.
BitString encode(std::uint64_t value, BitWidth n);

/// Independent oracle: enumerates all 2^n patterns and returns the one that
/// decodes to v. Throws TheoremError on zero or multiple matches. n <= 24.
BitString encode_exhaustive(std::uint64_t value, BitWidth n);

/// Same digits with zeros prepended at indices >= s.width(). Requires
/// n >= s.width(). Value-preserving for source widths >= 2 only (B_0
/// differs between widths 1 and 2).
BitString zero_extend(const BitString& s, BitWidth n);

/// Plain positional base-2 codec, the comparison baseline.
BitString bns_encode(std::uint64_t value, BitWidth n);
std::uint64_t bns_decode(const BitString& s);

} // namespace abr
