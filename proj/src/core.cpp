#include "core.hpp"

#include <array>

namespace abr {

namespace {

std::uint64_t width_mask(unsigned n) {
    // n <= 62, so the shift is always in range.
    return (std::uint64_t{1} << n) - 1;
}

std::vector<std::uint64_t> build_bases(unsigned n) {
    std::vector<std::uint64_t> bases;
    bases.reserve(n);
    std::uint64_t odd_sum = 0; // sum of B_j over odd j < i
    for (unsigned i = 0; i < n; ++i) {
        std::uint64_t b;
        if (i < 2 && n > 1)
            b = i + 2;
        else
            b = (std::uint64_t{1} << (i + 1)) - 1 - odd_sum;
        bases.push_back(b);
        if (i % 2 == 1)
            odd_sum += b;
    }
    return bases;
}

// Bit pair (d_{2k+1}, d_{2k}) for base-4 digit c of v, as a 2-bit value.
// The first pair maps through {0, B_1 - B_0, B_0, B_1} = {0, 1, 2, 3};
// every later pair k maps through {0, B_2k, B_{2k+1} - B_2k, B_{2k+1}}
// = 4^k * {0, 1, 2, 3}.
constexpr std::array<std::uint64_t, 4> kFirstPairBits{0b00, 0b11, 0b01, 0b10};
constexpr std::array<std::uint64_t, 4> kRestPairBits{0b00, 0b01, 0b11, 0b10};

void check_value_range(std::uint64_t value, unsigned n) {
    const std::uint64_t max = width_mask(n);
    if (value > max)
        throw RangeError("value " + std::to_string(value) + " exceeds maximum " +
                         std::to_string(max) + " for width " + std::to_string(n));
}

} // namespace

BitString::BitString(std::uint64_t pattern, BitWidth width)
    : pattern_(pattern), width_(width.n) {
    if (pattern_ > width_mask(width_))
        throw RangeError("pattern does not fit in width " + std::to_string(width_));
}

BitString BitString::from_string(std::string_view text) {
    if (text.empty() || text.size() > kMaxWidth)
        throw RangeError("bit string length " + std::to_string(text.size()) +
                         " out of range [1, " + std::to_string(kMaxWidth) + "]");
    std::uint64_t pattern = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw RangeError(std::string("invalid bit character '") + c + "'");
        pattern = (pattern << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(pattern, BitWidth(static_cast<unsigned>(text.size())));
}

unsigned BitString::digit(unsigned i) const {
    if (i >= width_)
        throw RangeError("digit index " + std::to_string(i) + " out of range for width " +
                         std::to_string(width_));
    return static_cast<unsigned>((pattern_ >> i) & 1);
}

std::string BitString::to_string() const {
    std::string text(width_, '0');
    for (unsigned i = 0; i < width_; ++i)
        text[width_ - 1 - i] = static_cast<char>('0' + ((pattern_ >> i) & 1));
    return text;
}

BaseSequence::BaseSequence(std::vector<std::uint64_t> bases, BitWidth width)
    : bases_(std::move(bases)) {
    if (bases_.size() != width.n)
        throw RangeError("base sequence length does not match width");
}

std::uint64_t BaseSequence::at(unsigned i) const {
    if (i >= bases_.size())
        throw RangeError("base index " + std::to_string(i) + " out of range for width " +
                         std::to_string(bases_.size()));
    return bases_[i];
}

BaseSequence compute_bases(BitWidth n) {
    return BaseSequence(build_bases(n.n), n);
}

std::span<const std::uint64_t> bases_for(BitWidth n) {
    // Width 1 stands alone (B_0 = 1); every larger width shares a prefix of
    // the width-62 sequence.
    static const std::vector<std::uint64_t> width1 = build_bases(1);
    static const std::vector<std::uint64_t> full = build_bases(kMaxWidth);
    if (n.n == 1)
        return width1;
    return std::span<const std::uint64_t>(full).first(n.n);
}

unsigned epsilon(unsigned i, const BitString& s) {
    const unsigned n = s.width();
    if (i >= n)
        throw RangeError("index " + std::to_string(i) + " out of range for width " +
                         std::to_string(n));
    if (i % 2 != 0 || i + 2 > n)
        return 0;
    return (s.digit(i) == 1 && s.digit(i + 1) == 1) ? 1 : 0;
}

std::uint64_t decode(const BitString& s) {
    const auto bases = bases_for(BitWidth(s.width()));
    std::int64_t total = 0;
    for (unsigned i = 0; i < s.width(); ++i) {
        if (s.digit(i) == 0)
            continue;
        const auto term = static_cast<std::int64_t>(bases[i]);
        total += epsilon(i, s) ? -term : term;
    }
    return static_cast<std::uint64_t>(total);
}

BitString encode(std::uint64_t value, BitWidth n) {
    check_value_range(value, n.n);
    if (n.n == 1)
        return BitString(value, n);

    std::uint64_t pattern = 0;
    const unsigned pairs = n.n / 2;
    for (unsigned k = 0; k < pairs; ++k) {
        const auto digit4 = (value >> (2 * k)) & 3;
        const auto& map = (k == 0) ? kFirstPairBits : kRestPairBits;
        pattern |= map[digit4] << (2 * k);
    }
    if (n.n % 2 == 1) {
        // Unpaired top index n-1 is even, never sign-flipped, and carries
        // base 2^(n-1); it takes the leading base-4 half digit directly.
        pattern |= ((value >> (n.n - 1)) & 1) << (n.n - 1);
    }
    return BitString(pattern, n);
}

BitString encode_exhaustive(std::uint64_t value, BitWidth n) {
    if (n.n > kMaxSweepWidth)
        throw RangeError("width " + std::to_string(n.n) + " exceeds enumeration guard " +
                         std::to_string(kMaxSweepWidth));
    check_value_range(value, n.n);

    bool found = false;
    std::uint64_t match = 0;
    const std::uint64_t count = std::uint64_t{1} << n.n;
    for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
        if (decode(BitString(pattern, n)) != value)
            continue;
        if (found)
            throw TheoremError("value " + std::to_string(value) + " has multiple width-" +
                               std::to_string(n.n) + " representations");
        found = true;
        match = pattern;
    }
    if (!found)
        throw TheoremError("value " + std::to_string(value) + " has no width-" +
                           std::to_string(n.n) + " representation");
    return BitString(match, n);
}

BitString zero_extend(const BitString& s, BitWidth n) {
    if (n.n < s.width())
        throw RangeError("cannot zero-extend width " + std::to_string(s.width()) +
                         " to smaller width " + std::to_string(n.n));
    return BitString(s.pattern(), n);
}

BitString bns_encode(std::uint64_t value, BitWidth n) {
    check_value_range(value, n.n);
    return BitString(value, n);
}

std::uint64_t bns_decode(const BitString& s) {
    return s.pattern();
}

} // namespace abr
