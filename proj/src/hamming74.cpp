#include "hamming74.hpp"

#include <iomanip>
#include <sstream>

#include "core.hpp"

namespace abr {

namespace {

// Position -> role in the layout d4 d3 d2 p3 d1 p2 p1 (positions 7..1).
constexpr unsigned kPosD1 = 3, kPosD2 = 5, kPosD3 = 6, kPosD4 = 7;
constexpr unsigned kPosP1 = 1, kPosP2 = 2, kPosP3 = 4;

std::string spaced(std::string_view compact) {
    std::string out;
    for (std::size_t i = 0; i < compact.size(); ++i) {
        if (i)
            out += ' ';
        out += compact[i];
    }
    return out;
}

const char* system_name(NumberSystem s) {
    return s == NumberSystem::Abr ? "abr" : "bns";
}

class StepTable {
public:
    void add(std::string description, std::string content) {
        rows_.push_back({std::move(description), std::move(content)});
    }

    void render(std::ostream& out) const {
        std::size_t desc_width = 0;
        for (const auto& row : rows_)
            desc_width = std::max(desc_width, row.first.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            out << std::setw(2) << (i + 1) << "  " << std::left
                << std::setw(static_cast<int>(desc_width)) << rows_[i].first << std::right
                << "  " << rows_[i].second << '\n';
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

} // namespace

DataNibble::DataNibble(std::uint8_t data_bits, NumberSystem tag)
    : bits(data_bits), system(tag) {
    if (bits > 0xF)
        throw RangeError("data nibble " + std::to_string(data_bits) + " exceeds 4 bits");
}

unsigned DataNibble::d(unsigned k) const {
    if (k < 1 || k > 4)
        throw RangeError("data bit index " + std::to_string(k) + " out of range [1, 4]");
    return (bits >> (k - 1)) & 1;
}

std::string DataNibble::to_string() const {
    std::string out;
    for (unsigned k = 4; k >= 1; --k)
        out += static_cast<char>('0' + d(k));
    return out;
}

Codeword7::Codeword7(std::uint8_t bits) : bits_(bits) {
    if (bits_ > 0x7F)
        throw RangeError("codeword " + std::to_string(bits) + " exceeds 7 bits");
}

Codeword7 Codeword7::from_string(std::string_view text) {
    if (text.size() != 7)
        throw RangeError("codeword must be exactly 7 bits, got " + std::to_string(text.size()));
    std::uint8_t bits = 0;
    for (unsigned p = 7; p >= 1; --p) {
        const char c = text[7 - p];
        if (c != '0' && c != '1')
            throw RangeError(std::string("invalid bit character '") + c + "'");
        bits |= static_cast<std::uint8_t>((c - '0') << (p - 1));
    }
    return Codeword7(bits);
}

unsigned Codeword7::at_position(unsigned p) const {
    if (p < 1 || p > 7)
        throw RangeError("bit position " + std::to_string(p) + " out of range [1, 7]");
    return (bits_ >> (p - 1)) & 1;
}

Codeword7 Codeword7::with_flip(unsigned p) const {
    if (p < 1 || p > 7)
        throw RangeError("bit position " + std::to_string(p) + " out of range [1, 7]");
    return Codeword7(static_cast<std::uint8_t>(bits_ ^ (1u << (p - 1))));
}

std::string Codeword7::to_string() const {
    std::string out;
    for (unsigned p = 7; p >= 1; --p)
        out += static_cast<char>('0' + at_position(p));
    return out;
}

Codeword7 h74_encode(const DataNibble& d) {
    const unsigned p1 = d.d(4) ^ d.d(2) ^ d.d(1);
    const unsigned p2 = d.d(4) ^ d.d(3) ^ d.d(1);
    const unsigned p3 = d.d(4) ^ d.d(3) ^ d.d(2);
    std::uint8_t bits = 0;
    bits |= static_cast<std::uint8_t>(d.d(1) << (kPosD1 - 1));
    bits |= static_cast<std::uint8_t>(d.d(2) << (kPosD2 - 1));
    bits |= static_cast<std::uint8_t>(d.d(3) << (kPosD3 - 1));
    bits |= static_cast<std::uint8_t>(d.d(4) << (kPosD4 - 1));
    bits |= static_cast<std::uint8_t>(p1 << (kPosP1 - 1));
    bits |= static_cast<std::uint8_t>(p2 << (kPosP2 - 1));
    bits |= static_cast<std::uint8_t>(p3 << (kPosP3 - 1));
    return Codeword7(bits);
}

Syndrome h74_syndrome(const Codeword7& c) {
    const auto parity4 = [&c](unsigned a, unsigned b, unsigned d, unsigned e) {
        return c.at_position(a) ^ c.at_position(b) ^ c.at_position(d) ^ c.at_position(e);
    };
    return Syndrome{
        parity4(1, 3, 5, 7),
        parity4(2, 3, 6, 7),
        parity4(4, 5, 6, 7),
    };
}

CorrectionResult h74_correct(const Codeword7& c) {
    const unsigned position = h74_syndrome(c).error_position();
    const Codeword7 fixed = position ? c.with_flip(position) : c;
    std::uint8_t data = 0;
    data |= static_cast<std::uint8_t>(fixed.at_position(kPosD1) << 0);
    data |= static_cast<std::uint8_t>(fixed.at_position(kPosD2) << 1);
    data |= static_cast<std::uint8_t>(fixed.at_position(kPosD3) << 2);
    data |= static_cast<std::uint8_t>(fixed.at_position(kPosD4) << 3);
    return CorrectionResult{fixed, data, position};
}

std::string render_demo(std::uint64_t value, NumberSystem system, unsigned flip_position) {
    if (value > 0xF)
        throw RangeError("demo value " + std::to_string(value) + " exceeds maximum 15");
    if (flip_position > 7)
        throw RangeError("bit position " + std::to_string(flip_position) +
                         " out of range [1, 7]");

    const BitString data_bits = system == NumberSystem::Abr
                                    ? encode(value, BitWidth(4))
                                    : bns_encode(value, BitWidth(4));
    const DataNibble nibble(static_cast<std::uint8_t>(data_bits.pattern()), system);
    const Codeword7 codeword = h74_encode(nibble);

    std::ostringstream out;

    StepTable build;
    build.add("data bits (" + std::string(system_name(system)) + " encoding of " +
                  std::to_string(value) + ")",
              spaced(nibble.to_string()));
    build.add("data bit order", "d4 d3 d2 d1");
    build.add("codeword layout", "d4 d3 d2 p3 d1 p2 p1");
    build.add("bit positions", "7 6 5 4 3 2 1");
    {
        std::string placed;
        placed += static_cast<char>('0' + nibble.d(4));
        placed += ' ';
        placed += static_cast<char>('0' + nibble.d(3));
        placed += ' ';
        placed += static_cast<char>('0' + nibble.d(2));
        placed += " _ ";
        placed += static_cast<char>('0' + nibble.d(1));
        placed += " _ _";
        build.add("data placed, parity open", placed);
    }
    build.add("p1 = parity(d4, d2, d1)", std::to_string(codeword.at_position(kPosP1)));
    build.add("p2 = parity(d4, d3, d1)", std::to_string(codeword.at_position(kPosP2)));
    build.add("p3 = parity(d4, d3, d2)", std::to_string(codeword.at_position(kPosP3)));
    build.add("codeword", spaced(codeword.to_string()));
    build.render(out);

    if (flip_position == 0)
        return out.str();

    const Codeword7 received = codeword.with_flip(flip_position);
    const Syndrome syndrome = h74_syndrome(received);
    const CorrectionResult result = h74_correct(received);

    out << '\n';
    StepTable fix;
    fix.add("received codeword (position " + std::to_string(flip_position) + " flipped)",
            spaced(received.to_string()));
    fix.add("codeword layout", "d4 d3 d2 p3 d1 p2 p1");
    fix.add("bit positions", "7 6 5 4 3 2 1");
    fix.add("s1 depends on", "d4 d2 d1 p1");
    fix.add("s1", std::to_string(syndrome.s1));
    fix.add("s2 depends on", "d4 d3 d1 p2");
    fix.add("s2", std::to_string(syndrome.s2));
    fix.add("s3 depends on", "d4 d3 d2 p3");
    fix.add("s3", std::to_string(syndrome.s3));
    fix.add("error position (s3 s2 s1)", std::to_string(syndrome.error_position()));
    fix.add("corrected codeword", spaced(result.corrected.to_string()));
    fix.add("corrected data bits", spaced(DataNibble(result.data_bits, system).to_string()));

    const std::uint64_t recovered =
        system == NumberSystem::Abr
            ? decode(BitString(result.data_bits, BitWidth(4)))
            : bns_decode(BitString(result.data_bits, BitWidth(4)));
    fix.add("data bits decode to " + std::to_string(value),
            recovered == value ? "yes" : "no");
    fix.render(out);

    return out.str();
}

} // namespace abr
