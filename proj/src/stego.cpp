#include "stego.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "core.hpp"

namespace abr {

namespace {

struct NibbleMaps {
    std::array<std::uint8_t, 16> enc; // nibble value -> ABR pattern
    std::array<std::uint8_t, 16> dec; // ABR pattern -> nibble value
};

const NibbleMaps& nibble_maps() {
    static const NibbleMaps maps = [] {
        NibbleMaps m{};
        for (std::uint8_t v = 0; v < 16; ++v) {
            const auto pattern = static_cast<std::uint8_t>(encode(v, BitWidth(4)).pattern());
            m.enc[v] = pattern;
            m.dec[pattern] = v;
        }
        return m;
    }();
    return maps;
}

template <typename Map>
std::uint8_t transform_byte(std::uint8_t b, StegoMask mask, const Map& map) {
    std::uint8_t low = b & 0x0F;
    std::uint8_t high = (b >> 4) & 0x0F;
    if (mask == StegoMask::LowAbr || mask == StegoMask::BothAbr)
        low = map[low];
    if (mask == StegoMask::HighAbr || mask == StegoMask::BothAbr)
        high = map[high];
    return static_cast<std::uint8_t>((high << 4) | low);
}

std::uint64_t transform_stream(std::istream& in, std::ostream& out, StegoMask mask,
                               bool extracting) {
    const auto& maps = nibble_maps();
    std::uint64_t offset = 0;
    std::array<char, 64 * 1024> buffer;
    while (in) {
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        const auto got = in.gcount();
        if (in.bad())
            throw IoError("read failed at offset " + std::to_string(offset));
        for (std::streamsize i = 0; i < got; ++i) {
            const auto b = static_cast<std::uint8_t>(buffer[static_cast<std::size_t>(i)]);
            buffer[static_cast<std::size_t>(i)] = static_cast<char>(
                extracting ? transform_byte(b, mask, maps.dec)
                           : transform_byte(b, mask, maps.enc));
        }
        out.write(buffer.data(), got);
        if (!out)
            throw IoError("write failed at offset " + std::to_string(offset));
        offset += static_cast<std::uint64_t>(got);
    }
    return offset;
}

std::uint64_t transform_file(const std::filesystem::path& in_path,
                             const std::filesystem::path& out_path, StegoMask mask,
                             bool extracting) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in)
        throw IoError("cannot open input file: " + in_path.string());
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open output file: " + out_path.string());
    const auto count = transform_stream(in, out, mask, extracting);
    out.flush();
    if (!out)
        throw IoError("write failed: " + out_path.string());
    return count;
}

} // namespace

StegoMask mask_from_name(std::string_view name) {
    if (name == "none")
        return StegoMask::None;
    if (name == "low-abr")
        return StegoMask::LowAbr;
    if (name == "high-abr")
        return StegoMask::HighAbr;
    if (name == "both-abr")
        return StegoMask::BothAbr;
    throw RangeError("unknown mask '" + std::string(name) +
                     "' (expected none|low-abr|high-abr|both-abr)");
}

std::string_view mask_name(StegoMask mask) {
    switch (mask) {
    case StegoMask::None:
        return "none";
    case StegoMask::LowAbr:
        return "low-abr";
    case StegoMask::HighAbr:
        return "high-abr";
    case StegoMask::BothAbr:
        return "both-abr";
    }
    throw RangeError("invalid mask value");
}

std::uint8_t embed_byte(std::uint8_t b, StegoMask mask) {
    return transform_byte(b, mask, nibble_maps().enc);
}

std::uint8_t extract_byte(std::uint8_t b, StegoMask mask) {
    return transform_byte(b, mask, nibble_maps().dec);
}

std::uint64_t embed_stream(std::istream& in, std::ostream& out, StegoMask mask) {
    return transform_stream(in, out, mask, false);
}

std::uint64_t extract_stream(std::istream& in, std::ostream& out, StegoMask mask) {
    return transform_stream(in, out, mask, true);
}

std::uint64_t embed_file(const std::filesystem::path& in, const std::filesystem::path& out,
                         StegoMask mask) {
    return transform_file(in, out, mask, false);
}

std::uint64_t extract_file(const std::filesystem::path& in, const std::filesystem::path& out,
                           StegoMask mask) {
    return transform_file(in, out, mask, true);
}

} // namespace abr
