#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "stego.hpp"

// Minimal byte-oriented Huffman codec with canonical codes, used to show
// that a base-independent compressor is indifferent to the number system the
// bytes were written in: any per-byte bijection (the ABR transform included)
// permutes the frequency table and leaves the payload bit-length unchanged.

namespace abr {

using FrequencyTable = std::array<std::uint64_t, 256>;

FrequencyTable build_frequency_table(std::span<const std::uint8_t> data);

/// Canonical prefix code; lengths[s] == 0 means symbol s is absent.
struct PrefixCode {
    std::array<std::uint8_t, 256> lengths{};
    std::array<std::uint64_t, 256> codes{};

    std::string code_string(std::uint8_t symbol) const;
    bool operator==(const PrefixCode&) const = default;
};

/// Two-least-frequent merge with deterministic ties: among equal
/// frequencies, leaves win by lower symbol value, then internal nodes by
/// creation order. Throws RangeError on an all-zero table.
PrefixCode huffman_build(const FrequencyTable& freq);

struct CompressedBlock {
    PrefixCode code;
    std::vector<std::uint8_t> payload;
    std::uint64_t payload_bits = 0;

    unsigned pad_bits() const { return static_cast<unsigned>((8 - payload_bits % 8) % 8); }
};

CompressedBlock huffman_compress(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> huffman_decompress(const CompressedBlock& block);

// Container layout: "ABRH", version byte, 256 code lengths, pad length,
// payload bytes (most significant bit first).
inline constexpr std::array<std::uint8_t, 4> kContainerMagic{'A', 'B', 'R', 'H'};
inline constexpr std::uint8_t kContainerVersion = 1;

std::vector<std::uint8_t> to_container(const CompressedBlock& block);
CompressedBlock from_container(std::span<const std::uint8_t> bytes);

struct FileSizes {
    std::uint64_t in_bytes;
    std::uint64_t out_bytes;
};

FileSizes compress_file(const std::filesystem::path& in, const std::filesystem::path& out);
FileSizes decompress_file(const std::filesystem::path& in, const std::filesystem::path& out);

/// Payload bit-length (sum of freq * code length) without materializing
/// the encoded stream.
std::uint64_t compressed_payload_bits(std::span<const std::uint8_t> data);

struct CompareReport {
    std::uint64_t raw_bits;
    std::uint64_t transformed_bits;
    bool equal;
};

/// Compressed payload bit-length of the raw stream vs the same stream after
/// the per-byte ABR transform under `mask`.
CompareReport demo_compare(std::span<const std::uint8_t> data, StegoMask mask);

} // namespace abr
