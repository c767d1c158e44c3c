#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "errors.hpp"

// Byte-level steganographic transform: the masked nibble(s) of each byte are
// re-expressed in width-4 ABR, the rest stay binary. Every mask is a
// bijection on [0, 255], so extraction under the same mask is exact; without
// the mask the data reads as garbage.

namespace abr {

enum class StegoMask { None, LowAbr, HighAbr, BothAbr };

StegoMask mask_from_name(std::string_view name); // "none" | "low-abr" | ...
std::string_view mask_name(StegoMask mask);

std::uint8_t embed_byte(std::uint8_t b, StegoMask mask);
std::uint8_t extract_byte(std::uint8_t b, StegoMask mask);

/// Applies the per-byte transform in stream order. Output length equals
/// input length; returns bytes processed. I/O failures raise IoError with
/// the failing offset.
std::uint64_t embed_stream(std::istream& in, std::ostream& out, StegoMask mask);
std::uint64_t extract_stream(std::istream& in, std::ostream& out, StegoMask mask);

std::uint64_t embed_file(const std::filesystem::path& in, const std::filesystem::path& out,
                         StegoMask mask);
std::uint64_t extract_file(const std::filesystem::path& in, const std::filesystem::path& out,
                           StegoMask mask);

} // namespace abr
