#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "core.hpp"

// Reference tables emitted from the live implementation: per-index base
// comparison, side-by-side encodings, and the per-value bit-usage profile.
// Renders are byte-stable across runs so they double as golden fixtures.

namespace abr {

inline constexpr unsigned kMaxCodecTableWidth = 16;

enum class TableFormat { Plain, Csv, Markdown };

TableFormat table_format_from_name(std::string_view name);

struct TableDocument {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows; // every row has headers.size() cells

    std::string render(TableFormat format) const;
};

/// Rows (i, 2^i, B_i) for i = 0 .. n-1.
TableDocument emit_base_table(BitWidth n);

/// Rows (v, bns, abr) for v = 0 .. 2^n - 1. Requires n <= 16.
TableDocument emit_codec_table(BitWidth n);

/// Rows (value, abr_popcount, bns_popcount). Requires n <= 24.
TableDocument emit_profile_csv(BitWidth n);

/// Streams exactly the bytes of emit_profile_csv(n).render(Csv) without
/// materializing the row set; used for large widths.
void write_profile_csv(BitWidth n, std::ostream& out);

} // namespace abr
