#include "tables.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

#include "verify.hpp"

namespace abr {

namespace {

void render_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out << ',';
        out << cells[i];
    }
    out << '\n';
}

std::vector<std::string> profile_headers() {
    return {"value", "abr_popcount", "bns_popcount"};
}

std::vector<std::string> profile_row(std::uint64_t value, unsigned abr_pop, unsigned bns_pop) {
    return {std::to_string(value), std::to_string(abr_pop), std::to_string(bns_pop)};
}

} // namespace

TableFormat table_format_from_name(std::string_view name) {
    if (name == "plain")
        return TableFormat::Plain;
    if (name == "csv")
        return TableFormat::Csv;
    if (name == "markdown")
        return TableFormat::Markdown;
    throw RangeError("unknown format '" + std::string(name) +
                     "' (expected plain|csv|markdown)");
}

std::string TableDocument::render(TableFormat format) const {
    std::ostringstream out;
    switch (format) {
    case TableFormat::Csv: {
        render_csv_row(out, headers);
        for (const auto& row : rows)
            render_csv_row(out, row);
        break;
    }
    case TableFormat::Markdown: {
        const auto emit = [&out](const std::vector<std::string>& cells) {
            out << '|';
            for (const auto& cell : cells)
                out << ' ' << cell << " |";
            out << '\n';
        };
        emit(headers);
        out << '|';
        for (std::size_t i = 0; i < headers.size(); ++i)
            out << " --- |";
        out << '\n';
        for (const auto& row : rows)
            emit(row);
        break;
    }
    case TableFormat::Plain: {
        std::vector<std::size_t> widths(headers.size());
        for (std::size_t c = 0; c < headers.size(); ++c)
            widths[c] = headers[c].size();
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                widths[c] = std::max(widths[c], row[c].size());
        const auto emit = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c)
                    out << "  ";
                out << cells[c];
                if (c + 1 < cells.size()) // no trailing spaces
                    out << std::string(widths[c] - cells[c].size(), ' ');
            }
            out << '\n';
        };
        emit(headers);
        for (const auto& row : rows)
            emit(row);
        break;
    }
    }
    return out.str();
}

TableDocument emit_base_table(BitWidth n) {
    TableDocument doc;
    doc.title = "base values, width " + std::to_string(n.n);
    doc.headers = {"index", "bns_base", "abr_base"};
    const auto bases = compute_bases(n);
    for (unsigned i = 0; i < n.n; ++i)
        doc.rows.push_back({std::to_string(i), std::to_string(std::uint64_t{1} << i),
                            std::to_string(bases.at(i))});
    return doc;
}

TableDocument emit_codec_table(BitWidth n) {
    if (n.n > kMaxCodecTableWidth)
        throw RangeError("width " + std::to_string(n.n) + " exceeds codec table guard " +
                         std::to_string(kMaxCodecTableWidth));
    TableDocument doc;
    doc.title = "encodings, width " + std::to_string(n.n);
    doc.headers = {"value", "bns", "abr"};
    const std::uint64_t count = std::uint64_t{1} << n.n;
    for (std::uint64_t v = 0; v < count; ++v)
        doc.rows.push_back({std::to_string(v), bns_encode(v, n).to_string(),
                            encode(v, n).to_string()});
    return doc;
}

TableDocument emit_profile_csv(BitWidth n) {
    const auto profile = popcount_profile(n); // guards n <= 24
    TableDocument doc;
    doc.title = "bit usage, width " + std::to_string(n.n);
    doc.headers = profile_headers();
    for (const auto& row : profile.rows)
        doc.rows.push_back(profile_row(row.value, row.abr_popcount, row.bns_popcount));
    return doc;
}

void write_profile_csv(BitWidth n, std::ostream& out) {
    if (n.n > kMaxSweepWidth)
        throw RangeError("width " + std::to_string(n.n) + " exceeds enumeration guard " +
                         std::to_string(kMaxSweepWidth));
    render_csv_row(out, profile_headers());
    const std::uint64_t count = std::uint64_t{1} << n.n;
    for (std::uint64_t v = 0; v < count; ++v) {
        const auto abr_pop = static_cast<unsigned>(std::popcount(encode(v, n).pattern()));
        const auto bns_pop = static_cast<unsigned>(std::popcount(v));
        render_csv_row(out, profile_row(v, abr_pop, bns_pop));
    }
}

} // namespace abr
