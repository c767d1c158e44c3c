#include "abr/abr.h"

#include <cstring>
#include <exception>
#include <string>

#include "core.hpp"
#include "hamming74.hpp"
#include "huffman.hpp"
#include "stego.hpp"
#include "tables.hpp"
#include "verify.hpp"

#include <fstream>

struct abr_report {
    abr::VerificationReport report;
};

struct abr_table {
    abr::TableDocument doc;
};

namespace {

constexpr const char* kVersion = "1.0.0";

thread_local std::string t_last_error;

abr_status fail(abr_status code, const char* message) {
    t_last_error = message;
    return code;
}

template <typename Fn>
abr_status guarded(Fn&& fn) {
    try {
        fn();
        return ABR_OK;
    } catch (const abr::RangeError& e) {
        return fail(ABR_ERR_RANGE, e.what());
    } catch (const abr::TheoremError& e) {
        return fail(ABR_ERR_THEOREM, e.what());
    } catch (const abr::DecodeError& e) {
        return fail(ABR_ERR_DECODE, e.what());
    } catch (const abr::IoError& e) {
        return fail(ABR_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(ABR_ERR_ARG, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

abr::NumberSystem to_system(abr_system system) {
    switch (system) {
    case ABR_SYSTEM_ABR:
        return abr::NumberSystem::Abr;
    case ABR_SYSTEM_BNS:
        return abr::NumberSystem::Bns;
    default:
        throw std::invalid_argument("invalid abr_system value");
    }
}

abr::StegoMask to_mask(abr_mask mask) {
    switch (mask) {
    case ABR_MASK_NONE:
        return abr::StegoMask::None;
    case ABR_MASK_LOW_ABR:
        return abr::StegoMask::LowAbr;
    case ABR_MASK_HIGH_ABR:
        return abr::StegoMask::HighAbr;
    case ABR_MASK_BOTH_ABR:
        return abr::StegoMask::BothAbr;
    default:
        throw std::invalid_argument("invalid abr_mask value");
    }
}

abr::TableFormat to_format(abr_format format) {
    switch (format) {
    case ABR_FORMAT_PLAIN:
        return abr::TableFormat::Plain;
    case ABR_FORMAT_CSV:
        return abr::TableFormat::Csv;
    case ABR_FORMAT_MARKDOWN:
        return abr::TableFormat::Markdown;
    default:
        throw std::invalid_argument("invalid abr_format value");
    }
}

} // namespace

extern "C" {

const char* abr_version(void) {
    return kVersion;
}

const char* abr_last_error(void) {
    return t_last_error.c_str();
}

void abr_string_free(char* s) {
    delete[] s;
}

abr_status abr_compute_bases(uint32_t width, uint64_t* bases, size_t capacity) {
    if (!bases)
        return fail(ABR_ERR_ARG, "bases is null");
    return guarded([&] {
        const auto view = abr::bases_for(abr::BitWidth(width));
        if (capacity < view.size())
            throw std::invalid_argument("capacity " + std::to_string(capacity) +
                                        " too small for width " + std::to_string(width));
        std::memcpy(bases, view.data(), view.size() * sizeof(uint64_t));
    });
}

abr_status abr_encode(uint64_t value, uint32_t width, abr_system system, char** bits_out) {
    if (!bits_out)
        return fail(ABR_ERR_ARG, "bits_out is null");
    return guarded([&] {
        const abr::BitWidth w(width);
        const auto s = to_system(system) == abr::NumberSystem::Abr ? abr::encode(value, w)
                                                                   : abr::bns_encode(value, w);
        *bits_out = dup_string(s.to_string());
    });
}

abr_status abr_decode(const char* bits, abr_system system, uint64_t* value_out) {
    if (!bits)
        return fail(ABR_ERR_ARG, "bits is null");
    if (!value_out)
        return fail(ABR_ERR_ARG, "value_out is null");
    return guarded([&] {
        const auto s = abr::BitString::from_string(bits);
        *value_out = to_system(system) == abr::NumberSystem::Abr ? abr::decode(s)
                                                                 : abr::bns_decode(s);
    });
}

abr_status abr_encode_exhaustive(uint64_t value, uint32_t width, char** bits_out) {
    if (!bits_out)
        return fail(ABR_ERR_ARG, "bits_out is null");
    return guarded([&] {
        *bits_out = dup_string(abr::encode_exhaustive(value, abr::BitWidth(width)).to_string());
    });
}

abr_status abr_verify_width(uint32_t width, uint32_t jobs, abr_report** report_out) {
    if (!report_out)
        return fail(ABR_ERR_ARG, "report_out is null");
    return guarded([&] {
        auto report = abr::verify_width(abr::BitWidth(width), jobs);
        *report_out = new abr_report{std::move(report)};
    });
}

void abr_report_free(abr_report* report) {
    delete report;
}

int abr_report_pass(const abr_report* report) {
    return report && report->report.pass() ? 1 : 0;
}

uint32_t abr_report_width(const abr_report* report) {
    return report ? report->report.width : 0;
}

uint64_t abr_report_distinct(const abr_report* report) {
    return report ? report->report.distinct_values : 0;
}

uint64_t abr_report_min(const abr_report* report) {
    return report ? report->report.min_value : 0;
}

uint64_t abr_report_max(const abr_report* report) {
    return report ? report->report.max_value : 0;
}

uint64_t abr_report_duplicates(const abr_report* report) {
    return report ? report->report.duplicate_count : 0;
}

uint64_t abr_report_missing(const abr_report* report) {
    return report ? report->report.missing_count : 0;
}

uint64_t abr_report_elapsed_ms(const abr_report* report) {
    return report ? static_cast<uint64_t>(report->report.elapsed.count()) : 0;
}

abr_status abr_report_to_text(const abr_report* report, char** text_out) {
    if (!report)
        return fail(ABR_ERR_ARG, "report is null");
    if (!text_out)
        return fail(ABR_ERR_ARG, "text_out is null");
    return guarded([&] { *text_out = dup_string(report->report.to_text()); });
}

abr_status abr_report_to_kv(const abr_report* report, char** text_out) {
    if (!report)
        return fail(ABR_ERR_ARG, "report is null");
    if (!text_out)
        return fail(ABR_ERR_ARG, "text_out is null");
    return guarded([&] { *text_out = dup_string(report->report.to_kv()); });
}

abr_status abr_cross_check_encoders(uint32_t width, int* agree_out) {
    if (!agree_out)
        return fail(ABR_ERR_ARG, "agree_out is null");
    return guarded([&] {
        *agree_out = abr::cross_check_encoders(abr::BitWidth(width)) ? 1 : 0;
    });
}

abr_status abr_table_create(abr_table_kind kind, uint32_t width, abr_table** table_out) {
    if (!table_out)
        return fail(ABR_ERR_ARG, "table_out is null");
    return guarded([&] {
        const abr::BitWidth w(width);
        abr::TableDocument doc;
        switch (kind) {
        case ABR_TABLE_BASES:
            doc = abr::emit_base_table(w);
            break;
        case ABR_TABLE_CODEC:
            doc = abr::emit_codec_table(w);
            break;
        case ABR_TABLE_PROFILE:
            doc = abr::emit_profile_csv(w);
            break;
        default:
            throw std::invalid_argument("invalid abr_table_kind value");
        }
        *table_out = new abr_table{std::move(doc)};
    });
}

abr_status abr_table_render(const abr_table* table, abr_format format, char** text_out) {
    if (!table)
        return fail(ABR_ERR_ARG, "table is null");
    if (!text_out)
        return fail(ABR_ERR_ARG, "text_out is null");
    return guarded([&] { *text_out = dup_string(table->doc.render(to_format(format))); });
}

void abr_table_free(abr_table* table) {
    delete table;
}

abr_status abr_profile_write_csv(uint32_t width, const char* path) {
    if (!path)
        return fail(ABR_ERR_ARG, "path is null");
    return guarded([&] {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw abr::IoError(std::string("cannot open output file: ") + path);
        abr::write_profile_csv(abr::BitWidth(width), out);
        out.flush();
        if (!out)
            throw abr::IoError(std::string("write failed: ") + path);
    });
}

abr_status abr_h74_encode(uint8_t data_bits, uint8_t* codeword_out) {
    if (!codeword_out)
        return fail(ABR_ERR_ARG, "codeword_out is null");
    return guarded([&] {
        *codeword_out = abr::h74_encode(abr::DataNibble(data_bits, abr::NumberSystem::Bns)).bits();
    });
}

abr_status abr_h74_syndrome(uint8_t codeword, uint8_t* error_position_out) {
    if (!error_position_out)
        return fail(ABR_ERR_ARG, "error_position_out is null");
    return guarded([&] {
        *error_position_out =
            static_cast<uint8_t>(abr::h74_syndrome(abr::Codeword7(codeword)).error_position());
    });
}

abr_status abr_h74_correct(uint8_t codeword, uint8_t* corrected_out, uint8_t* data_bits_out,
                           uint8_t* error_position_out) {
    if (!corrected_out || !data_bits_out || !error_position_out)
        return fail(ABR_ERR_ARG, "output pointer is null");
    return guarded([&] {
        const auto result = abr::h74_correct(abr::Codeword7(codeword));
        *corrected_out = result.corrected.bits();
        *data_bits_out = result.data_bits;
        *error_position_out = static_cast<uint8_t>(result.error_position);
    });
}

abr_status abr_h74_encode_str(const char* data_bits, char** codeword_out) {
    if (!data_bits)
        return fail(ABR_ERR_ARG, "data_bits is null");
    if (!codeword_out)
        return fail(ABR_ERR_ARG, "codeword_out is null");
    return guarded([&] {
        const auto nibble = abr::BitString::from_string(data_bits);
        if (nibble.width() != 4)
            throw abr::RangeError("data bits must be exactly 4 bits, got " +
                                  std::to_string(nibble.width()));
        const auto word = abr::h74_encode(abr::DataNibble(
            static_cast<uint8_t>(nibble.pattern()), abr::NumberSystem::Bns));
        *codeword_out = dup_string(word.to_string());
    });
}

abr_status abr_h74_correct_str(const char* codeword, char** corrected_out, char** data_bits_out,
                               uint8_t* error_position_out) {
    if (!codeword)
        return fail(ABR_ERR_ARG, "codeword is null");
    if (!corrected_out || !data_bits_out || !error_position_out)
        return fail(ABR_ERR_ARG, "output pointer is null");
    return guarded([&] {
        const auto result = abr::h74_correct(abr::Codeword7::from_string(codeword));
        *corrected_out = dup_string(result.corrected.to_string());
        *data_bits_out = dup_string(
            abr::DataNibble(result.data_bits, abr::NumberSystem::Bns).to_string());
        *error_position_out = static_cast<uint8_t>(result.error_position);
    });
}

abr_status abr_h74_demo(uint64_t value, abr_system system, uint32_t flip_position,
                        char** text_out) {
    if (!text_out)
        return fail(ABR_ERR_ARG, "text_out is null");
    return guarded([&] {
        *text_out = dup_string(abr::render_demo(value, to_system(system), flip_position));
    });
}

abr_status abr_stego_embed_byte(uint8_t byte_in, abr_mask mask, uint8_t* byte_out) {
    if (!byte_out)
        return fail(ABR_ERR_ARG, "byte_out is null");
    return guarded([&] { *byte_out = abr::embed_byte(byte_in, to_mask(mask)); });
}

abr_status abr_stego_extract_byte(uint8_t byte_in, abr_mask mask, uint8_t* byte_out) {
    if (!byte_out)
        return fail(ABR_ERR_ARG, "byte_out is null");
    return guarded([&] { *byte_out = abr::extract_byte(byte_in, to_mask(mask)); });
}

abr_status abr_stego_embed_buffer(const uint8_t* in, size_t len, uint8_t* out, abr_mask mask) {
    if (len > 0 && (!in || !out))
        return fail(ABR_ERR_ARG, "buffer pointer is null");
    return guarded([&] {
        const auto m = to_mask(mask);
        for (size_t i = 0; i < len; ++i)
            out[i] = abr::embed_byte(in[i], m);
    });
}

abr_status abr_stego_extract_buffer(const uint8_t* in, size_t len, uint8_t* out, abr_mask mask) {
    if (len > 0 && (!in || !out))
        return fail(ABR_ERR_ARG, "buffer pointer is null");
    return guarded([&] {
        const auto m = to_mask(mask);
        for (size_t i = 0; i < len; ++i)
            out[i] = abr::extract_byte(in[i], m);
    });
}

abr_status abr_stego_embed_file(const char* in_path, const char* out_path, abr_mask mask,
                                uint64_t* count_out) {
    if (!in_path || !out_path)
        return fail(ABR_ERR_ARG, "path is null");
    return guarded([&] {
        const auto count = abr::embed_file(in_path, out_path, to_mask(mask));
        if (count_out)
            *count_out = count;
    });
}

abr_status abr_stego_extract_file(const char* in_path, const char* out_path, abr_mask mask,
                                  uint64_t* count_out) {
    if (!in_path || !out_path)
        return fail(ABR_ERR_ARG, "path is null");
    return guarded([&] {
        const auto count = abr::extract_file(in_path, out_path, to_mask(mask));
        if (count_out)
            *count_out = count;
    });
}

abr_status abr_huffman_compress_file(const char* in_path, const char* out_path,
                                     uint64_t* in_bytes_out, uint64_t* out_bytes_out) {
    if (!in_path || !out_path)
        return fail(ABR_ERR_ARG, "path is null");
    return guarded([&] {
        const auto sizes = abr::compress_file(in_path, out_path);
        if (in_bytes_out)
            *in_bytes_out = sizes.in_bytes;
        if (out_bytes_out)
            *out_bytes_out = sizes.out_bytes;
    });
}

abr_status abr_huffman_decompress_file(const char* in_path, const char* out_path,
                                       uint64_t* in_bytes_out, uint64_t* out_bytes_out) {
    if (!in_path || !out_path)
        return fail(ABR_ERR_ARG, "path is null");
    return guarded([&] {
        const auto sizes = abr::decompress_file(in_path, out_path);
        if (in_bytes_out)
            *in_bytes_out = sizes.in_bytes;
        if (out_bytes_out)
            *out_bytes_out = sizes.out_bytes;
    });
}

abr_status abr_huffman_compare_file(const char* in_path, abr_mask mask, uint64_t* raw_bits_out,
                                    uint64_t* transformed_bits_out) {
    if (!in_path)
        return fail(ABR_ERR_ARG, "path is null");
    if (!raw_bits_out || !transformed_bits_out)
        return fail(ABR_ERR_ARG, "output pointer is null");
    return guarded([&] {
        std::ifstream in(in_path, std::ios::binary);
        if (!in)
            throw abr::IoError(std::string("cannot open input file: ") + in_path);
        std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                       std::istreambuf_iterator<char>());
        if (in.bad())
            throw abr::IoError(std::string("read failed: ") + in_path);
        const auto report = abr::demo_compare(data, to_mask(mask));
        *raw_bits_out = report.raw_bits;
        *transformed_bits_out = report.transformed_bits;
    });
}

} // extern "C"
