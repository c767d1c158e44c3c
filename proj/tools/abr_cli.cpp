// Command-line front end for the ABR codec library. Every subcommand is a
// thin adapter over the C API in abr/abr.h: stdout carries payload only,
// diagnostics go to stderr.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 I/O error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <abr/abr.h>

namespace {

struct CStr {
    char* ptr = nullptr;
    ~CStr() { abr_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

int exit_code_for(abr_status status) {
    switch (status) {
    case ABR_OK:
        return 0;
    case ABR_ERR_RANGE:
    case ABR_ERR_THEOREM:
    case ABR_ERR_DECODE:
        return 1;
    case ABR_ERR_IO:
        return 3;
    case ABR_ERR_ARG:
    default:
        return 2;
    }
}

int report_failure(abr_status status) {
    std::cerr << "error: " << abr_last_error() << '\n';
    return exit_code_for(status);
}

abr_system system_from_name(const std::string& name) {
    return name == "bns" ? ABR_SYSTEM_BNS : ABR_SYSTEM_ABR;
}

abr_mask mask_from_name(const std::string& name) {
    if (name == "none")
        return ABR_MASK_NONE;
    if (name == "high-abr")
        return ABR_MASK_HIGH_ABR;
    if (name == "both-abr")
        return ABR_MASK_BOTH_ABR;
    return ABR_MASK_LOW_ABR;
}

abr_format format_from_name(const std::string& name) {
    if (name == "csv")
        return ABR_FORMAT_CSV;
    if (name == "markdown")
        return ABR_FORMAT_MARKDOWN;
    return ABR_FORMAT_PLAIN;
}

int run_bases(std::uint32_t width, const std::string& format) {
    std::vector<std::uint64_t> bases(width ? width : 1);
    const auto status = abr_compute_bases(width, bases.data(), bases.size());
    if (status != ABR_OK)
        return report_failure(status);

    if (format == "csv") {
        std::cout << "index,base\n";
        for (std::uint32_t i = 0; i < width; ++i)
            std::cout << i << ',' << bases[i] << '\n';
    } else if (format == "markdown") {
        std::cout << "| index | base |\n| --- | --- |\n";
        for (std::uint32_t i = 0; i < width; ++i)
            std::cout << "| " << i << " | " << bases[i] << " |\n";
    } else {
        for (std::uint32_t i = 0; i < width; ++i)
            std::cout << bases[i] << '\n';
    }
    return 0;
}

int run_table(const std::string& which, std::uint32_t width, const std::string& format) {
    const auto kind = which == "bases" ? ABR_TABLE_BASES : ABR_TABLE_CODEC;
    abr_table* table = nullptr;
    auto status = abr_table_create(kind, width, &table);
    if (status != ABR_OK)
        return report_failure(status);
    CStr text;
    status = abr_table_render(table, format_from_name(format), &text.ptr);
    abr_table_free(table);
    if (status != ABR_OK)
        return report_failure(status);
    std::cout << text.str();
    return 0;
}

int run_verify(std::uint32_t min_width, std::uint32_t max_width, std::uint32_t jobs) {
    if (min_width > max_width) {
        std::cerr << "error: invalid width range [" << min_width << ", " << max_width << "]\n";
        return 1;
    }
    bool all_pass = true;
    for (std::uint32_t n = min_width; n <= max_width; ++n) {
        abr_report* report = nullptr;
        const auto status = abr_verify_width(n, jobs, &report);
        if (status != ABR_OK)
            return report_failure(status);
        CStr line;
        abr_report_to_kv(report, &line.ptr);
        all_pass = all_pass && abr_report_pass(report);
        abr_report_free(report);
        std::cout << line.str() << '\n';
    }
    if (!all_pass) {
        std::cerr << "error: verification failed\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ABR number system toolkit"};
    app.set_version_flag("--version", std::string(abr_version()));
    app.require_subcommand(1);

    const std::vector<std::string> mask_names{"low-abr", "high-abr", "both-abr", "none"};
    const std::vector<std::string> format_names{"plain", "csv", "markdown"};
    const std::vector<std::string> system_names{"abr", "bns"};

    // bases
    auto* bases_cmd = app.add_subcommand("bases", "Print the per-index base values");
    std::uint32_t bases_width = 0;
    std::string bases_format = "plain";
    bases_cmd->add_option("--width", bases_width, "bit width")->required();
    bases_cmd->add_option("--format", bases_format)->check(CLI::IsMember(format_names));

    // encode
    auto* encode_cmd = app.add_subcommand("encode", "Encode a value as a bit string");
    std::uint64_t encode_value = 0;
    std::uint32_t encode_width = 0;
    std::string encode_system = "abr";
    encode_cmd->add_option("value", encode_value, "value to encode")->required();
    encode_cmd->add_option("--width", encode_width, "bit width")->required();
    encode_cmd->add_option("--system", encode_system)->check(CLI::IsMember(system_names));

    // decode
    auto* decode_cmd = app.add_subcommand("decode", "Decode a bit string (width inferred)");
    std::string decode_bits;
    std::string decode_system = "abr";
    decode_cmd->add_option("bits", decode_bits, "bit string")->required();
    decode_cmd->add_option("--system", decode_system)->check(CLI::IsMember(system_names));

    // table
    auto* table_cmd = app.add_subcommand("table", "Render a reference table");
    std::string table_which;
    std::uint32_t table_width = 0;
    std::string table_format = "plain";
    table_cmd->add_option("--which", table_which)
        ->check(CLI::IsMember(std::vector<std::string>{"bases", "codec"}))
        ->required();
    table_cmd->add_option("--width", table_width, "bit width")->required();
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember(format_names));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively verify widths");
    std::uint32_t verify_min = 0, verify_max = 0, verify_jobs = 0;
    verify_cmd->add_option("--min", verify_min, "first width")->required();
    verify_cmd->add_option("--max", verify_max, "last width")->required();
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads (0 = auto)");

    // profile
    auto* profile_cmd = app.add_subcommand("profile", "Write the bit-usage profile CSV");
    std::uint32_t profile_width = 0;
    std::string profile_out;
    profile_cmd->add_option("--width", profile_width, "bit width")->required();
    profile_cmd->add_option("--out", profile_out, "output file")->required();

    // hamming
    auto* hamming_cmd = app.add_subcommand("hamming", "Hamming(7,4) codec");
    hamming_cmd->require_subcommand(1);
    auto* ham_demo = hamming_cmd->add_subcommand("demo", "Worked encode/correct example");
    std::uint64_t ham_value = 0;
    std::string ham_system = "abr";
    std::uint32_t ham_flip = 0;
    ham_demo->add_option("--value", ham_value, "value 0..15")->required();
    ham_demo->add_option("--system", ham_system)->check(CLI::IsMember(system_names))->required();
    ham_demo->add_option("--flip", ham_flip, "position 1..7 to corrupt");
    auto* ham_encode = hamming_cmd->add_subcommand("encode", "Encode 4 data bits");
    std::string ham_encode_bits;
    ham_encode->add_option("bits", ham_encode_bits, "data bits d4 d3 d2 d1")->required();
    auto* ham_correct = hamming_cmd->add_subcommand("correct", "Correct a 7-bit codeword");
    std::string ham_correct_bits;
    ham_correct->add_option("bits", ham_correct_bits, "received codeword")->required();

    // stego
    auto* stego_cmd = app.add_subcommand("stego", "Byte-level ABR steganography");
    stego_cmd->require_subcommand(1);
    std::string stego_in, stego_out, stego_mask = "low-abr";
    auto* stego_embed = stego_cmd->add_subcommand("embed", "Apply the nibble transform");
    auto* stego_extract = stego_cmd->add_subcommand("extract", "Invert the nibble transform");
    for (auto* sub : {stego_embed, stego_extract}) {
        sub->add_option("--in", stego_in, "input file")->required();
        sub->add_option("--out", stego_out, "output file")->required();
        sub->add_option("--mask", stego_mask)->check(CLI::IsMember(mask_names));
    }

    // huffman
    auto* huffman_cmd = app.add_subcommand("huffman", "Huffman compression demo");
    huffman_cmd->require_subcommand(1);
    std::string huff_in, huff_out, huff_mask = "low-abr";
    auto* huff_compress = huffman_cmd->add_subcommand("compress", "Compress a file");
    auto* huff_decompress = huffman_cmd->add_subcommand("decompress", "Decompress a file");
    for (auto* sub : {huff_compress, huff_decompress}) {
        sub->add_option("--in", huff_in, "input file")->required();
        sub->add_option("--out", huff_out, "output file")->required();
    }
    auto* huff_compare = huffman_cmd->add_subcommand(
        "compare", "Compare payload bit-lengths with and without the mask transform");
    huff_compare->add_option("--in", huff_in, "input file")->required();
    huff_compare->add_option("--mask", huff_mask)->check(CLI::IsMember(mask_names));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(bases_cmd))
        return run_bases(bases_width, bases_format);

    if (app.got_subcommand(encode_cmd)) {
        CStr bits;
        const auto status =
            abr_encode(encode_value, encode_width, system_from_name(encode_system), &bits.ptr);
        if (status != ABR_OK)
            return report_failure(status);
        std::cout << bits.str() << '\n';
        return 0;
    }

    if (app.got_subcommand(decode_cmd)) {
        std::uint64_t value = 0;
        const auto status =
            abr_decode(decode_bits.c_str(), system_from_name(decode_system), &value);
        if (status != ABR_OK)
            return report_failure(status);
        std::cout << value << '\n';
        return 0;
    }

    if (app.got_subcommand(table_cmd))
        return run_table(table_which, table_width, table_format);

    if (app.got_subcommand(verify_cmd))
        return run_verify(verify_min, verify_max, verify_jobs);

    if (app.got_subcommand(profile_cmd)) {
        const auto status = abr_profile_write_csv(profile_width, profile_out.c_str());
        if (status != ABR_OK)
            return report_failure(status);
        return 0;
    }

    if (app.got_subcommand(hamming_cmd)) {
        if (hamming_cmd->got_subcommand(ham_demo)) {
            CStr text;
            const auto status =
                abr_h74_demo(ham_value, system_from_name(ham_system), ham_flip, &text.ptr);
            if (status != ABR_OK)
                return report_failure(status);
            std::cout << text.str();
            return 0;
        }
        if (hamming_cmd->got_subcommand(ham_encode)) {
            CStr word;
            const auto status = abr_h74_encode_str(ham_encode_bits.c_str(), &word.ptr);
            if (status != ABR_OK)
                return report_failure(status);
            std::cout << word.str() << '\n';
            return 0;
        }
        CStr corrected, data;
        std::uint8_t position = 0;
        const auto status = abr_h74_correct_str(ham_correct_bits.c_str(), &corrected.ptr,
                                                &data.ptr, &position);
        if (status != ABR_OK)
            return report_failure(status);
        std::cout << "position=" << static_cast<unsigned>(position) << '\n'
                  << "corrected=" << corrected.str() << '\n'
                  << "data=" << data.str() << '\n';
        return 0;
    }

    if (app.got_subcommand(stego_cmd)) {
        const bool embedding = stego_cmd->got_subcommand(stego_embed);
        std::uint64_t count = 0;
        const auto mask = mask_from_name(stego_mask);
        const auto status =
            embedding ? abr_stego_embed_file(stego_in.c_str(), stego_out.c_str(), mask, &count)
                      : abr_stego_extract_file(stego_in.c_str(), stego_out.c_str(), mask, &count);
        if (status != ABR_OK)
            return report_failure(status);
        std::cout << count << '\n';
        return 0;
    }

    if (app.got_subcommand(huffman_cmd)) {
        if (huffman_cmd->got_subcommand(huff_compare)) {
            std::uint64_t raw_bits = 0, transformed_bits = 0;
            const auto status = abr_huffman_compare_file(
                huff_in.c_str(), mask_from_name(huff_mask), &raw_bits, &transformed_bits);
            if (status != ABR_OK)
                return report_failure(status);
            std::cout << "raw_bits=" << raw_bits << " transformed_bits=" << transformed_bits
                      << " equal=" << (raw_bits == transformed_bits ? "true" : "false") << '\n';
            return 0;
        }
        const bool compressing = huffman_cmd->got_subcommand(huff_compress);
        const auto status =
            compressing
                ? abr_huffman_compress_file(huff_in.c_str(), huff_out.c_str(), nullptr, nullptr)
                : abr_huffman_decompress_file(huff_in.c_str(), huff_out.c_str(), nullptr,
                                              nullptr);
        if (status != ABR_OK)
            return report_failure(status);
        return 0;
    }

    return 2;
}
