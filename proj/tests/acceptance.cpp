// Acceptance suite: exercises the full artifact (library + CLI) and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "core.hpp"
#include "hamming74.hpp"
#include "huffman.hpp"
#include "stego.hpp"
#include "verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct RunResult {
    int code = -1;
    std::string out;
    double seconds = 0.0;
};

std::filesystem::path temp_file(const std::string& tag) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("abr_acceptance_" + std::to_string(::getpid()) + "_" + tag + "_" +
            std::to_string(counter++));
}

RunResult run_cli(const std::string& args) {
    const auto err_path = temp_file("stderr");
    const std::string command =
        std::string(ABR_CLI_PATH) + " " + args + " 2>" + err_path.string();
    RunResult result;

    const auto start = Clock::now();
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return result;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::filesystem::remove(err_path);
    return result;
}

class Checker {
public:
    bool ok() const { return detail_.empty(); }
    const std::string& detail() const { return detail_; }

    void expect(bool condition, const std::string& message) {
        if (!condition && detail_.empty())
            detail_ = message;
    }

private:
    std::string detail_;
};

struct Criterion {
    int id;
    std::string name;
    std::function<void(Checker&)> body;
};

// value -> (bns, abr) encodings at width 4
const std::vector<std::pair<std::string, std::string>> kCodecRows4 = {
    {"0000", "0000"}, {"0001", "0011"}, {"0010", "0001"}, {"0011", "0010"},
    {"0100", "0100"}, {"0101", "0111"}, {"0110", "0101"}, {"0111", "0110"},
    {"1000", "1100"}, {"1001", "1111"}, {"1010", "1101"}, {"1011", "1110"},
    {"1100", "1000"}, {"1101", "1011"}, {"1110", "1001"}, {"1111", "1010"},
};

std::vector<std::uint8_t> random_bytes(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> data(size);
    for (auto& b : data)
        b = static_cast<std::uint8_t>(rng());
    return data;
}

void criterion_base_values(Checker& check) {
    const auto r = run_cli("bases --width 16");
    check.expect(r.code == 0, "CLI exited with code " + std::to_string(r.code));
    check.expect(r.out == "2\n3\n4\n12\n16\n48\n64\n192\n256\n768\n1024\n3072\n4096\n12288\n"
                          "16384\n49152\n",
                 "base list output mismatch");
    check.expect(r.seconds < 1.0, "took " + std::to_string(r.seconds) + " s (limit 1 s)");
}

void criterion_codec_table(Checker& check) {
    const auto r = run_cli("table --which codec --width 4");
    check.expect(r.code == 0, "CLI exited with code " + std::to_string(r.code));

    std::istringstream stream(r.out);
    std::string line;
    std::getline(stream, line); // header
    for (std::size_t v = 0; v < 16; ++v) {
        if (!std::getline(stream, line)) {
            check.expect(false, "table ended early at value " + std::to_string(v));
            return;
        }
        std::istringstream cells(line);
        std::string value, bns, abr;
        cells >> value >> bns >> abr;
        check.expect(value == std::to_string(v) && bns == kCodecRows4[v].first &&
                         abr == kCodecRows4[v].second,
                     "row " + std::to_string(v) + " mismatch: " + line);
    }
    check.expect(!std::getline(stream, line), "unexpected extra rows");
    check.expect(r.seconds < 1.0, "took " + std::to_string(r.seconds) + " s (limit 1 s)");
}

void criterion_exhaustive_verification(Checker& check) {
    const auto r = run_cli("verify --min 1 --max 20");
    check.expect(r.code == 0, "CLI exited with code " + std::to_string(r.code));

    std::istringstream stream(r.out);
    std::string line;
    unsigned width = 1;
    while (std::getline(stream, line)) {
        const std::uint64_t expected = std::uint64_t{1} << width;
        std::ostringstream want;
        want << "width=" << width << " patterns=" << expected << " distinct=" << expected
             << " min=0 max=" << (expected - 1) << " duplicates=0 missing=0 pass=true";
        check.expect(line == want.str(), "width " + std::to_string(width) + ": " + line);
        ++width;
    }
    check.expect(width == 21, "expected 20 reports, saw " + std::to_string(width - 1));
    check.expect(r.seconds < 60.0, "took " + std::to_string(r.seconds) + " s (limit 60 s)");
}

void criterion_encoder_agreement(Checker& check) {
    std::uint64_t cases = 0;
    for (unsigned n = 1; n <= 16; ++n) {
        check.expect(abr::cross_check_encoders(abr::BitWidth(n)),
                     "disagreement at width " + std::to_string(n));
        cases += std::uint64_t{1} << n;
    }
    check.expect(cases == 131070, "case count " + std::to_string(cases) + " != 131070");
}

void criterion_hamming(Checker& check) {
    using namespace abr;
    const auto bns13 = h74_encode(DataNibble(0b1101, NumberSystem::Bns));
    check.expect(bns13.to_string() == "1100110", "bns codeword " + bns13.to_string());
    const auto abr13 = h74_encode(DataNibble(0b1011, NumberSystem::Abr));
    check.expect(abr13.to_string() == "1010101", "abr codeword " + abr13.to_string());

    const auto syn = h74_syndrome(abr13.with_flip(7));
    check.expect(syn.s3 == 1 && syn.s2 == 1 && syn.s1 == 1 && syn.error_position() == 7,
                 "syndrome for flipped position 7");
    const auto fixed = h74_correct(abr13.with_flip(7));
    check.expect(fixed.corrected == abr13 && fixed.data_bits == 0b1011,
                 "correction of the flipped codeword");

    for (std::uint64_t v = 0; v < 16; ++v) {
        for (const auto system : {NumberSystem::Bns, NumberSystem::Abr}) {
            const auto bits = system == NumberSystem::Abr ? encode(v, BitWidth(4))
                                                          : bns_encode(v, BitWidth(4));
            const DataNibble nibble(static_cast<std::uint8_t>(bits.pattern()), system);
            const auto word = h74_encode(nibble);
            for (unsigned p = 1; p <= 7; ++p) {
                const auto result = h74_correct(word.with_flip(p));
                check.expect(result.corrected == word && result.data_bits == nibble.bits,
                             "sweep failure at value " + std::to_string(v) + " position " +
                                 std::to_string(p));
            }
        }
    }
}

void criterion_stego(Checker& check) {
    using namespace abr;
    for (const auto mask :
         {StegoMask::None, StegoMask::LowAbr, StegoMask::HighAbr, StegoMask::BothAbr}) {
        for (int b = 0; b < 256; ++b) {
            const auto byte = static_cast<std::uint8_t>(b);
            check.expect(extract_byte(embed_byte(byte, mask), mask) == byte,
                         "roundtrip failure for byte " + std::to_string(b));
            if (mask == StegoMask::None)
                check.expect(embed_byte(byte, mask) == byte, "mask none is not the identity");
        }
    }

    const auto sample_path = temp_file("sample");
    const auto embedded_path = temp_file("embedded");
    const auto restored_path = temp_file("restored");
    const auto sample = random_bytes(200001, 31337); // crosses stream chunk boundaries
    {
        std::ofstream out(sample_path, std::ios::binary);
        out.write(reinterpret_cast<const char*>(sample.data()),
                  static_cast<std::streamsize>(sample.size()));
    }
    embed_file(sample_path, embedded_path, StegoMask::LowAbr);
    extract_file(embedded_path, restored_path, StegoMask::LowAbr);
    std::ifstream restored(restored_path, std::ios::binary);
    const std::vector<std::uint8_t> back((std::istreambuf_iterator<char>(restored)),
                                         std::istreambuf_iterator<char>());
    check.expect(back == sample, "stream roundtrip is not byte-identical");
    std::filesystem::remove(sample_path);
    std::filesystem::remove(embedded_path);
    std::filesystem::remove(restored_path);
}

void criterion_compression(Checker& check) {
    using namespace abr;

    std::string text;
    while (text.size() < 200 * 1024)
        text += "the quick brown fox jumps over the lazy dog 0123456789 ";
    const std::vector<std::uint8_t> text_bytes(text.begin(), text.end());
    const auto random_blob = random_bytes(1 << 20, 271828);

    const std::vector<std::vector<std::uint8_t>> inputs = {
        {},
        std::vector<std::uint8_t>(4096, 'x'),
        text_bytes,
        random_blob,
    };
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto block = huffman_compress(inputs[i]);
        const auto restored = huffman_decompress(from_container(to_container(block)));
        check.expect(restored == inputs[i], "roundtrip failure on input " + std::to_string(i));
    }

    for (const auto* corpus : {&text_bytes, &random_blob}) {
        for (const auto mask : {StegoMask::LowAbr, StegoMask::BothAbr}) {
            const auto report = demo_compare(*corpus, mask);
            check.expect(report.equal && report.raw_bits == report.transformed_bits,
                         "payload bit-length mismatch: " + std::to_string(report.raw_bits) +
                             " vs " + std::to_string(report.transformed_bits));
        }
    }
}

void criterion_middle_region(Checker& check) {
    using namespace abr;
    for (unsigned n = 4; n <= 20; n += 2) {
        const std::uint64_t expected = ((std::uint64_t{1} << (n + 1)) - 5) / 3;
        const BitString ones((std::uint64_t{1} << n) - 1, BitWidth(n));
        check.expect(decode(ones) == expected,
                     "all-ones decode mismatch at width " + std::to_string(n));

        const std::uint64_t half = std::uint64_t{1} << (n - 1);
        const std::uint64_t quarter = std::uint64_t{1} << (n - 2);
        check.expect(expected >= half && expected < half + quarter,
                     "value outside the middle region at width " + std::to_string(n));

        if (n <= 8)
            check.expect(encode_exhaustive(expected, BitWidth(n)) == ones,
                         "oracle disagrees at width " + std::to_string(n));

        const auto profile = popcount_profile(BitWidth(n));
        std::uint64_t full_rows = 0, full_value = 0;
        for (const auto& row : profile.rows) {
            if (row.abr_popcount == n) {
                ++full_rows;
                full_value = row.value;
            }
        }
        check.expect(full_rows == 1 && full_value == expected,
                     "full-popcount row not unique at width " + std::to_string(n));
    }
}

void criterion_closed_form_bases(Checker& check) {
    using namespace abr;
    const auto bases = compute_bases(BitWidth(62));
    for (unsigned i = 0; i < 62; ++i) {
        std::uint64_t expected;
        if (i == 0)
            expected = 2;
        else if (i % 2 == 1)
            expected = 3 * (std::uint64_t{1} << (i - 1));
        else
            expected = std::uint64_t{1} << i;
        check.expect(bases.at(i) == expected, "closed form mismatch at index " +
                                                  std::to_string(i));
        if (i >= 2 && i % 2 == 0)
            check.expect(bases.at(i) == (std::uint64_t{1} << i),
                         "even-index equality with binary fails at index " + std::to_string(i));
    }
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "base values at width 16 via CLI", criterion_base_values},
        {2, "4-bit codec table via CLI", criterion_codec_table},
        {3, "exhaustive verification of widths 1..20 via CLI", criterion_exhaustive_verification},
        {4, "fast encoder equals oracle through width 16 (131070 cases)",
         criterion_encoder_agreement},
        {5, "hamming(7,4) traces and 224-case recovery sweep", criterion_hamming},
        {6, "steganography roundtrips: bytes, masks, and file streams", criterion_stego},
        {7, "huffman roundtrips and mask-invariant payload bit-length", criterion_compression},
        {8, "all-ones value hits the middle-region closed form", criterion_middle_region},
        {9, "width-62 bases match their closed forms", criterion_closed_form_bases},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Checker check;
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        if (check.ok()) {
            std::cout << "PASS  criterion " << criterion.id << ": " << criterion.name << '\n';
        } else {
            ++failures;
            std::cout << "FAIL  criterion " << criterion.id << ": " << criterion.name << " - "
                      << check.detail() << '\n';
        }
    }
    return failures == 0 ? 0 : 1;
}
