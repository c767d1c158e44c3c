#include "verify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

namespace abr {

namespace {

constexpr unsigned kMaxWorkers = 32;

// One worker's share-nothing tally of a contiguous pattern chunk.
struct ChunkTally {
    std::vector<std::uint64_t> seen;         // bitmap over the value range
    std::vector<std::uint64_t> local_hits;   // values hit more than once in-chunk
};

void sweep_chunk(unsigned width, std::uint64_t first, std::uint64_t last, ChunkTally& tally) {
    const BitWidth w(width);
    for (std::uint64_t pattern = first; pattern < last; ++pattern) {
        const std::uint64_t value = decode(BitString(pattern, w));
        auto& word = tally.seen[value >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (value & 63);
        if (word & bit)
            tally.local_hits.push_back(value);
        else
            word |= bit;
    }
}

// Deterministic exemplar collection: first two patterns per collided value,
// values in ascending order. Only runs when a sweep actually found
// collisions, which would falsify the representability theorem.
std::vector<DuplicateEntry> collect_duplicates(unsigned width,
                                               std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() > kReportExemplarCap)
        values.resize(kReportExemplarCap);

    std::vector<DuplicateEntry> entries;
    for (const std::uint64_t v : values)
        entries.push_back({v, 0, 0});
    std::vector<unsigned> found(values.size(), 0);

    const BitWidth w(width);
    const std::uint64_t count = std::uint64_t{1} << width;
    for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
        const std::uint64_t value = decode(BitString(pattern, w));
        const auto it = std::lower_bound(values.begin(), values.end(), value);
        if (it == values.end() || *it != value)
            continue;
        const auto idx = static_cast<std::size_t>(it - values.begin());
        if (found[idx] == 0)
            entries[idx].pattern_a = pattern;
        else if (found[idx] == 1)
            entries[idx].pattern_b = pattern;
        ++found[idx];
    }
    return entries;
}

} // namespace

bool VerificationReport::pass() const {
    return duplicate_count == 0 && missing_count == 0 && distinct_values == pattern_count &&
           min_value == 0 && max_value == pattern_count - 1;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "width " << width << ": " << pattern_count << " patterns -> " << distinct_values
        << " distinct values in [" << min_value << ", " << max_value << "], "
        << duplicate_count << " duplicates, " << missing_count << " missing, "
        << (pass() ? "PASS" : "FAIL") << " (" << elapsed.count() << " ms)";
    return out.str();
}

std::string VerificationReport::to_kv() const {
    std::ostringstream out;
    out << "width=" << width << " patterns=" << pattern_count << " distinct=" << distinct_values
        << " min=" << min_value << " max=" << max_value << " duplicates=" << duplicate_count
        << " missing=" << missing_count << " pass=" << (pass() ? "true" : "false");
    return out.str();
}

VerificationReport verify_width(BitWidth n, unsigned jobs) {
    if (n.n > kMaxSweepWidth)
        throw RangeError("width " + std::to_string(n.n) + " exceeds enumeration guard " +
                         std::to_string(kMaxSweepWidth));

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t count = std::uint64_t{1} << n.n;
    const std::size_t words = static_cast<std::size_t>((count + 63) / 64);

    unsigned workers = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min({static_cast<std::uint64_t>(workers), count,
                        static_cast<std::uint64_t>(kMaxWorkers)});

    std::vector<ChunkTally> tallies(workers);
    for (auto& t : tallies)
        t.seen.assign(words, 0);

    {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = count / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = w * chunk;
            const std::uint64_t last = (w + 1 == workers) ? count : first + chunk;
            pool.emplace_back(sweep_chunk, n.n, first, last, std::ref(tallies[w]));
        }
        for (auto& t : pool)
            t.join();
    }

    // Merge in chunk order; the tally union is associative so the outcome is
    // independent of the worker count.
    std::vector<std::uint64_t> merged(words, 0);
    std::vector<std::uint64_t> collided;
    for (const auto& tally : tallies) {
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t overlap = merged[w] & tally.seen[w];
            for (std::uint64_t rest = overlap; rest != 0; rest &= rest - 1)
                collided.push_back((static_cast<std::uint64_t>(w) << 6) +
                                   static_cast<unsigned>(std::countr_zero(rest)));
            merged[w] |= tally.seen[w];
        }
        collided.insert(collided.end(), tally.local_hits.begin(), tally.local_hits.end());
    }

    VerificationReport report;
    report.width = n.n;
    report.pattern_count = count;

    std::uint64_t distinct = 0;
    for (const auto word : merged)
        distinct += static_cast<std::uint64_t>(std::popcount(word));
    report.distinct_values = distinct;
    report.duplicate_count = count - distinct;
    report.missing_count = count - distinct;

    bool min_found = false;
    for (std::uint64_t v = 0; v < count; ++v) {
        const bool present = (merged[v >> 6] >> (v & 63)) & 1;
        if (present) {
            if (!min_found) {
                report.min_value = v;
                min_found = true;
            }
            report.max_value = v;
        } else if (report.missing.size() < kReportExemplarCap) {
            report.missing.push_back(v);
        }
    }

    if (!collided.empty())
        report.duplicates = collect_duplicates(n.n, std::move(collided));

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

std::vector<VerificationReport> verify_range(BitWidth lo, BitWidth hi, unsigned jobs) {
    if (lo.n > hi.n)
        throw RangeError("invalid width range [" + std::to_string(lo.n) + ", " +
                         std::to_string(hi.n) + "]");
    std::vector<VerificationReport> reports;
    reports.reserve(hi.n - lo.n + 1);
    for (unsigned n = lo.n; n <= hi.n; ++n)
        reports.push_back(verify_width(BitWidth(n), jobs));
    return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.pass(); });
}

bool cross_check_encoders(BitWidth n) {
    if (n.n > kMaxCrossCheckWidth)
        throw RangeError("width " + std::to_string(n.n) + " exceeds cross-check guard " +
                         std::to_string(kMaxCrossCheckWidth));

    // Build the value -> pattern table by full enumeration once; this is the
    // exhaustive encoder evaluated at every value, without 2^n repeat sweeps.
    const std::uint64_t count = std::uint64_t{1} << n.n;
    constexpr std::uint64_t kUnset = ~std::uint64_t{0};
    std::vector<std::uint64_t> table(count, kUnset);
    for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
        const std::uint64_t value = decode(BitString(pattern, n));
        if (table[value] != kUnset)
            throw TheoremError("value " + std::to_string(value) + " has multiple width-" +
                               std::to_string(n.n) + " representations");
        table[value] = pattern;
    }
    for (std::uint64_t value = 0; value < count; ++value) {
        if (table[value] == kUnset)
            throw TheoremError("value " + std::to_string(value) + " has no width-" +
                               std::to_string(n.n) + " representation");
        if (encode(value, n).pattern() != table[value])
            return false;
    }
    return true;
}

PopcountProfile popcount_profile(BitWidth n) {
    if (n.n > kMaxSweepWidth)
        throw RangeError("width " + std::to_string(n.n) + " exceeds enumeration guard " +
                         std::to_string(kMaxSweepWidth));

    PopcountProfile profile;
    profile.width = n.n;
    const std::uint64_t count = std::uint64_t{1} << n.n;
    profile.rows.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t v = 0; v < count; ++v) {
        profile.rows.push_back({
            v,
            static_cast<unsigned>(std::popcount(encode(v, n).pattern())),
            static_cast<unsigned>(std::popcount(v)),
        });
    }
    return profile;
}

} // namespace abr
