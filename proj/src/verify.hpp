#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"

// Exhaustive desk-scale verification that width-n ABR strings hit every value
// in [0, 2^n) exactly once, plus the per-value bit-usage profile. The sweep is
// a pure map-reduce over the pattern space: workers share nothing and the
// merged report is identical for any worker count.

namespace abr {

inline constexpr unsigned kMaxCrossCheckWidth = 16;
inline constexpr std::size_t kReportExemplarCap = 16;

struct DuplicateEntry {
    std::uint64_t value;
    std::uint64_t pattern_a;
    std::uint64_t pattern_b;
};

struct VerificationReport {
    unsigned width = 0;
    std::uint64_t pattern_count = 0;
    std::uint64_t distinct_values = 0;
    std::uint64_t min_value = 0;
    std::uint64_t max_value = 0;
    std::uint64_t duplicate_count = 0; // patterns landing on an already-seen value
    std::uint64_t missing_count = 0;
    std::vector<DuplicateEntry> duplicates; // exemplars, capped
    std::vector<std::uint64_t> missing;     // exemplars, capped
    std::chrono::milliseconds elapsed{0};

    bool pass() const;

    /// One-line human summary (includes timing).
    std::string to_text() const;
    /// Machine-readable key=value line; carries no timing, byte-stable
    /// across runs.
    std::string to_kv() const;
};

/// Decodes all 2^n patterns and tallies the value multiset.
/// jobs = 0 picks the machine's parallelism. Requires n <= 24.
VerificationReport verify_width(BitWidth n, unsigned jobs = 0);

/// One report per width in [lo, hi].
std::vector<VerificationReport> verify_range(BitWidth lo, BitWidth hi, unsigned jobs = 0);

bool all_pass(const std::vector<VerificationReport>& reports);

/// True iff the fast encoder equals the exhaustive oracle on every value.
/// Requires n <= 16.
bool cross_check_encoders(BitWidth n);

struct ProfileRow {
    std::uint64_t value;
    unsigned abr_popcount;
    unsigned bns_popcount;
};

struct PopcountProfile {
    unsigned width = 0;
    std::vector<ProfileRow> rows; // exactly 2^width rows, values in order
};

/// Set-bit counts of both encodings for every value. Requires n <= 24.
PopcountProfile popcount_profile(BitWidth n);

} // namespace abr
