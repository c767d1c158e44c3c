#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "verify.hpp"

using namespace abr;

TEST_CASE("width 1 and 2 sweeps pass with the expected value sets") {
    const auto r1 = verify_width(BitWidth(1));
    CHECK(r1.pass());
    CHECK(r1.pattern_count == 2);
    CHECK(r1.distinct_values == 2);
    CHECK(r1.min_value == 0);
    CHECK(r1.max_value == 1);

    const auto r2 = verify_width(BitWidth(2));
    CHECK(r2.pass());
    CHECK(r2.distinct_values == 4);
    CHECK(r2.max_value == 3);
    CHECK(r2.duplicates.empty());
    CHECK(r2.missing.empty());
}

TEST_CASE("mid-size sweep passes") {
    const auto report = verify_width(BitWidth(12));
    CHECK(report.pass());
    CHECK(report.distinct_values == 4096);
    CHECK(report.duplicate_count == 0);
    CHECK(report.missing_count == 0);
}

TEST_CASE("report is independent of the worker count") {
    const auto serial = verify_width(BitWidth(10), 1);
    for (unsigned jobs : {2u, 3u, 8u}) {
        const auto parallel = verify_width(BitWidth(10), jobs);
        CHECK(parallel.width == serial.width);
        CHECK(parallel.distinct_values == serial.distinct_values);
        CHECK(parallel.min_value == serial.min_value);
        CHECK(parallel.max_value == serial.max_value);
        CHECK(parallel.duplicate_count == serial.duplicate_count);
        CHECK(parallel.missing_count == serial.missing_count);
        CHECK(parallel.to_kv() == serial.to_kv());
    }
}

TEST_CASE("kv serialization is stable and elapsed stays out of it") {
    const auto report = verify_width(BitWidth(4));
    CHECK(report.to_kv() ==
          "width=4 patterns=16 distinct=16 min=0 max=15 duplicates=0 missing=0 pass=true");
    CHECK(report.to_text().find("PASS") != std::string::npos);
    CHECK(report.to_text().find("ms") != std::string::npos);
}

TEST_CASE("a report with gaps or collisions serializes as a failure") {
    VerificationReport report;
    report.width = 2;
    report.pattern_count = 4;
    report.distinct_values = 3;
    report.min_value = 0;
    report.max_value = 3;
    report.duplicate_count = 1;
    report.missing_count = 1;
    report.duplicates = {{3, 0b10, 0b11}};
    report.missing = {2};
    CHECK(!report.pass());
    CHECK(report.to_kv() ==
          "width=2 patterns=4 distinct=3 min=0 max=3 duplicates=1 missing=1 pass=false");
    CHECK(report.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("verify_range") {
    const auto reports = verify_range(BitWidth(1), BitWidth(4));
    REQUIRE(reports.size() == 4);
    CHECK(all_pass(reports));

    const auto single = verify_range(BitWidth(5), BitWidth(5));
    REQUIRE(single.size() == 1);
    CHECK(single.front().width == 5);

    CHECK_THROWS_AS(verify_range(BitWidth(3), BitWidth(2)), RangeError);
    CHECK_THROWS_AS(verify_width(BitWidth(25)), RangeError);
}

TEST_CASE("encoder cross-check") {
    CHECK(cross_check_encoders(BitWidth(1)));
    CHECK(cross_check_encoders(BitWidth(4)));
    CHECK(cross_check_encoders(BitWidth(10)));
    CHECK_THROWS_AS(cross_check_encoders(BitWidth(17)), RangeError);
}

TEST_CASE("popcount profile at width 4") {
    const auto profile = popcount_profile(BitWidth(4));
    REQUIRE(profile.rows.size() == 16);
    for (std::uint64_t v = 0; v < 16; ++v)
        CHECK(profile.rows[static_cast<std::size_t>(v)].value == v);

    CHECK(profile.rows[9].abr_popcount == 4);
    CHECK(profile.rows[9].bns_popcount == 2);
    CHECK(profile.rows[0].abr_popcount == 0);
    CHECK(profile.rows[0].bns_popcount == 0);
    CHECK(profile.rows[15].abr_popcount == 2);
    CHECK(profile.rows[15].bns_popcount == 4);
}

TEST_CASE("profile self-checks: bns popcount sum and unique full-usage row") {
    for (unsigned n : {2u, 4u, 6u, 8u, 10u}) {
        const auto profile = popcount_profile(BitWidth(n));
        std::uint64_t bns_total = 0;
        std::uint64_t full_rows = 0;
        std::uint64_t full_value = 0;
        for (const auto& row : profile.rows) {
            bns_total += row.bns_popcount;
            CHECK(row.abr_popcount <= n);
            CHECK(row.bns_popcount <= n);
            if (row.abr_popcount == n) {
                ++full_rows;
                full_value = row.value;
            }
        }
        CHECK(bns_total == static_cast<std::uint64_t>(n) << (n - 1));
        CHECK(full_rows == 1);
        if (n % 2 == 0)
            CHECK(full_value == ((std::uint64_t{1} << (n + 1)) - 5) / 3);
    }
}

TEST_CASE("width-6 full-usage value is 41") {
    const auto profile = popcount_profile(BitWidth(6));
    std::uint64_t full_value = 0;
    for (const auto& row : profile.rows)
        if (row.abr_popcount == 6)
            full_value = row.value;
    CHECK(full_value == 41);
}

TEST_CASE("profile guard") {
    CHECK_THROWS_AS(popcount_profile(BitWidth(25)), RangeError);
}
