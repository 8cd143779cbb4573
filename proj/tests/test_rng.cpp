#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qsl/rng.hpp"

using namespace qsl::rng;

TEST_CASE("threefry2x64 known-answer vectors") {
    auto b = threefry2x64(0, 0, 0, 0);
    CHECK(b.x0 == 0xc2b6e3a8c2c69865ull);
    CHECK(b.x1 == 0x6f81ed42f350084dull);

    const uint64_t ones = ~0ull;
    b = threefry2x64(ones, ones, ones, ones);
    CHECK(b.x0 == 0xe02cb7c4d95d277aull);
    CHECK(b.x1 == 0xd06633d0893b8b68ull);

    b = threefry2x64(0xa4093822299f31d0ull, 0x082efa98ec4e6c89ull, 0x243f6a8885a308d3ull,
                     0x13198a2e03707344ull);
    CHECK(b.x0 == 0x263c7d30bb0f0af1ull);
    CHECK(b.x1 == 0x56be8361d3311526ull);

    b = threefry2x64(42, 0xdeadbeefull, 7, 123456789);
    CHECK(b.x0 == 0x086bda2527e3611dull);
    CHECK(b.x1 == 0x67b832a21b805845ull);
}

TEST_CASE("splitmix64 reference outputs") {
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFull);
    CHECK(splitmix64(0x9E3779B97F4A7C15ull) == 0x6E789E6AA1B965F4ull);
}

TEST_CASE("stream is a pure function of its address") {
    Stream a(42, kPurposeCounts, 0.25, 3, 17);
    Stream b(42, kPurposeCounts, 0.25, 3, 17);
    for (int i = 0; i < 64; ++i) CHECK(a() == b());

    Stream base(42, kPurposeCounts, 0.25, 3, 17);
    Stream seed(43, kPurposeCounts, 0.25, 3, 17);
    Stream purpose(42, kPurposeResample, 0.25, 3, 17);
    Stream l(42, kPurposeCounts, 0.275, 3, 17);
    Stream resample(42, kPurposeCounts, 0.25, 4, 17);
    Stream setting(42, kPurposeCounts, 0.25, 3, 18);
    const uint64_t first = base();
    CHECK(first != seed());
    CHECK(first != purpose());
    CHECK(first != l());
    CHECK(first != resample());
    CHECK(first != setting());
}

TEST_CASE("uniform01 lies in the open interval and has the right moments") {
    Stream s(7, kPurposeResample, 0.5, 1, 0);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = s.uniform01();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        sum += u;
        sumsq += u * u;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean - 0.5) < 0.005);
    CHECK(std::abs(var - 1.0 / 12.0) < 0.005);
}

TEST_CASE("poisson sampling matches the distribution moments") {
    SUBCASE("moderate mean") {
        Stream s(11, kPurposeCounts, 0.1, 0, 5);
        const int n = 50000;
        const double mean = 100.0;
        double sum = 0.0, sumsq = 0.0;
        for (int i = 0; i < n; ++i) {
            const auto k = poisson(s, mean);
            sum += static_cast<double>(k);
            sumsq += static_cast<double>(k) * static_cast<double>(k);
        }
        const double m = sum / n;
        const double v = sumsq / n - m * m;
        CHECK(std::abs(m - mean) < 0.5);
        CHECK(v / mean > 0.95);
        CHECK(v / mean < 1.05);
    }
    SUBCASE("small mean") {
        Stream s(11, kPurposeCounts, 0.2, 0, 5);
        const int n = 50000;
        const double mean = 0.5;
        double sum = 0.0;
        long long zeros = 0;
        for (int i = 0; i < n; ++i) {
            const auto k = poisson(s, mean);
            CHECK(k >= 0);
            sum += static_cast<double>(k);
            if (k == 0) ++zeros;
        }
        CHECK(std::abs(sum / n - mean) < 0.02);
        CHECK(std::abs(static_cast<double>(zeros) / n - std::exp(-0.5)) < 0.01);
    }
    SUBCASE("count-scale mean") {
        Stream s(11, kPurposeCounts, 0.3, 0, 5);
        const double mean = 65000.0;
        double sum = 0.0;
        const int n = 2000;
        for (int i = 0; i < n; ++i) sum += static_cast<double>(poisson(s, mean));
        CHECK(std::abs(sum / n - mean) < 30.0);
    }
    SUBCASE("degenerate mean") {
        Stream s(1, kPurposeCounts, 0.0, 0, 0);
        CHECK(poisson(s, 0.0) == 0);
        CHECK(poisson(s, -1.0) == 0);
    }
    SUBCASE("identical streams give identical counts") {
        Stream a(99, kPurposeCounts, 0.775, 12, 3);
        Stream b(99, kPurposeCounts, 0.775, 12, 3);
        for (int i = 0; i < 200; ++i) CHECK(poisson(a, 321.5) == poisson(b, 321.5));
    }
}
