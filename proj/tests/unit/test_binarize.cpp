#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "illiqdep/binarize.hpp"
#include "illiqdep/error.hpp"
#include "illiqdep/rng.hpp"

using namespace illiqdep;

namespace {

std::vector<std::uint8_t> bits_of(const BinarySeries& s) {
    return {s.bits().begin(), s.bits().end()};
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no illiqdep::Error thrown";
    return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Binarize, ZeroThreshold) {
    const ReturnSeries r({0.01, 0.0, -0.02}, "x");
    EXPECT_EQ(bits_of(binarize(r, 0.0)), (std::vector<std::uint8_t>{1, 0, 1}));
}

TEST(Binarize, AllZeros) {
    const ReturnSeries r({0.0, 0.0}, "x");
    EXPECT_EQ(bits_of(binarize(r)), (std::vector<std::uint8_t>{0, 0}));
}

TEST(Binarize, ToleranceAbsorbsTinyReturn) {
    const ReturnSeries r({1e-9, 0.5}, "x");
    const auto s = binarize(r, 1e-8);
    EXPECT_EQ(bits_of(s), (std::vector<std::uint8_t>{0, 1}));
    EXPECT_DOUBLE_EQ(s.threshold(), 1e-8);
    EXPECT_EQ(s.source_id(), "x");
}

TEST(Binarize, RejectsBadInput) {
    EXPECT_EQ(kind_of([] { (void)ReturnSeries({}, "x"); }), ErrorKind::InvalidInput);
    try {
        (void)ReturnSeries({0.1, std::numeric_limits<double>::quiet_NaN(), 0.2}, "x");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
        EXPECT_EQ(e.index(), 1u);
    }
    EXPECT_EQ(kind_of([] {
                  (void)ReturnSeries({0.1, std::numeric_limits<double>::infinity()}, "x");
              }),
              ErrorKind::InvalidInput);
    const ReturnSeries ok({0.1, 0.2}, "x");
    EXPECT_EQ(kind_of([&] { (void)binarize(ok, -1.0); }), ErrorKind::InvalidInput);
    // A single return cannot form a binary series.
    EXPECT_EQ(kind_of([] { (void)binarize(ReturnSeries({0.1}, "x")); }),
              ErrorKind::InvalidInput);
}

TEST(Binarize, Properties) {
    CounterRng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 60;
        std::vector<double> v(n), neg(n);
        for (std::size_t t = 0; t < n; ++t) {
            // Mix exact zeros, tiny values and ordinary returns.
            const auto pick = rng() % 3;
            v[t] = pick == 0 ? 0.0 : pick == 1 ? 1e-10 * (rng.uniform() - 0.5)
                                               : rng.uniform() - 0.5;
            neg[t] = -v[t];
        }
        const double tau = (rng() % 2) ? 0.0 : 1e-10;
        const auto s = binarize(ReturnSeries(v, "r"), tau);
        // Sign invariance.
        EXPECT_EQ(bits_of(s), bits_of(binarize(ReturnSeries(neg, "r"), tau)));
        // Idempotent under re-thresholding the 0/1 values with the same tau.
        std::vector<double> as_real(s.bits().begin(), s.bits().end());
        EXPECT_EQ(bits_of(binarize(ReturnSeries(as_real, "r"), tau)), bits_of(s));
        // Counts partition n.
        const auto ones = s.count_ones();
        const auto zeros = static_cast<std::size_t>(std::count(s.bits().begin(), s.bits().end(), 0));
        EXPECT_EQ(ones + zeros, n);
    }
}

TEST(SampleMean, HandValues) {
    EXPECT_DOUBLE_EQ(sample_mean(BinarySeries({1, 0, 1, 0})), 0.5);
    EXPECT_DOUBLE_EQ(sample_mean(BinarySeries({1, 1, 1})), 1.0);
}

TEST(BinarySeries, RejectsNonBinary) {
    EXPECT_EQ(kind_of([] { (void)BinarySeries({0, 2, 1}); }), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of([] { (void)BinarySeries({1}); }), ErrorKind::InvalidInput);
}

TEST(Csv, HeaderedTwoColumn) {
    std::istringstream in("date,return\n2020-01-02,0.01\n2020-01-03,0\n2020-01-06,-0.5\n");
    const auto r = parse_returns_csv(in, "abc");
    ASSERT_EQ(r.size(), 3u);
    EXPECT_TRUE(r.has_timestamps());
    EXPECT_DOUBLE_EQ(r.values()[2], -0.5);
    EXPECT_EQ(r.source_id(), "abc");
}

TEST(Csv, HeaderlessSingleColumnWithCrlfAndBlankLines) {
    std::istringstream in("0.01\r\n\r\n0\r\n+0.02\r\n");
    const auto r = parse_returns_csv(in, "abc");
    ASSERT_EQ(r.size(), 3u);
    EXPECT_FALSE(r.has_timestamps());
    EXPECT_DOUBLE_EQ(r.values()[2], 0.02);
}

TEST(Csv, UnparseableRowNamed) {
    std::istringstream in("date,return\n2020-01-02,0.01\n2020-01-03,abc\n");
    try {
        (void)parse_returns_csv(in, "x");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
        EXPECT_EQ(e.index(), 3u);
        EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos);
    }
}

TEST(Csv, MissingValueRejected) {
    std::istringstream in("2020-01-02,0.01\n2020-01-03,\n");
    EXPECT_EQ(kind_of([&] { (void)parse_returns_csv(in, "x"); }), ErrorKind::InvalidInput);
}

TEST(Csv, DatesMustIncrease) {
    std::istringstream in("2020-01-03,0.01\n2020-01-02,0.02\n");
    EXPECT_EQ(kind_of([&] { (void)parse_returns_csv(in, "x"); }), ErrorKind::InvalidInput);
    std::istringstream bad_date("2020-02-30,0.01\n2020-03-01,0.02\n");
    EXPECT_EQ(kind_of([&] { (void)parse_returns_csv(bad_date, "x"); }), ErrorKind::InvalidInput);
}

TEST(Csv, TooManyColumns) {
    std::istringstream in("2020-01-03,0.01,7\n");
    EXPECT_EQ(kind_of([&] { (void)parse_returns_csv(in, "x"); }), ErrorKind::InvalidInput);
}
