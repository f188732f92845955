// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/error.hpp"
#include "mnofdm/numerology.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace mnofdm;

namespace {

Errc error_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an mnofdm::Error");
    return Errc::InvalidArgument;
}

bool within_ulps(double a, double b, int ulps)
{
    return std::abs(a - b) <= ulps * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));
}

} // namespace

TEST_CASE("make_pair for 30/15 kHz over 480 kHz")
{
    const auto p = NumerologyPair::make(480e3, 30e3, 15e3);
    CHECK(p.nu() == 2);
    CHECK(p.mu() == 1);
    CHECK(p.n1() == 16);
    CHECK(p.n2() == 32);
    CHECK(within_ulps(p.sampling_duration_s(), 1.0 / 480000.0, 1));
    CHECK(p.wide().index == 1);
    CHECK(p.narrow().index == 2);
}

TEST_CASE("make_pair rejects bad configurations")
{
    CHECK(error_of([] { NumerologyPair::make(480e3, 15e3, 30e3); }) == Errc::OrderViolation);
    CHECK(error_of([] { NumerologyPair::make(480e3, 15e3, 15e3); }) == Errc::OrderViolation);
    CHECK(error_of([] { NumerologyPair::make(480e3, 45e3, 15e3); }) == Errc::RatioNotPowerOfTwo);
    CHECK(error_of([] { NumerologyPair::make(480e3, 30e3, 20e3); }) == Errc::RatioNotPowerOfTwo);
    CHECK(error_of([] { NumerologyPair::make(500e3, 30e3, 15e3); }) == Errc::NonIntegralSubcarrierCount);
    // 360 kHz / 30 kHz = 12 is integral but not a power of two.
    CHECK(error_of([] { NumerologyPair::make(360e3, 30e3, 15e3); }) == Errc::NonIntegralSubcarrierCount);
    CHECK(error_of([] { NumerologyPair::make(-1.0, 30e3, 15e3); }) == Errc::InvalidArgument);
    CHECK(error_of([] { NumerologyPair::make(480e3, NAN, 15e3); }) == Errc::InvalidArgument);
    // nu = 2048 exceeds the cap.
    CHECK(error_of([] { NumerologyPair::make(2048.0 * 15e3, 2048.0 * 15e3, 15e3); }) == Errc::RatioNotPowerOfTwo);
}

TEST_CASE("scaling_factor agrees with every ratio")
{
    CHECK(scaling_factor(NumerologyPair::make(480e3, 30e3, 15e3)) == 2);
    CHECK(scaling_factor(NumerologyPair::make(960e3, 60e3, 15e3)) == 4);
    CHECK(scaling_factor(NumerologyPair::make(1920e3, 120e3, 15e3)) == 8);
}

TEST_CASE("pair invariants hold across the valid domain")
{
    for (double df2 : {15e3, 7.5e3, 1.0, 3.3e3, 1.0 / 3.0}) {
        for (std::int64_t nu = 2; nu <= kMaxScalingFactor; nu *= 2) {
            for (std::int64_t n1 = 1; n1 <= 1024; n1 *= 4) {
                const double df1 = df2 * static_cast<double>(nu);
                const auto p = NumerologyPair::make(static_cast<double>(n1) * df1, df1, df2);
                CAPTURE(df2);
                CAPTURE(nu);
                CAPTURE(n1);
                CHECK(p.nu() == nu);
                CHECK(p.n2() == nu * p.n1());
                CHECK(within_ulps(p.wide().symbol_duration_s * p.wide().subcarrier_spacing_hz, 1.0, 4));
                CHECK(within_ulps(p.narrow().symbol_duration_s * p.narrow().subcarrier_spacing_hz, 1.0, 4));
                CHECK(within_ulps(p.sampling_duration_s() * static_cast<double>(p.n1()) * p.wide().subcarrier_spacing_hz,
                                  1.0, 4));
                CHECK(scaling_factor(p) == nu);
                CHECK(NumerologyPair::make(static_cast<double>(n1) * df1, df1, df2) == p);
            }
        }
    }
}

TEST_CASE("from_counts builds the dimensionless pair")
{
    const auto p = NumerologyPair::from_counts(4, 8);
    CHECK(p.nu() == 4);
    CHECK(p.n1() == 8);
    CHECK(p.n2() == 32);
    CHECK(p.wide().subcarrier_spacing_hz == 1.0);
    CHECK(error_of([] { NumerologyPair::from_counts(3, 8); }) == Errc::RatioNotPowerOfTwo);
    CHECK(error_of([] { NumerologyPair::from_counts(1, 8); }) == Errc::RatioNotPowerOfTwo);
    CHECK(error_of([] { NumerologyPair::from_counts(2, 6); }) == Errc::NonIntegralSubcarrierCount);
    CHECK(error_of([] { NumerologyPair::from_counts(2, 0); }) == Errc::NonIntegralSubcarrierCount);
    CHECK_THROWS_AS(p.numerology(3), Error);
}
