// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/numerology.hpp"

#include "mnofdm/error.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace mnofdm {

namespace {

// Relative slack when recognizing an integer ratio from floating-point input.
constexpr double kRatioSlack = 1e-12;

std::int64_t integral_or_zero(double x)
{
    if (!std::isfinite(x) || x < 0.5 || x > 9.0e15) {
        return 0;
    }
    const double r = std::round(x);
    return std::abs(x - r) <= kRatioSlack * r ? static_cast<std::int64_t>(r) : 0;
}

Numerology make_numerology(int index, double spacing_hz, std::int64_t count)
{
    return Numerology{index, spacing_hz, 1.0 / spacing_hz, count};
}

} // namespace

NumerologyPair NumerologyPair::make(double bandwidth_hz, double delta_f_wide, double delta_f_narrow)
{
    for (double v : {bandwidth_hz, delta_f_wide, delta_f_narrow}) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw Error(Errc::InvalidArgument, "bandwidth and subcarrier spacings must be finite and > 0");
        }
    }
    if (delta_f_wide <= delta_f_narrow) {
        throw Error(Errc::OrderViolation, "wide subcarrier spacing must exceed the narrow one");
    }

    const double ratio = delta_f_wide / delta_f_narrow;
    const std::int64_t nu = integral_or_zero(ratio);
    if (nu < 2 || !is_power_of_two(nu) || nu > kMaxScalingFactor) {
        throw Error(Errc::RatioNotPowerOfTwo,
                    "spacing ratio " + std::to_string(ratio) + " is not a power of two in [2, "
                        + std::to_string(kMaxScalingFactor) + "]");
    }

    const std::int64_t n1 = integral_or_zero(bandwidth_hz / delta_f_wide);
    if (n1 == 0 || !is_power_of_two(n1)) {
        throw Error(Errc::NonIntegralSubcarrierCount,
                    "B / delta_f^(1) = " + std::to_string(bandwidth_hz / delta_f_wide)
                        + " is not a power-of-two subcarrier count");
    }
    const std::int64_t n2 = integral_or_zero(bandwidth_hz / delta_f_narrow);
    if (n2 != nu * n1) {
        throw Error(Errc::NonIntegralSubcarrierCount,
                    "B / delta_f^(2) = " + std::to_string(bandwidth_hz / delta_f_narrow)
                        + " is not a power-of-two subcarrier count");
    }

    if (n2 > kMaxSubcarriers) {
        throw Error(Errc::InvalidArgument, "N^(2) = " + std::to_string(n2) + " exceeds the supported maximum");
    }

    // The narrow spacing is re-derived from the wide one so every ratio is exact
    // (division by a power of two does not round).
    const double narrow_hz = delta_f_wide / static_cast<double>(nu);

    NumerologyPair p;
    p.wide_ = make_numerology(1, delta_f_wide, n1);
    p.narrow_ = make_numerology(2, narrow_hz, n2);
    p.nu_ = nu;
    p.bandwidth_hz_ = static_cast<double>(n1) * delta_f_wide;
    p.sampling_duration_s_ = 1.0 / p.bandwidth_hz_;
    return p;
}

NumerologyPair NumerologyPair::from_counts(std::int64_t nu, std::int64_t n1)
{
    if (nu < 2 || !is_power_of_two(nu) || nu > kMaxScalingFactor) {
        throw Error(Errc::RatioNotPowerOfTwo, "nu = " + std::to_string(nu) + " is not a power of two in [2, "
                                                  + std::to_string(kMaxScalingFactor) + "]");
    }
    if (!is_power_of_two(n1) || n1 > kMaxSubcarriers) {
        throw Error(Errc::NonIntegralSubcarrierCount, "N^(1) = " + std::to_string(n1) + " is not a power of two");
    }
    return make(static_cast<double>(n1), 1.0, 1.0 / static_cast<double>(nu));
}

int NumerologyPair::mu() const noexcept
{
    return std::countr_zero(static_cast<std::uint64_t>(nu_));
}

const Numerology& NumerologyPair::numerology(int index) const
{
    if (index == 1) {
        return wide_;
    }
    if (index == 2) {
        return narrow_;
    }
    throw Error(Errc::InvalidArgument, "numerology index must be 1 or 2");
}

std::int64_t scaling_factor(const NumerologyPair& pair)
{
    const double nu = static_cast<double>(pair.nu());
    const Numerology& w = pair.wide();
    const Numerology& n = pair.narrow();
    if (w.subcarrier_spacing_hz / n.subcarrier_spacing_hz != nu || n.symbol_duration_s / w.symbol_duration_s != nu
        || n.num_subcarriers != pair.nu() * w.num_subcarriers) {
        throw Error(Errc::InconsistentConfig, "numerology ratios disagree");
    }
    return pair.nu();
}

} // namespace mnofdm
