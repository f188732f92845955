// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace mnofdm {

/// Largest accepted scaling factor between the two subcarrier spacings.
inline constexpr std::int64_t kMaxScalingFactor = std::int64_t{1} << 10;

/// Largest accepted subcarrier count for either numerology. Keeps m * l
/// products of the discrete basis inside 64-bit range.
inline constexpr std::int64_t kMaxSubcarriers = std::int64_t{1} << 31;

/// One OFDM parameter set. Index 1 is the wide (larger spacing) numerology,
/// index 2 the narrow one.
struct Numerology {
    int index = 1;
    double subcarrier_spacing_hz = 0.0;
    double symbol_duration_s = 0.0;
    std::int64_t num_subcarriers = 0;

    bool operator==(const Numerology&) const = default;
};

/// Two numerologies sharing bandwidth B and sampling duration T_s, with
/// spacing ratio nu = 2^mu.
class NumerologyPair {
public:
    /// Validates and builds a pair. Throws Error with OrderViolation,
    /// RatioNotPowerOfTwo or NonIntegralSubcarrierCount.
    static NumerologyPair make(double bandwidth_hz, double delta_f_wide, double delta_f_narrow);

    /// Dimensionless constructor used by the analysis tools: N^(1) = n1,
    /// N^(2) = nu * n1, with B normalized to n1 Hz (so delta_f^(1) = 1 Hz).
    static NumerologyPair from_counts(std::int64_t nu, std::int64_t n1);

    const Numerology& wide() const noexcept { return wide_; }
    const Numerology& narrow() const noexcept { return narrow_; }
    std::int64_t nu() const noexcept { return nu_; }
    int mu() const noexcept;
    double bandwidth_hz() const noexcept { return bandwidth_hz_; }
    double sampling_duration_s() const noexcept { return sampling_duration_s_; }

    std::int64_t n1() const noexcept { return wide_.num_subcarriers; }
    std::int64_t n2() const noexcept { return narrow_.num_subcarriers; }

    const Numerology& numerology(int index) const;

    bool operator==(const NumerologyPair&) const = default;

private:
    NumerologyPair() = default;

    Numerology wide_;
    Numerology narrow_;
    std::int64_t nu_ = 0;
    double bandwidth_hz_ = 0.0;
    double sampling_duration_s_ = 0.0;
};

/// nu = delta_f^(1)/delta_f^(2) = T^(2)/T^(1) = N^(2)/N^(1).
std::int64_t scaling_factor(const NumerologyPair& pair);

constexpr bool is_power_of_two(std::int64_t v) noexcept { return v > 0 && (v & (v - 1)) == 0; }

} // namespace mnofdm
