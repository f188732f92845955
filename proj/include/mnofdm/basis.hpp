// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mnofdm/numerology.hpp"

#include <complex>
#include <cstdint>

namespace mnofdm {

/// Subcarrier m of one numerology, 0 <= m < N^(i).
class SubcarrierRef {
public:
    /// Throws Error(IndexOutOfRange) when m is outside the numerology.
    SubcarrierRef(const Numerology& numerology, std::int64_t m);

    const Numerology& numerology() const noexcept { return numerology_; }
    std::int64_t index() const noexcept { return m_; }

private:
    Numerology numerology_;
    std::int64_t m_;
};

/// Rectangular pulse exp(j2 pi m t / T) / sqrt(T) on [0, T], zero elsewhere.
std::complex<double> pulse_continuous(const SubcarrierRef& sc, double t_s);

/// Sample l of the unit-energy discrete pulse exp(j2 pi m l / N) / sqrt(N).
/// Throws Error(IndexOutOfRange) for l outside [0, N).
std::complex<double> pulse_discrete(const SubcarrierRef& sc, std::int64_t l);

} // namespace mnofdm
