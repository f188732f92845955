// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>

namespace mnofdm {

/// sin(pi x) with exact zeros at integers and exact +-1 at half-integers.
double sin_pi(double x) noexcept;

/// cos(pi x) with exact zeros at half-integers and exact +-1 at integers.
double cos_pi(double x) noexcept;

/// exp(j pi x), built from sin_pi/cos_pi.
std::complex<double> exp_j_pi(double x) noexcept;

/// exp(j 2 pi k / n) with the angle reduced as (k mod n) / n in integer
/// arithmetic first. Quarter-turn multiples come out exact.
std::complex<double> unit_phasor(std::int64_t k, std::int64_t n) noexcept;

/// sinc(x) = sin(pi x) / (pi x), sinc(0) = 1.
double sinc(double x) noexcept;

} // namespace mnofdm
