// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/phasor.hpp"

#include <cmath>
#include <numbers>

namespace mnofdm {

namespace {

// Reduces x to r in [-1, 1] with x = r + 2k; fmod is exact.
double reduce_two(double x) noexcept
{
    double r = std::fmod(x, 2.0);
    if (r > 1.0) {
        r -= 2.0;
    } else if (r < -1.0) {
        r += 2.0;
    }
    return r;
}

// Below this |pi x| the Taylor series is used; its truncation error is
// bounded by (1e-4)^8 / 9! < 1e-37.
constexpr double kSincTaylorLimit = 1e-4;

} // namespace

double sin_pi(double x) noexcept
{
    if (!std::isfinite(x)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double r = reduce_two(x);
    if (r == 0.0 || r == 1.0 || r == -1.0) {
        return 0.0;
    }
    if (r == 0.5) {
        return 1.0;
    }
    if (r == -0.5) {
        return -1.0;
    }
    // Fold into [-1/2, 1/2] so the sin argument stays small.
    if (r > 0.5) {
        return std::sin(std::numbers::pi * (1.0 - r));
    }
    if (r < -0.5) {
        return std::sin(std::numbers::pi * (-1.0 - r));
    }
    return std::sin(std::numbers::pi * r);
}

double cos_pi(double x) noexcept
{
    if (!std::isfinite(x)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double r = std::abs(reduce_two(x));
    if (r == 0.5) {
        return 0.0;
    }
    if (r == 0.0) {
        return 1.0;
    }
    if (r == 1.0) {
        return -1.0;
    }
    if (r > 0.5) {
        return -std::cos(std::numbers::pi * (1.0 - r));
    }
    return std::cos(std::numbers::pi * r);
}

std::complex<double> exp_j_pi(double x) noexcept
{
    return {cos_pi(x), sin_pi(x)};
}

std::complex<double> unit_phasor(std::int64_t k, std::int64_t n) noexcept
{
    std::int64_t r = k % n;
    if (r < 0) {
        r += n;
    }
    // 2 r / n is exact whenever n is a power of two.
    return exp_j_pi(2.0 * static_cast<double>(r) / static_cast<double>(n));
}

double sinc(double x) noexcept
{
    const double y = std::numbers::pi * x;
    if (std::abs(y) < kSincTaylorLimit) {
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0));
    }
    return sin_pi(x) / y;
}

} // namespace mnofdm
