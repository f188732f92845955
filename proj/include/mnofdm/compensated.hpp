// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>

namespace mnofdm {

/// Neumaier-compensated running sum. The error term of each addition is
/// recovered exactly with TwoSum and folded back in when the value is read.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        // TwoSum: the rounding error of sum_ + x, independent of magnitudes.
        const double bp = t - sum_;
        const double err = (sum_ - (t - bp)) + (x - bp);
        sum_ = t;
        compensation_ += err;
    }

    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

class CompensatedComplexSum {
public:
    void add(std::complex<double> z) noexcept
    {
        re_.add(z.real());
        im_.add(z.imag());
    }

    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

} // namespace mnofdm
