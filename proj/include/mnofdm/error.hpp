// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mnofdm {

enum class Errc {
    OrderViolation,
    RatioNotPowerOfTwo,
    NonIntegralSubcarrierCount,
    IndexOutOfRange,
    DomainError,
    CapExceeded,
    ToleranceNotReached,
    LengthMismatch,
    SampleRateMismatch,
    InsufficientSamples,
    InconsistentConfig,
    InvalidArgument,
    Io,
};

const char* to_string(Errc code) noexcept;

/// Numeric-domain failures (as opposed to bad configuration).
constexpr bool is_numeric_domain(Errc code) noexcept
{
    return code == Errc::DomainError || code == Errc::ToleranceNotReached;
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace mnofdm
