// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/error.hpp"

namespace mnofdm {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::RatioNotPowerOfTwo: return "RatioNotPowerOfTwo";
    case Errc::NonIntegralSubcarrierCount: return "NonIntegralSubcarrierCount";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DomainError: return "DomainError";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ToleranceNotReached: return "ToleranceNotReached";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::SampleRateMismatch: return "SampleRateMismatch";
    case Errc::InsufficientSamples: return "InsufficientSamples";
    case Errc::InconsistentConfig: return "InconsistentConfig";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

} // namespace mnofdm
