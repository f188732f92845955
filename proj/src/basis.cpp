// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/basis.hpp"

#include "mnofdm/error.hpp"
#include "mnofdm/phasor.hpp"

#include <cmath>
#include <string>

namespace mnofdm {

SubcarrierRef::SubcarrierRef(const Numerology& numerology, std::int64_t m) : numerology_(numerology), m_(m)
{
    if (m < 0 || m >= numerology.num_subcarriers) {
        throw Error(Errc::IndexOutOfRange, "subcarrier " + std::to_string(m) + " outside [0, "
                                               + std::to_string(numerology.num_subcarriers) + ")");
    }
}

std::complex<double> pulse_continuous(const SubcarrierRef& sc, double t_s)
{
    const double period = sc.numerology().symbol_duration_s;
    if (!(t_s >= 0.0 && t_s <= period)) {
        return {0.0, 0.0};
    }
    // Cycles completed by time t; only the fractional part matters.
    const double cycles = static_cast<double>(sc.index()) * (t_s / period);
    const double frac = cycles - std::floor(cycles);
    return exp_j_pi(2.0 * frac) / std::sqrt(period);
}

std::complex<double> pulse_discrete(const SubcarrierRef& sc, std::int64_t l)
{
    const std::int64_t n = sc.numerology().num_subcarriers;
    if (l < 0 || l >= n) {
        throw Error(Errc::IndexOutOfRange,
                    "sample " + std::to_string(l) + " outside [0, " + std::to_string(n) + ")");
    }
    // (m l) mod N keeps the angle in one turn; m, l < N so m * l cannot overflow
    // for the subcarrier counts a NumerologyPair admits.
    return unit_phasor(sc.index() * l, n) / std::sqrt(static_cast<double>(n));
}

} // namespace mnofdm
