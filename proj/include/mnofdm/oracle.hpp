// SPDX-License-Identifier: Apache-2.0
//
// Brute-force inner products. Nothing here uses the closed forms: the
// continuous product integrates conj(phi1_m) phi2_n numerically, the discrete
// products sum the sampled pulses term by term.

#pragma once

#include "mnofdm/ini.hpp"
#include "mnofdm/numerology.hpp"

#include <complex>
#include <cstdint>

namespace mnofdm::oracle {

inline constexpr double kMinQuadratureTol = 1e-13;
inline constexpr double kMaxQuadratureTol = 1e-6;
inline constexpr std::int64_t kMaxPanels = std::int64_t{1} << 20;

/// Adaptive Gauss-Kronrod (7/15) integral of conj(phi1_m(t)) phi2_n(t) over
/// [0, T^(1)]. The summed panel error estimate is <= tol on return; throws
/// Error(ToleranceNotReached) when kMaxPanels panels are not enough.
InnerProduct rho_continuous_quadrature(const NumerologyPair& pair, std::int64_t m, std::int64_t n, double tol);

/// sum_{l < N^(1)} conj(phi1_m[l]) phi2_n[l] with compensated accumulation.
InnerProduct rho_discrete_soe(const NumerologyPair& pair, std::int64_t m, std::int64_t n);

/// Same sum against segment q of the narrow pulse: phi2_n[q N^(1) + l].
/// Throws Error(IndexOutOfRange) unless 0 <= q < nu.
std::complex<double> segment_rho_soe(const NumerologyPair& pair, std::int64_t m, std::int64_t n, std::int64_t q);

} // namespace mnofdm::oracle
