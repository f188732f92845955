// SPDX-License-Identifier: Apache-2.0
//
// Discrete-time two-numerology OFDM chain: per-numerology modulation,
// block-aligned time-domain multiplexing and correlator demodulation, plus
// an analytic INI predictor built from segment inner products.

#pragma once

#include "mnofdm/numerology.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace mnofdm {

using cdouble = std::complex<double>;

/// Symbols s_{k,m} for k in [0, K), m in [0, N), stored row-major by k.
class SymbolGrid {
public:
    /// All-zero grid.
    SymbolGrid(const Numerology& numerology, std::int64_t num_symbols);
    /// Throws Error(InvalidArgument) on size mismatch or non-finite entries.
    SymbolGrid(const Numerology& numerology, std::int64_t num_symbols, std::vector<cdouble> symbols);

    const Numerology& numerology() const noexcept { return numerology_; }
    std::int64_t num_symbols() const noexcept { return num_symbols_; }
    std::int64_t num_subcarriers() const noexcept { return numerology_.num_subcarriers; }

    cdouble at(std::int64_t k, std::int64_t m) const { return symbols_[offset(k, m)]; }
    void set(std::int64_t k, std::int64_t m, cdouble value);

    std::span<const cdouble> symbol(std::int64_t k) const;
    const std::vector<cdouble>& data() const noexcept { return symbols_; }

private:
    std::size_t offset(std::int64_t k, std::int64_t m) const;

    Numerology numerology_;
    std::int64_t num_symbols_;
    std::vector<cdouble> symbols_;
};

struct SampledSignal {
    double sampling_duration_s = 0.0;
    std::vector<cdouble> samples;
};

SampledSignal modulate(const SymbolGrid& grid);

/// Sample-wise sum. Throws Error(SampleRateMismatch) or Error(LengthMismatch).
SampledSignal multiplex(const SampledSignal& wide, const SampledSignal& narrow);

/// Correlates each block of N samples against every conj(phi_m).
/// Throws Error(InsufficientSamples) if the signal is shorter than K N.
SymbolGrid demodulate(const SampledSignal& signal, const Numerology& numerology, std::int64_t num_symbols);

/// Table of segment inner products sum_l conj(phi1_m[l]) phi2_n[q N1 + l],
/// filled from the brute-force oracle.
class SegmentTable {
public:
    explicit SegmentTable(const NumerologyPair& pair);

    const NumerologyPair& pair() const noexcept { return pair_; }
    cdouble at(std::int64_t m, std::int64_t n, std::int64_t q) const;

private:
    NumerologyPair pair_;
    std::vector<cdouble> values_;
};

/// INI predicted on subcarrier `index` of symbol k of the victim numerology
/// (1 = wide, 2 = narrow) from the interferer's symbols:
///   wide victim:   sum_n s2_{floor(k/nu), n} seg(m, n, k mod nu)
///   narrow victim: sum_q sum_m s1_{nu k + q, m} conj(seg(m, n, q))
/// Throws Error(InconsistentConfig) when the interferer grid does not belong
/// to the other numerology of the pair or k is out of range.
cdouble predict_ini(const NumerologyPair& pair, const SymbolGrid& interferer, int victim, std::int64_t k,
                    std::int64_t index);
cdouble predict_ini(const SegmentTable& table, const SymbolGrid& interferer, int victim, std::int64_t k,
                    std::int64_t index);

enum class Constellation { Qpsk, Qam16, RandomPhase };

const char* to_string(Constellation c) noexcept;
/// Accepts "qpsk", "16qam", "random".
Constellation parse_constellation(const std::string& name);

/// Which subcarriers carry data.
///   All: every subcarrier of both numerologies.
///   Orthogonal: wide m even, narrow n = nu * (odd m'). Every active narrow
///     subcarrier is a multiple of nu and none is co-located with an active
///     wide subcarrier, so the active sets are mutually orthogonal.
enum class ActiveSet { All, Orthogonal };

const char* to_string(ActiveSet s) noexcept;
ActiveSet parse_active_set(const std::string& name);

struct ExperimentConfig {
    std::int64_t nu = 2;
    std::int64_t n1 = 64;
    std::int64_t narrow_symbols = 4; ///< K^(2); the wide numerology runs nu * K^(2) symbols
    Constellation constellation = Constellation::Qpsk;
    ActiveSet active = ActiveSet::All;
    std::uint64_t seed = 42;
};

/// Unit-average-energy symbols drawn from std::mt19937_64 raw output
/// (no std distributions, so the stream is identical on every platform).
SymbolGrid random_grid(const Numerology& numerology, std::int64_t num_symbols, Constellation constellation,
                       std::mt19937_64& rng);

struct SubcarrierIni {
    int numerology = 1;
    std::int64_t index = 0;
    bool active = true;
    /// Mean over symbols of |INI|^2.
    double predicted_power = 0.0;
    double measured_power = 0.0;
    /// Expected power for unit-energy independent interferers:
    /// sum over active interferers of |segment product|^2 per overlapping segment.
    double expected_power = 0.0;
    /// Standard error of measured_power as a Monte-Carlo mean.
    double measured_power_stderr = 0.0;
};

struct IniReport {
    ExperimentConfig config;
    /// Per symbol, row-major like SymbolGrid: INI = demodulated - transmitted.
    std::vector<cdouble> predicted_wide;
    std::vector<cdouble> measured_wide;
    std::vector<cdouble> predicted_narrow;
    std::vector<cdouble> measured_narrow;
    std::vector<SubcarrierIni> per_subcarrier; ///< wide subcarriers first, then narrow
    double max_prediction_error = 0.0;
    /// Largest measured INI power over active wide subcarriers.
    double max_wide_victim_power = 0.0;
    double max_narrow_victim_power = 0.0;
    /// Largest single-numerology round-trip error (demodulate(modulate(grid)) - grid).
    double round_trip_error = 0.0;
};

IniReport run_experiment(const ExperimentConfig& config);

} // namespace mnofdm
