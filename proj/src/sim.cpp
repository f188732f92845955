// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/sim.hpp"

#include "mnofdm/error.hpp"
#include "mnofdm/oracle.hpp"
#include "mnofdm/phasor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mnofdm {

namespace {

// phi_1[r] for r in [0, N): every phi_m[l] equals entry (m l) mod N.
std::vector<cdouble> basis_table(std::int64_t n)
{
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<cdouble> table(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        table[static_cast<std::size_t>(r)] = unit_phasor(r, n) * norm;
    }
    return table;
}

double mean(std::span<const double> xs)
{
    double acc = 0.0;
    for (double x : xs) {
        acc += x;
    }
    return xs.empty() ? 0.0 : acc / static_cast<double>(xs.size());
}

// Standard error of the mean of `xs`, treating consecutive runs of `group`
// samples as one observation (they share interferer symbols).
double grouped_stderr(std::span<const double> xs, std::size_t group)
{
    const std::size_t blocks = xs.size() / group;
    if (blocks < 2) {
        return 0.0;
    }
    std::vector<double> means(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        means[b] = mean(xs.subspan(b * group, group));
    }
    const double mu = mean(means);
    double ss = 0.0;
    for (double x : means) {
        ss += (x - mu) * (x - mu);
    }
    return std::sqrt(ss / static_cast<double>(blocks - 1) / static_cast<double>(blocks));
}

bool wide_active(ActiveSet set, std::int64_t m)
{
    return set == ActiveSet::All || m % 2 == 0;
}

bool narrow_active(ActiveSet set, std::int64_t n, std::int64_t nu)
{
    return set == ActiveSet::All || n % (2 * nu) == nu;
}

} // namespace

SymbolGrid::SymbolGrid(const Numerology& numerology, std::int64_t num_symbols)
    : SymbolGrid(numerology, num_symbols,
                 std::vector<cdouble>(static_cast<std::size_t>(std::max<std::int64_t>(num_symbols, 0)
                                                               * numerology.num_subcarriers)))
{
}

SymbolGrid::SymbolGrid(const Numerology& numerology, std::int64_t num_symbols, std::vector<cdouble> symbols)
    : numerology_(numerology), num_symbols_(num_symbols), symbols_(std::move(symbols))
{
    if (num_symbols < 0 || numerology.num_subcarriers < 1) {
        throw Error(Errc::InvalidArgument, "grid needs K >= 0 symbols and N >= 1 subcarriers");
    }
    if (symbols_.size() != static_cast<std::size_t>(num_symbols * numerology.num_subcarriers)) {
        throw Error(Errc::InvalidArgument, "grid holds " + std::to_string(symbols_.size()) + " symbols, expected "
                                               + std::to_string(num_symbols * numerology.num_subcarriers));
    }
    for (const cdouble& s : symbols_) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw Error(Errc::InvalidArgument, "grid symbols must be finite");
        }
    }
}

void SymbolGrid::set(std::int64_t k, std::int64_t m, cdouble value)
{
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Error(Errc::InvalidArgument, "grid symbols must be finite");
    }
    symbols_[offset(k, m)] = value;
}

std::span<const cdouble> SymbolGrid::symbol(std::int64_t k) const
{
    return std::span<const cdouble>(symbols_).subspan(offset(k, 0), static_cast<std::size_t>(num_subcarriers()));
}

std::size_t SymbolGrid::offset(std::int64_t k, std::int64_t m) const
{
    if (k < 0 || k >= num_symbols_ || m < 0 || m >= num_subcarriers()) {
        throw Error(Errc::IndexOutOfRange, "grid cell (" + std::to_string(k) + ", " + std::to_string(m) + ")");
    }
    return static_cast<std::size_t>(k * num_subcarriers() + m);
}

SampledSignal modulate(const SymbolGrid& grid)
{
    const std::int64_t n = grid.num_subcarriers();
    const auto table = basis_table(n);
    SampledSignal out{1.0 / (grid.numerology().subcarrier_spacing_hz * static_cast<double>(n)), {}};
    out.samples.resize(static_cast<std::size_t>(grid.num_symbols() * n));

    for (std::int64_t k = 0; k < grid.num_symbols(); ++k) {
        const auto s = grid.symbol(k);
        for (std::int64_t l = 0; l < n; ++l) {
            cdouble acc{};
            for (std::int64_t m = 0; m < n; ++m) {
                acc += s[static_cast<std::size_t>(m)] * table[static_cast<std::size_t>((m * l) % n)];
            }
            out.samples[static_cast<std::size_t>(k * n + l)] = acc;
        }
    }
    return out;
}

SampledSignal multiplex(const SampledSignal& wide, const SampledSignal& narrow)
{
    const double ts = wide.sampling_duration_s;
    if (!(std::abs(ts - narrow.sampling_duration_s) <= 1e-12 * std::abs(ts))) {
        throw Error(Errc::SampleRateMismatch, "signals use different sampling durations");
    }
    if (wide.samples.size() != narrow.samples.size()) {
        throw Error(Errc::LengthMismatch, "signal lengths " + std::to_string(wide.samples.size()) + " and "
                                              + std::to_string(narrow.samples.size()) + " differ");
    }
    SampledSignal out{ts, wide.samples};
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        out.samples[i] += narrow.samples[i];
    }
    return out;
}

SymbolGrid demodulate(const SampledSignal& signal, const Numerology& numerology, std::int64_t num_symbols)
{
    const std::int64_t n = numerology.num_subcarriers;
    if (num_symbols < 0 || static_cast<std::int64_t>(signal.samples.size()) < num_symbols * n) {
        throw Error(Errc::InsufficientSamples, "signal has " + std::to_string(signal.samples.size())
                                                   + " samples, need " + std::to_string(num_symbols * n));
    }
    const auto table = basis_table(n);
    SymbolGrid out(numerology, num_symbols);
    for (std::int64_t k = 0; k < num_symbols; ++k) {
        const cdouble* block = signal.samples.data() + k * n;
        for (std::int64_t m = 0; m < n; ++m) {
            cdouble acc{};
            for (std::int64_t l = 0; l < n; ++l) {
                acc += block[l] * std::conj(table[static_cast<std::size_t>((m * l) % n)]);
            }
            out.set(k, m, acc);
        }
    }
    return out;
}

SegmentTable::SegmentTable(const NumerologyPair& pair)
    : pair_(pair), values_(static_cast<std::size_t>(pair.n1() * pair.n2() * pair.nu()))
{
    for (std::int64_t m = 0; m < pair.n1(); ++m) {
        for (std::int64_t n = 0; n < pair.n2(); ++n) {
            for (std::int64_t q = 0; q < pair.nu(); ++q) {
                values_[static_cast<std::size_t>((m * pair.n2() + n) * pair.nu() + q)] =
                    oracle::segment_rho_soe(pair, m, n, q);
            }
        }
    }
}

cdouble SegmentTable::at(std::int64_t m, std::int64_t n, std::int64_t q) const
{
    if (m < 0 || m >= pair_.n1() || n < 0 || n >= pair_.n2() || q < 0 || q >= pair_.nu()) {
        throw Error(Errc::IndexOutOfRange, "segment table cell out of range");
    }
    return values_[static_cast<std::size_t>((m * pair_.n2() + n) * pair_.nu() + q)];
}

namespace {

template <typename Segment>
cdouble predict_with(const NumerologyPair& pair, Segment&& seg, const SymbolGrid& interferer, int victim,
                     std::int64_t k, std::int64_t index)
{
    const std::int64_t nu = pair.nu();
    if (victim == 1) {
        if (interferer.numerology() != pair.narrow()) {
            throw Error(Errc::InconsistentConfig, "a wide victim needs a narrow-numerology interferer grid");
        }
        if (k < 0 || k / nu >= interferer.num_symbols() || index < 0 || index >= pair.n1()) {
            throw Error(Errc::InconsistentConfig, "wide symbol/subcarrier outside the interferer's span");
        }
        const auto s = interferer.symbol(k / nu);
        cdouble acc{};
        for (std::int64_t n = 0; n < pair.n2(); ++n) {
            const cdouble sn = s[static_cast<std::size_t>(n)];
            if (sn != cdouble{}) {
                acc += sn * seg(index, n, k % nu);
            }
        }
        return acc;
    }
    if (victim == 2) {
        if (interferer.numerology() != pair.wide()) {
            throw Error(Errc::InconsistentConfig, "a narrow victim needs a wide-numerology interferer grid");
        }
        if (k < 0 || nu * (k + 1) > interferer.num_symbols() || index < 0 || index >= pair.n2()) {
            throw Error(Errc::InconsistentConfig, "narrow symbol/subcarrier outside the interferer's span");
        }
        cdouble acc{};
        for (std::int64_t q = 0; q < nu; ++q) {
            const auto s = interferer.symbol(nu * k + q);
            for (std::int64_t m = 0; m < pair.n1(); ++m) {
                const cdouble sm = s[static_cast<std::size_t>(m)];
                if (sm != cdouble{}) {
                    acc += sm * std::conj(seg(m, index, q));
                }
            }
        }
        return acc;
    }
    throw Error(Errc::InconsistentConfig, "victim numerology must be 1 or 2");
}

} // namespace

cdouble predict_ini(const NumerologyPair& pair, const SymbolGrid& interferer, int victim, std::int64_t k,
                    std::int64_t index)
{
    auto seg = [&](std::int64_t m, std::int64_t n, std::int64_t q) { return oracle::segment_rho_soe(pair, m, n, q); };
    return predict_with(pair, seg, interferer, victim, k, index);
}

cdouble predict_ini(const SegmentTable& table, const SymbolGrid& interferer, int victim, std::int64_t k,
                    std::int64_t index)
{
    auto seg = [&](std::int64_t m, std::int64_t n, std::int64_t q) { return table.at(m, n, q); };
    return predict_with(table.pair(), seg, interferer, victim, k, index);
}

const char* to_string(Constellation c) noexcept
{
    switch (c) {
    case Constellation::Qpsk: return "qpsk";
    case Constellation::Qam16: return "16qam";
    case Constellation::RandomPhase: return "random";
    }
    return "unknown";
}

Constellation parse_constellation(const std::string& name)
{
    if (name == "qpsk") {
        return Constellation::Qpsk;
    }
    if (name == "16qam") {
        return Constellation::Qam16;
    }
    if (name == "random") {
        return Constellation::RandomPhase;
    }
    throw Error(Errc::InvalidArgument, "unknown constellation '" + name + "' (expected qpsk, 16qam or random)");
}

const char* to_string(ActiveSet s) noexcept
{
    return s == ActiveSet::All ? "all" : "orthogonal";
}

ActiveSet parse_active_set(const std::string& name)
{
    if (name == "all") {
        return ActiveSet::All;
    }
    if (name == "orthogonal") {
        return ActiveSet::Orthogonal;
    }
    throw Error(Errc::InvalidArgument, "unknown subcarrier set '" + name + "' (expected all or orthogonal)");
}

SymbolGrid random_grid(const Numerology& numerology, std::int64_t num_symbols, Constellation constellation,
                       std::mt19937_64& rng)
{
    static const double kQpsk = 1.0 / std::sqrt(2.0);
    static const double kQam = 1.0 / std::sqrt(10.0);
    // 2-bit Gray code to PAM-4 level.
    static constexpr double kPam4[4] = {-3.0, -1.0, 3.0, 1.0};

    SymbolGrid grid(numerology, num_symbols);
    for (std::int64_t k = 0; k < num_symbols; ++k) {
        for (std::int64_t m = 0; m < numerology.num_subcarriers; ++m) {
            const std::uint64_t bits = rng();
            cdouble s;
            switch (constellation) {
            case Constellation::Qpsk:
                s = {(bits & 1U) ? -kQpsk : kQpsk, (bits & 2U) ? -kQpsk : kQpsk};
                break;
            case Constellation::Qam16:
                s = {kPam4[bits & 3U] * kQam, kPam4[(bits >> 2) & 3U] * kQam};
                break;
            case Constellation::RandomPhase: {
                // Top 53 bits as a uniform fraction of a turn.
                const double turn = static_cast<double>(bits >> 11) * 0x1.0p-53;
                s = exp_j_pi(2.0 * turn);
                break;
            }
            }
            grid.set(k, m, s);
        }
    }
    return grid;
}

IniReport run_experiment(const ExperimentConfig& config)
{
    const NumerologyPair pair = NumerologyPair::from_counts(config.nu, config.n1);
    if (config.narrow_symbols < 1) {
        throw Error(Errc::InconsistentConfig, "experiment needs at least one narrow symbol");
    }
    if (config.active == ActiveSet::Orthogonal && pair.n1() < 2) {
        throw Error(Errc::InconsistentConfig, "the orthogonal subcarrier set needs N^(1) >= 2");
    }
    const std::int64_t nu = pair.nu();
    const std::int64_t n1 = pair.n1();
    const std::int64_t n2 = pair.n2();
    const std::int64_t k2 = config.narrow_symbols;
    const std::int64_t k1 = nu * k2;

    std::mt19937_64 rng(config.seed);
    SymbolGrid wide = random_grid(pair.wide(), k1, config.constellation, rng);
    SymbolGrid narrow = random_grid(pair.narrow(), k2, config.constellation, rng);
    for (std::int64_t k = 0; k < k1; ++k) {
        for (std::int64_t m = 0; m < n1; ++m) {
            if (!wide_active(config.active, m)) {
                wide.set(k, m, {});
            }
        }
    }
    for (std::int64_t k = 0; k < k2; ++k) {
        for (std::int64_t n = 0; n < n2; ++n) {
            if (!narrow_active(config.active, n, nu)) {
                narrow.set(k, n, {});
            }
        }
    }

    const SampledSignal tx_wide = modulate(wide);
    const SampledSignal tx_narrow = modulate(narrow);
    const SampledSignal rx = multiplex(tx_wide, tx_narrow);
    const SymbolGrid rx_wide = demodulate(rx, pair.wide(), k1);
    const SymbolGrid rx_narrow = demodulate(rx, pair.narrow(), k2);

    IniReport report;
    report.config = config;

    const SymbolGrid rt_wide = demodulate(tx_wide, pair.wide(), k1);
    const SymbolGrid rt_narrow = demodulate(tx_narrow, pair.narrow(), k2);
    for (std::size_t i = 0; i < wide.data().size(); ++i) {
        report.round_trip_error = std::max(report.round_trip_error, std::abs(rt_wide.data()[i] - wide.data()[i]));
    }
    for (std::size_t i = 0; i < narrow.data().size(); ++i) {
        report.round_trip_error =
            std::max(report.round_trip_error, std::abs(rt_narrow.data()[i] - narrow.data()[i]));
    }

    const SegmentTable table(pair);
    report.predicted_wide.resize(static_cast<std::size_t>(k1 * n1));
    report.measured_wide.resize(report.predicted_wide.size());
    report.predicted_narrow.resize(static_cast<std::size_t>(k2 * n2));
    report.measured_narrow.resize(report.predicted_narrow.size());

    for (std::int64_t k = 0; k < k1; ++k) {
        for (std::int64_t m = 0; m < n1; ++m) {
            const auto i = static_cast<std::size_t>(k * n1 + m);
            report.predicted_wide[i] = predict_ini(table, narrow, 1, k, m);
            report.measured_wide[i] = rx_wide.at(k, m) - wide.at(k, m);
        }
    }
    for (std::int64_t k = 0; k < k2; ++k) {
        for (std::int64_t n = 0; n < n2; ++n) {
            const auto i = static_cast<std::size_t>(k * n2 + n);
            report.predicted_narrow[i] = predict_ini(table, wide, 2, k, n);
            report.measured_narrow[i] = rx_narrow.at(k, n) - narrow.at(k, n);
        }
    }
    for (std::size_t i = 0; i < report.predicted_wide.size(); ++i) {
        report.max_prediction_error =
            std::max(report.max_prediction_error, std::abs(report.predicted_wide[i] - report.measured_wide[i]));
    }
    for (std::size_t i = 0; i < report.predicted_narrow.size(); ++i) {
        report.max_prediction_error =
            std::max(report.max_prediction_error, std::abs(report.predicted_narrow[i] - report.measured_narrow[i]));
    }

    // Wide victims: one sample per wide symbol, grouped by the narrow symbol they share.
    std::vector<double> measured(static_cast<std::size_t>(k1));
    std::vector<double> predicted(static_cast<std::size_t>(k1));
    for (std::int64_t m = 0; m < n1; ++m) {
        SubcarrierIni row{1, m, wide_active(config.active, m)};
        for (std::int64_t k = 0; k < k1; ++k) {
            const auto i = static_cast<std::size_t>(k * n1 + m);
            measured[static_cast<std::size_t>(k)] = std::norm(report.measured_wide[i]);
            predicted[static_cast<std::size_t>(k)] = std::norm(report.predicted_wide[i]);
        }
        row.measured_power = mean(measured);
        row.predicted_power = mean(predicted);
        row.measured_power_stderr = grouped_stderr(measured, static_cast<std::size_t>(nu));
        double expected = 0.0;
        for (std::int64_t q = 0; q < nu; ++q) {
            for (std::int64_t n = 0; n < n2; ++n) {
                if (narrow_active(config.active, n, nu)) {
                    expected += std::norm(table.at(m, n, q));
                }
            }
        }
        row.expected_power = expected / static_cast<double>(nu);
        if (row.active) {
            report.max_wide_victim_power = std::max(report.max_wide_victim_power, row.measured_power);
        }
        report.per_subcarrier.push_back(row);
    }

    measured.resize(static_cast<std::size_t>(k2));
    predicted.resize(static_cast<std::size_t>(k2));
    for (std::int64_t n = 0; n < n2; ++n) {
        SubcarrierIni row{2, n, narrow_active(config.active, n, nu)};
        for (std::int64_t k = 0; k < k2; ++k) {
            const auto i = static_cast<std::size_t>(k * n2 + n);
            measured[static_cast<std::size_t>(k)] = std::norm(report.measured_narrow[i]);
            predicted[static_cast<std::size_t>(k)] = std::norm(report.predicted_narrow[i]);
        }
        row.measured_power = mean(measured);
        row.predicted_power = mean(predicted);
        row.measured_power_stderr = grouped_stderr(measured, 1);
        double expected = 0.0;
        for (std::int64_t q = 0; q < nu; ++q) {
            for (std::int64_t m = 0; m < n1; ++m) {
                if (wide_active(config.active, m)) {
                    expected += std::norm(table.at(m, n, q));
                }
            }
        }
        row.expected_power = expected;
        if (row.active) {
            report.max_narrow_victim_power = std::max(report.max_narrow_victim_power, row.measured_power);
        }
        report.per_subcarrier.push_back(row);
    }
    return report;
}

} // namespace mnofdm
