// SPDX-License-Identifier: Apache-2.0
//
// CSV and JSON renderings of curves, matrices, subsets and experiment
// reports. All text output is locale-independent and byte-reproducible.

#pragma once

#include "mnofdm/ini.hpp"
#include "mnofdm/numerology.hpp"
#include "mnofdm/sim.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mnofdm {

/// Inclusive grid start, start + step, ... up to stop.
struct DRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    /// Parses "start:stop:step". Throws Error(InvalidArgument).
    static DRange parse(const std::string& text);

    /// Throws Error(InvalidArgument) unless step > 0, start < stop, finite.
    void validate() const;
    std::vector<double> points() const;
};

struct CurveSpec {
    std::vector<std::int64_t> nus;
    DRange d;
    /// When set, discrete-time columns for N^(1) = n1 follow each continuous one.
    std::optional<std::int64_t> n1;

    void validate() const;
};

void write_magnitude_curve(const CurveSpec& spec, std::ostream& out);
void emit_magnitude_curve(const CurveSpec& spec, const std::string& path);

/// Columns d, n1=<N>...; with `by_samples`, rows per N^(1) and one column per d.
void write_beta_surface(const std::vector<std::int64_t>& n1s, const DRange& d, bool by_samples, std::ostream& out);
void emit_beta_surface(const std::vector<std::int64_t>& n1s, const DRange& d, bool by_samples,
                       const std::string& path);

/// Long format: one row per (m, n) with magnitude and optionally phase (rad).
void write_matrix_csv(const IniMatrix& matrix, bool with_phase, std::ostream& out);

void write_pair_json(const NumerologyPair& pair, std::ostream& out);
void write_inner_product_json(const InnerProduct& ip, std::ostream& out);
void write_subsets_json(const NumerologyPair& pair, const std::vector<SubcarrierSubset>& subsets, std::ostream& out);
void write_report_json(const IniReport& report, std::ostream& out);

/// Writes `contents` to `path`. Throws Error(Io) on failure.
void write_file(const std::string& path, const std::string& contents);

} // namespace mnofdm
