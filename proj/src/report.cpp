// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/report.hpp"

#include "mnofdm/error.hpp"
#include "mnofdm/json_writer.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <locale>
#include <sstream>

namespace mnofdm {

namespace {

constexpr std::int64_t kMaxGridPoints = 10'000'000;

double parse_double(const std::string& text)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw Error(Errc::InvalidArgument, "not a number: '" + text + "'");
    }
    return v;
}

// Shortest round-trip form, for header labels.
std::string label_number(double v)
{
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string render(auto&& fn)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    fn(os);
    return os.str();
}

} // namespace

DRange DRange::parse(const std::string& text)
{
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
        throw Error(Errc::InvalidArgument, "range must look like start:stop:step, got '" + text + "'");
    }
    DRange r{parse_double(text.substr(0, first)), parse_double(text.substr(first + 1, second - first - 1)),
             parse_double(text.substr(second + 1))};
    r.validate();
    return r;
}

void DRange::validate() const
{
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw Error(Errc::InvalidArgument, "range bounds must be finite");
    }
    if (!(step > 0.0)) {
        throw Error(Errc::InvalidArgument, "range step must be > 0");
    }
    if (!(start < stop)) {
        throw Error(Errc::InvalidArgument, "range start must be below stop");
    }
    if ((stop - start) / step >= static_cast<double>(kMaxGridPoints)) {
        throw Error(Errc::InvalidArgument, "range has too many points");
    }
}

std::vector<double> DRange::points() const
{
    validate();
    // Slack so that stop is kept when (stop - start) / step is integral up to rounding.
    const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        out.push_back(start + static_cast<double>(i) * step);
    }
    return out;
}

void CurveSpec::validate() const
{
    if (nus.empty()) {
        throw Error(Errc::InvalidArgument, "at least one nu is required");
    }
    for (std::int64_t nu : nus) {
        if (nu < 2 || !is_power_of_two(nu) || nu > kMaxScalingFactor) {
            throw Error(Errc::RatioNotPowerOfTwo, "nu = " + std::to_string(nu) + " is not a power of two >= 2");
        }
    }
    d.validate();
    if (n1) {
        if (*n1 < 1) {
            throw Error(Errc::InvalidArgument, "n1 must be >= 1");
        }
        const double reach = std::max(std::abs(d.start), std::abs(d.stop));
        if (reach >= static_cast<double>(*n1)) {
            throw Error(Errc::InvalidArgument, "discrete curves need |d| < n1 over the whole range");
        }
    }
}

void write_magnitude_curve(const CurveSpec& spec, std::ostream& out)
{
    spec.validate();
    out << 'd';
    for (std::int64_t nu : spec.nus) {
        out << ",nu=" << std::to_string(nu) << "_continuous";
        if (spec.n1) {
            out << ",nu=" << std::to_string(nu) << "_discrete";
        }
    }
    out << '\n';
    for (double d : spec.d.points()) {
        out << format_number(d);
        for (std::int64_t nu : spec.nus) {
            out << ',' << format_number(magnitude_continuous_at(d, nu));
            if (spec.n1) {
                out << ',' << format_number(magnitude_discrete_at(d, nu, *spec.n1));
            }
        }
        out << '\n';
    }
}

void emit_magnitude_curve(const CurveSpec& spec, const std::string& path)
{
    write_file(path, render([&](std::ostream& os) { write_magnitude_curve(spec, os); }));
}

void write_beta_surface(const std::vector<std::int64_t>& n1s, const DRange& d, bool by_samples, std::ostream& out)
{
    if (n1s.empty()) {
        throw Error(Errc::InvalidArgument, "at least one n1 is required");
    }
    const auto ds = d.points();
    if (!by_samples) {
        out << 'd';
        for (std::int64_t n1 : n1s) {
            out << ",n1=" << std::to_string(n1);
        }
        out << '\n';
        for (double x : ds) {
            out << format_number(x);
            for (std::int64_t n1 : n1s) {
                out << ',' << format_number(beta(x, n1));
            }
            out << '\n';
        }
        return;
    }
    out << "n1";
    for (double x : ds) {
        out << ",d=" << label_number(x);
    }
    out << '\n';
    for (std::int64_t n1 : n1s) {
        out << std::to_string(n1);
        for (double x : ds) {
            out << ',' << format_number(beta(x, n1));
        }
        out << '\n';
    }
}

void emit_beta_surface(const std::vector<std::int64_t>& n1s, const DRange& d, bool by_samples,
                       const std::string& path)
{
    write_file(path, render([&](std::ostream& os) { write_beta_surface(n1s, d, by_samples, os); }));
}

void write_matrix_csv(const IniMatrix& matrix, bool with_phase, std::ostream& out)
{
    const bool forward = matrix.direction() == Direction::WideFromNarrow;
    out << (forward ? "m,n" : "n,m") << ",d,magnitude" << (with_phase ? ",phase" : "") << '\n';
    for (std::int64_t r = 0; r < matrix.rows(); ++r) {
        for (std::int64_t c = 0; c < matrix.cols(); ++c) {
            const InnerProduct& ip = matrix.at(r, c);
            out << std::to_string(r) << ',' << std::to_string(c) << ',' << format_number(ip.d) << ',' << format_number(ip.magnitude);
            if (with_phase) {
                out << ',' << format_number(ip.magnitude == 0.0 ? 0.0 : std::arg(ip.value));
            }
            out << '\n';
        }
    }
}

namespace {

void numerology_fields(JsonWriter& w, const Numerology& n)
{
    w.begin_object()
        .field("index", n.index)
        .field("subcarrier_spacing_hz", n.subcarrier_spacing_hz)
        .field("symbol_duration_s", n.symbol_duration_s)
        .field("num_subcarriers", n.num_subcarriers)
        .end_object();
}

void index_array(JsonWriter& w, const std::vector<std::int64_t>& xs)
{
    w.begin_array();
    for (std::int64_t x : xs) {
        w.value(x);
    }
    w.end_array();
}

} // namespace

void write_pair_json(const NumerologyPair& pair, std::ostream& out)
{
    JsonWriter w(out);
    w.begin_object()
        .field("nu", pair.nu())
        .field("mu", pair.mu())
        .field("bandwidth_hz", pair.bandwidth_hz())
        .field("sampling_duration_s", pair.sampling_duration_s());
    w.key("wide");
    numerology_fields(w, pair.wide());
    w.key("narrow");
    numerology_fields(w, pair.narrow());
    w.end_object().finish();
}

void write_inner_product_json(const InnerProduct& ip, std::ostream& out)
{
    JsonWriter w(out);
    w.begin_object()
        .field("re", ip.value.real())
        .field("im", ip.value.imag())
        .field("magnitude", ip.magnitude)
        .field("d", ip.d)
        .field("kind", to_string(ip.kind))
        .field("direction", to_string(ip.direction));
    if (ip.n1 > 0) {
        w.field("n1", ip.n1);
    }
    w.end_object().finish();
}

void write_subsets_json(const NumerologyPair& pair, const std::vector<SubcarrierSubset>& subsets, std::ostream& out)
{
    JsonWriter w(out);
    w.begin_object().field("nu", pair.nu()).field("n1", pair.n1()).field("n2", pair.n2());
    w.key("subsets").begin_array();
    for (const SubcarrierSubset& s : subsets) {
        w.begin_object().field("name", s.name);
        w.key("wide");
        index_array(w, s.wide);
        w.key("narrow");
        index_array(w, s.narrow);
        w.key("co_located").begin_array();
        for (const CoLocation& c : s.co_located) {
            w.begin_object().field("m", c.m).field("n", c.n).end_object();
        }
        w.end_array();
        w.field("max_cross_magnitude", s.max_cross_magnitude).field("certified", s.certified).end_object();
    }
    w.end_array().end_object().finish();
}

void write_report_json(const IniReport& report, std::ostream& out)
{
    const ExperimentConfig& c = report.config;
    JsonWriter w(out);
    w.begin_object();
    w.key("config")
        .begin_object()
        .field("nu", c.nu)
        .field("n1", c.n1)
        .field("narrow_symbols", c.narrow_symbols)
        .field("wide_symbols", c.nu * c.narrow_symbols)
        .field("constellation", to_string(c.constellation))
        .field("active", to_string(c.active))
        .field("rng", "mt19937_64")
        .end_object();
    w.key("per_subcarrier").begin_array();
    for (const SubcarrierIni& s : report.per_subcarrier) {
        w.begin_object()
            .field("numerology", s.numerology)
            .field("m", s.index)
            .field("active", s.active)
            .field("predicted_power", s.predicted_power)
            .field("measured_power", s.measured_power)
            .field("expected_power", s.expected_power)
            .field("measured_power_stderr", s.measured_power_stderr)
            .end_object();
    }
    w.end_array();
    w.field("max_prediction_error", report.max_prediction_error)
        .field("max_wide_victim_power", report.max_wide_victim_power)
        .field("max_narrow_victim_power", report.max_narrow_victim_power)
        .field("round_trip_error", report.round_trip_error)
        .field("seed", c.seed)
        .end_object()
        .finish();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error(Errc::Io, "cannot open '" + path + "' for writing");
    }
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.close();
    if (!f) {
        throw Error(Errc::Io, "failed writing '" + path + "'");
    }
}

} // namespace mnofdm
