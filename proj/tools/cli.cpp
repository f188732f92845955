// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "mnofdm/error.hpp"
#include "mnofdm/ini.hpp"
#include "mnofdm/numerology.hpp"
#include "mnofdm/oracle.hpp"
#include "mnofdm/report.hpp"
#include "mnofdm/sim.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <locale>
#include <sstream>
#include <string>
#include <vector>

namespace mnofdm::cli {

namespace {

int exit_code_for(Errc code)
{
    if (code == Errc::Io) {
        return kIo;
    }
    return is_numeric_domain(code) ? kNumericDomain : kValidation;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    out.imbue(std::locale::classic());

    CLI::App app{"Inter-numerology interference analysis for mixed-numerology OFDM"};
    app.require_subcommand(1);

    double bandwidth = 0.0;
    double df1 = 0.0;
    double df2 = 0.0;
    auto* pair_cmd = app.add_subcommand("pair", "Validate a numerology pair and print its parameters (JSON)");
    pair_cmd->add_option("--bandwidth", bandwidth, "System bandwidth B in Hz")->required();
    pair_cmd->add_option("--df1", df1, "Wide subcarrier spacing in Hz")->required();
    pair_cmd->add_option("--df2", df2, "Narrow subcarrier spacing in Hz")->required();

    std::int64_t nu = 2;
    std::int64_t n1 = 8;
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::string mode = "continuous";
    std::string oracle_kind = "soe";
    double tol = 1e-11;
    auto* rho_cmd = app.add_subcommand("rho", "Inner product between wide subcarrier m and narrow subcarrier n (JSON)");
    rho_cmd->add_option("--nu", nu, "Scaling factor")->required();
    rho_cmd->add_option("--n1", n1, "Wide subcarrier count N^(1)")->capture_default_str();
    rho_cmd->add_option("--m", m, "Wide subcarrier index")->required();
    rho_cmd->add_option("--n", n, "Narrow subcarrier index")->required();
    rho_cmd->add_option("--mode", mode, "continuous | discrete | oracle")
        ->required()
        ->check(CLI::IsMember({"continuous", "discrete", "oracle"}));
    rho_cmd->add_option("--oracle", oracle_kind, "Oracle used by --mode oracle: soe | quadrature")
        ->capture_default_str()
        ->check(CLI::IsMember({"soe", "quadrature"}));
    rho_cmd->add_option("--tol", tol, "Quadrature tolerance")->capture_default_str();

    std::vector<std::int64_t> nus;
    std::string d_range;
    std::string out_path;
    std::int64_t curve_n1 = 0;
    auto* curve_cmd = app.add_subcommand("curve", "Magnitude vs relative distance (CSV)");
    curve_cmd->add_option("--nu", nus, "Scaling factors, comma separated")->required()->delimiter(',');
    curve_cmd->add_option("--d", d_range, "start:stop:step")->required();
    auto* curve_n1_opt = curve_cmd->add_option("--n1", curve_n1, "Add discrete-time columns for this N^(1)");
    curve_cmd->add_option("--out", out_path, "Output CSV path")->required();

    std::vector<std::int64_t> n1s;
    bool by_samples = false;
    auto* beta_cmd = app.add_subcommand("beta", "Discretization factor beta (CSV)");
    beta_cmd->add_option("--n1", n1s, "Sample counts, comma separated")->required()->delimiter(',');
    beta_cmd->add_option("--d", d_range, "start:stop:step")->required();
    beta_cmd->add_option("--out", out_path, "Output CSV path")->required();
    beta_cmd->add_flag("--by-samples", by_samples, "One row per N^(1), one column per d");

    auto* subsets_cmd = app.add_subcommand("subsets", "Orthogonal subcarrier subsets (JSON)");
    subsets_cmd->add_option("--nu", nu, "Scaling factor")->required();
    subsets_cmd->add_option("--n1", n1, "Wide subcarrier count N^(1)")->required();

    bool with_phase = false;
    auto* matrix_cmd = app.add_subcommand("matrix", "Full wide<-narrow INI matrix (CSV)");
    matrix_cmd->add_option("--nu", nu, "Scaling factor")->required();
    matrix_cmd->add_option("--n1", n1, "Wide subcarrier count N^(1)")->required();
    matrix_cmd->add_option("--mode", mode, "continuous | discrete")
        ->required()
        ->check(CLI::IsMember({"continuous", "discrete"}));
    matrix_cmd->add_option("--out", out_path, "Output CSV path")->required();
    matrix_cmd->add_flag("--phase", with_phase, "Add a phase column (radians)");

    std::int64_t symbols = 0;
    std::string constellation = "qpsk";
    std::string active = "all";
    std::uint64_t seed = 0;
    auto* sim_cmd = app.add_subcommand("simulate", "Run the two-numerology chain and report INI (JSON)");
    sim_cmd->add_option("--nu", nu, "Scaling factor")->required();
    sim_cmd->add_option("--n1", n1, "Wide subcarrier count N^(1)")->required();
    sim_cmd->add_option("--symbols", symbols, "Narrow-numerology symbol count K^(2)")->required();
    sim_cmd->add_option("--constellation", constellation, "qpsk | 16qam | random")
        ->required()
        ->check(CLI::IsMember({"qpsk", "16qam", "random"}));
    sim_cmd->add_option("--seed", seed, "Generator seed")->required();
    sim_cmd->add_option("--out", out_path, "Output JSON path")->required();
    sim_cmd->add_option("--active", active, "Active subcarriers: all | orthogonal")
        ->capture_default_str()
        ->check(CLI::IsMember({"all", "orthogonal"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }

    try {
        if (pair_cmd->parsed()) {
            write_pair_json(NumerologyPair::make(bandwidth, df1, df2), out);
        } else if (rho_cmd->parsed()) {
            const auto pair = NumerologyPair::from_counts(nu, n1);
            InnerProduct ip;
            if (mode == "continuous") {
                ip = rho_continuous(pair, m, n);
            } else if (mode == "discrete") {
                ip = rho_discrete(pair, m, n);
            } else if (oracle_kind == "soe") {
                ip = oracle::rho_discrete_soe(pair, m, n);
            } else {
                ip = oracle::rho_continuous_quadrature(pair, m, n, tol);
            }
            write_inner_product_json(ip, out);
        } else if (curve_cmd->parsed()) {
            CurveSpec spec{nus, DRange::parse(d_range), {}};
            if (curve_n1_opt->count() > 0) {
                spec.n1 = curve_n1;
            }
            emit_magnitude_curve(spec, out_path);
        } else if (beta_cmd->parsed()) {
            emit_beta_surface(n1s, DRange::parse(d_range), by_samples, out_path);
        } else if (subsets_cmd->parsed()) {
            const auto pair = NumerologyPair::from_counts(nu, n1);
            write_subsets_json(pair, orthogonal_subsets(pair), out);
        } else if (matrix_cmd->parsed()) {
            const auto pair = NumerologyPair::from_counts(nu, n1);
            const auto matrix = ini_matrix(pair, mode == "continuous" ? Mode::Continuous : Mode::Discrete);
            std::ostringstream os;
            os.imbue(std::locale::classic());
            write_matrix_csv(matrix, with_phase, os);
            write_file(out_path, os.str());
        } else if (sim_cmd->parsed()) {
            ExperimentConfig config{nu, n1, symbols, parse_constellation(constellation), parse_active_set(active),
                                    seed};
            const IniReport report = run_experiment(config);
            std::ostringstream os;
            os.imbue(std::locale::classic());
            write_report_json(report, os);
            write_file(out_path, os.str());
        }
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kOk;
}

} // namespace mnofdm::cli
