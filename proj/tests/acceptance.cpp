// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "cli.hpp"
#include "mnofdm/ini.hpp"
#include "mnofdm/oracle.hpp"
#include "mnofdm/sim.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace mnofdm;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::printf("[%s] AC%-2d %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, args...);
    return buf;
}

void ac1_soe_oracle()
{
    const auto start = Clock::now();
    double worst = 0.0;
    for (std::int64_t nu : {2, 4, 8}) {
        const auto p = NumerologyPair::from_counts(nu, 64);
        for (std::int64_t m = 0; m < p.n1(); ++m) {
            for (std::int64_t n = 0; n < p.n2(); ++n) {
                const auto diff = rho_discrete(p, m, n).value - oracle::rho_discrete_soe(p, m, n).value;
                worst = std::max({worst, std::abs(diff.real()), std::abs(diff.imag())});
            }
        }
    }
    const double t = seconds_since(start);
    report(1, worst < 1e-12 && t < 5.0, "reduced-form discrete product vs SoE oracle, nu in {2,4,8}, N1 = 64",
           fmt("max component error %.3e < 1e-12, %.2f s < 5 s", worst, t));
}

void ac2_quadrature_oracle()
{
    const auto start = Clock::now();
    double worst = 0.0;
    for (std::int64_t nu : {2, 4, 8}) {
        const auto p = NumerologyPair::from_counts(nu, 64);
        for (std::int64_t m = 0; m < p.n1(); ++m) {
            for (std::int64_t n = 0; n < p.n2(); ++n) {
                const auto q = oracle::rho_continuous_quadrature(p, m, n, 1e-11);
                worst = std::max(worst, std::abs(rho_continuous(p, m, n).value - q.value));
            }
        }
    }
    const double t = seconds_since(start);
    report(2, worst < 1e-9 && t < 60.0, "reduced-form continuous product vs quadrature oracle (tol 1e-11)",
           fmt("max error %.3e < 1e-9, %.2f s < 60 s", worst, t));
}

void ac3_conjugate_symmetry()
{
    std::int64_t mismatches = 0;
    std::int64_t checked = 0;
    for (std::int64_t nu : {2, 4, 8}) {
        const auto p = NumerologyPair::from_counts(nu, 64);
        for (std::int64_t m = 0; m < p.n1(); ++m) {
            for (std::int64_t n = 0; n < p.n2(); ++n) {
                mismatches += rho_continuous(p, m, n).value != std::conj(rho_continuous_reverse(p, n, m).value);
                mismatches += rho_discrete(p, m, n).value != std::conj(rho_discrete_reverse(p, n, m).value);
                checked += 2;
            }
        }
    }
    report(3, mismatches == 0, "conjugate symmetry rho(1<-2)_{m,n} == conj(rho(2<-1)_{n,m}), both modes",
           fmt("%lld of %lld pairs differ", static_cast<long long>(mismatches), static_cast<long long>(checked)));
}

void ac4_continuous_anchors()
{
    const auto p = NumerologyPair::from_counts(2, 8);
    const double at0 = rho_continuous(p, 1, 2).magnitude;
    const double at_half = rho_continuous(p, 1, 1).magnitude;
    const double at1 = rho_continuous(p, 2, 2).magnitude;
    const bool ok = std::abs(at0 - 0.70711) < 1e-4 && std::abs(at_half - 0.45016) < 1e-4 && std::abs(at1) < 1e-4;
    report(4, ok, "continuous anchors, nu = 2, d = 0 / 0.5 / 1",
           fmt("%.5f / %.5f / %.5f vs 0.70711 / 0.45016 / 0.00000 +- 1e-4", at0, at_half, at1));
}

void ac5_discrete_anchor()
{
    const auto p = NumerologyPair::from_counts(2, 8);
    const double disc = rho_discrete(p, 1, 1).magnitude;
    const double soe = oracle::rho_discrete_soe(p, 1, 1).magnitude;
    const double cont = rho_continuous(p, 1, 1).magnitude;
    const bool ok = std::abs(disc - 0.45307) < 1e-4 && std::abs(soe - 0.45307) < 1e-4 && disc > cont;
    report(5, ok, "discrete anchor, nu = 2, N1 = 8, d = 0.5",
           fmt("%.5f (SoE %.5f) vs 0.45307 +- 1e-4, > continuous %.5f", disc, soe, cont));
}

void ac6_beta_anchors()
{
    const double b64 = beta(2.5, 64);
    const double b8 = beta(3.5, 8);
    bool zero_exact = true;
    for (std::int64_t n1 : {1, 2, 8, 64, 1024}) {
        zero_exact = zero_exact && beta(0.0, n1) == 1.0;
    }
    const bool ok = std::abs(b64 - 1.00251) < 1e-4 && std::abs(b8 - 1.4014) < 1e-3 && zero_exact;
    report(6, ok, "beta anchors",
           fmt("beta(2.5, 64) = %.5f vs 1.00251 +- 1e-4, beta(3.5, 8) = %.4f vs 1.4014 +- 1e-3, beta(0, .) == 1: %s",
               b64, b8, zero_exact ? "yes" : "no"));
}

void ac7_convergence()
{
    const double cont = magnitude_continuous_at(0.5, 2);
    bool decreasing = true;
    double prev = INFINITY;
    double last = 0.0;
    for (std::int64_t n1 = 8; n1 <= 1024; n1 *= 2) {
        last = std::abs(magnitude_discrete_at(0.5, 2, n1) - cont);
        decreasing = decreasing && last < prev;
        prev = last;
    }
    report(7, decreasing && last < 5e-7, "discrete -> continuous convergence at d = 0.5, N1 = 8..1024",
           fmt("strictly decreasing: %s, deviation at 1024 = %.3e < 5e-7", decreasing ? "yes" : "no", last));
}

void ac8_orthogonality()
{
    std::int64_t disagreements = 0;
    for (std::int64_t nu : {2, 4}) {
        const auto p = NumerologyPair::from_counts(nu, 32);
        for (std::int64_t m = 0; m < p.n1(); ++m) {
            for (std::int64_t n = 0; n < p.n2(); ++n) {
                const bool zero = magnitude_continuous(p, m, n) < 1e-12 && magnitude_discrete(p, m, n) < 1e-12;
                disagreements += is_orthogonal(m, n, nu) != zero;
            }
        }
    }
    const auto p2 = NumerologyPair::from_counts(2, 32);
    const auto subsets = orthogonal_subsets(p2);
    const auto& mixed = subsets.at(2);
    std::vector<std::int64_t> evens;
    std::vector<CoLocation> expected_flags;
    for (std::int64_t n = 0; n < p2.n2(); n += 2) {
        evens.push_back(n);
        expected_flags.push_back({n / 2, n});
    }
    const bool subset_ok = mixed.narrow == evens && mixed.co_located == expected_flags && mixed.certified
                           && subsets.at(0).certified && subsets.at(1).certified;
    report(8, disagreements == 0 && subset_ok, "orthogonality predicate <-> zero magnitude; nu = 2 mixed subset",
           fmt("%lld disagreements over nu in {2,4}, N1 = 32; mixed narrow = evens with %zu co-location flags: %s",
               static_cast<long long>(disagreements), mixed.co_located.size(), subset_ok ? "yes" : "no"));
}

void ac9_simulator()
{
    const auto start = Clock::now();
    const auto full = run_experiment({2, 64, 4, Constellation::Qpsk, ActiveSet::All, 42});
    const auto orth = run_experiment({2, 64, 4, Constellation::Qpsk, ActiveSet::Orthogonal, 42});
    const double t = seconds_since(start);
    const bool ok = full.max_prediction_error < 1e-9 && orth.max_wide_victim_power < 1e-20
                    && full.round_trip_error < 1e-12 && orth.round_trip_error < 1e-12 && t < 10.0;
    report(9, ok, "end-to-end simulator, nu = 2, N1 = 64, K2 = 4, qpsk, seed 42",
           fmt("max |pred - meas| %.3e < 1e-9, orthogonal-set wide INI power %.3e < 1e-20, round trip %.3e < 1e-12, "
               "%.2f s < 10 s",
               full.max_prediction_error, orth.max_wide_victim_power,
               std::max(full.round_trip_error, orth.round_trip_error), t));
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

// Runs one CLI invocation; "{out}" in the arguments is replaced by `out_file`.
// Returns stdout followed by the file contents, or "" on a nonzero exit.
std::string run_cli_capture(const std::vector<std::string>& args, const std::filesystem::path& out_file)
{
    std::vector<std::string> full{"mnofdm"};
    for (const auto& a : args) {
        full.push_back(a == "{out}" ? out_file.string() : a);
    }
    std::vector<const char*> argv;
    for (const auto& a : full) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != 0) {
        return {};
    }
    return out.str() + "\x1f" + (std::filesystem::exists(out_file) ? slurp(out_file) : std::string{});
}

void ac10_reproducibility()
{
    const std::vector<std::vector<std::string>> commands = {
        {"pair", "--bandwidth", "480000", "--df1", "30000", "--df2", "15000"},
        {"rho", "--nu", "2", "--n1", "8", "--m", "1", "--n", "1", "--mode", "discrete"},
        {"rho", "--nu", "4", "--n1", "8", "--m", "3", "--n", "5", "--mode", "oracle", "--oracle", "quadrature"},
        {"curve", "--nu", "2,4,8", "--d", "-4:4:0.125", "--n1", "8", "--out", "{out}"},
        {"beta", "--n1", "8,16,32,64", "--d", "0:3.5:0.25", "--out", "{out}"},
        {"beta", "--n1", "8,16,32,64", "--d", "0:3.5:0.25", "--by-samples", "--out", "{out}"},
        {"subsets", "--nu", "2", "--n1", "8"},
        {"matrix", "--nu", "4", "--n1", "8", "--mode", "discrete", "--phase", "--out", "{out}"},
        {"simulate", "--nu", "2", "--n1", "16", "--symbols", "8", "--constellation", "random", "--seed", "42",
         "--out", "{out}"},
    };
    const auto dir = std::filesystem::temp_directory_path() / "mnofdm_acceptance";
    std::filesystem::create_directories(dir);
    int identical = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const auto a = run_cli_capture(commands[i], dir / ("a" + std::to_string(i)));
        const auto b = run_cli_capture(commands[i], dir / ("b" + std::to_string(i)));
        identical += !a.empty() && a == b;
    }
    report(10, identical == static_cast<int>(commands.size()), "byte-identical CLI output on repeated runs",
           fmt("%d of %zu subcommand invocations reproduced", identical, commands.size()));
}

} // namespace

int main()
{
    ac1_soe_oracle();
    ac2_quadrature_oracle();
    ac3_conjugate_symmetry();
    ac4_continuous_anchors();
    ac5_discrete_anchor();
    ac6_beta_anchors();
    ac7_convergence();
    ac8_orthogonality();
    ac9_simulator();
    ac10_reproducibility();
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
