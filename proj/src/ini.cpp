// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/ini.hpp"

#include "mnofdm/error.hpp"
#include "mnofdm/phasor.hpp"

#include <cmath>
#include <algorithm>
#include <string>

namespace mnofdm {

namespace {

double amplitude(std::int64_t nu)
{
    return std::sqrt(1.0 / static_cast<double>(nu));
}

void check_indices(const NumerologyPair& pair, std::int64_t m, std::int64_t n)
{
    if (m < 0 || m >= pair.n1()) {
        throw Error(Errc::IndexOutOfRange,
                    "wide subcarrier " + std::to_string(m) + " outside [0, " + std::to_string(pair.n1()) + ")");
    }
    if (n < 0 || n >= pair.n2()) {
        throw Error(Errc::IndexOutOfRange,
                    "narrow subcarrier " + std::to_string(n) + " outside [0, " + std::to_string(pair.n2()) + ")");
    }
}

bool is_integer(double x) noexcept
{
    return std::isfinite(x) && x == std::trunc(x);
}

// sign = -1 gives rho^(1<-2), sign = +1 its conjugate rho^(2<-1).
std::complex<double> continuous_value(double d, std::int64_t nu, double sign)
{
    return amplitude(nu) * sinc(d) * exp_j_pi(sign * d);
}

// Dirichlet form of the discrete product:
//   (1/sqrt(nu)) exp(sign j pi (N-1)/N d) sin(pi d) / (N sin(pi d / N)).
std::complex<double> discrete_value(double d, std::int64_t nu, std::int64_t n1, double sign)
{
    const double scale = amplitude(nu);
    if (d == 0.0) {
        return {scale, 0.0};
    }
    const double q = d / static_cast<double>(n1);
    if (is_integer(q)) {
        // Every summand of the sum is 1: the aliasing limit is real.
        return {scale, 0.0};
    }
    const double dirichlet = sin_pi(d) / (static_cast<double>(n1) * sin_pi(q));
    return scale * dirichlet * exp_j_pi(sign * (d - q));
}

InnerProduct make_product(std::complex<double> value, double d, InnerProductKind kind, std::int64_t n1,
                          Direction direction)
{
    return InnerProduct{value, std::abs(value), d, kind, n1, direction};
}

void check_beta_domain(double d, std::int64_t n1)
{
    if (n1 < 1) {
        throw Error(Errc::DomainError, "sample count must be >= 1");
    }
    if (!std::isfinite(d) || std::abs(d) >= static_cast<double>(n1)) {
        throw Error(Errc::DomainError,
                    "|d| = " + std::to_string(std::abs(d)) + " must be < N^(1) = " + std::to_string(n1));
    }
}

} // namespace

const char* to_string(InnerProductKind kind) noexcept
{
    switch (kind) {
    case InnerProductKind::Continuous: return "continuous";
    case InnerProductKind::Discrete: return "discrete";
    case InnerProductKind::OracleQuadrature: return "oracle-quadrature";
    case InnerProductKind::OracleSoe: return "oracle-soe";
    }
    return "unknown";
}

const char* to_string(Direction direction) noexcept
{
    return direction == Direction::WideFromNarrow ? "wide<-narrow" : "narrow<-wide";
}

const char* to_string(Mode mode) noexcept
{
    return mode == Mode::Continuous ? "continuous" : "discrete";
}

double relative_distance(std::int64_t m, std::int64_t n, std::int64_t nu)
{
    // nu is a power of two, so n / nu is exact.
    return static_cast<double>(m) - static_cast<double>(n) / static_cast<double>(nu);
}

double magnitude_continuous_at(double d, std::int64_t nu)
{
    return amplitude(nu) * std::abs(sinc(d));
}

double magnitude_discrete_at(double d, std::int64_t nu, std::int64_t n1)
{
    check_beta_domain(d, n1);
    if (d == 0.0) {
        return amplitude(nu);
    }
    const double ratio = std::abs(sin_pi(d)) / (static_cast<double>(n1) * std::abs(sin_pi(d / static_cast<double>(n1))));
    return amplitude(nu) * ratio;
}

InnerProduct rho_continuous(const NumerologyPair& pair, std::int64_t m, std::int64_t n)
{
    check_indices(pair, m, n);
    const double d = relative_distance(m, n, pair.nu());
    return make_product(continuous_value(d, pair.nu(), -1.0), d, InnerProductKind::Continuous, 0,
                        Direction::WideFromNarrow);
}

InnerProduct rho_discrete(const NumerologyPair& pair, std::int64_t m, std::int64_t n)
{
    check_indices(pair, m, n);
    const double d = relative_distance(m, n, pair.nu());
    return make_product(discrete_value(d, pair.nu(), pair.n1(), -1.0), d, InnerProductKind::Discrete, pair.n1(),
                        Direction::WideFromNarrow);
}

InnerProduct rho_continuous_reverse(const NumerologyPair& pair, std::int64_t n, std::int64_t m)
{
    check_indices(pair, m, n);
    const double d = relative_distance(m, n, pair.nu());
    return make_product(continuous_value(d, pair.nu(), +1.0), d, InnerProductKind::Continuous, 0,
                        Direction::NarrowFromWide);
}

InnerProduct rho_discrete_reverse(const NumerologyPair& pair, std::int64_t n, std::int64_t m)
{
    check_indices(pair, m, n);
    const double d = relative_distance(m, n, pair.nu());
    return make_product(discrete_value(d, pair.nu(), pair.n1(), +1.0), d, InnerProductKind::Discrete, pair.n1(),
                        Direction::NarrowFromWide);
}

InnerProduct rho(const NumerologyPair& pair, Mode mode, std::int64_t m, std::int64_t n)
{
    return mode == Mode::Continuous ? rho_continuous(pair, m, n) : rho_discrete(pair, m, n);
}

double magnitude_continuous(const NumerologyPair& pair, std::int64_t m, std::int64_t n)
{
    check_indices(pair, m, n);
    return magnitude_continuous_at(relative_distance(m, n, pair.nu()), pair.nu());
}

double magnitude_discrete(const NumerologyPair& pair, std::int64_t m, std::int64_t n)
{
    check_indices(pair, m, n);
    return magnitude_discrete_at(relative_distance(m, n, pair.nu()), pair.nu(), pair.n1());
}

double beta(double d, std::int64_t n1)
{
    check_beta_domain(d, n1);
    if (d == 0.0) {
        return 1.0;
    }
    return 1.0 / std::abs(sinc(d / static_cast<double>(n1)));
}

double discretization_error_pct(double d, std::int64_t n1)
{
    return (beta(d, n1) - 1.0) * 100.0;
}

std::int64_t min_samples_for_tolerance(double d, double tol_pct)
{
    if (!std::isfinite(d)) {
        throw Error(Errc::DomainError, "relative distance must be finite");
    }
    if (!std::isfinite(tol_pct) || tol_pct <= 0.0) {
        throw Error(Errc::InvalidArgument, "tolerance must be a finite percentage > 0");
    }
    std::int64_t n1 = 1;
    while (static_cast<double>(n1) <= std::abs(d)) {
        n1 *= 2;
    }
    // beta decreases monotonically in n1 for fixed d, so the first hit is minimal.
    for (; n1 <= kMaxSubcarriers; n1 *= 2) {
        if (discretization_error_pct(d, n1) <= tol_pct) {
            return n1;
        }
    }
    throw Error(Errc::DomainError, "tolerance " + std::to_string(tol_pct) + "% not reachable with N^(1) <= 2^31");
}

bool is_orthogonal(std::int64_t m, std::int64_t n, std::int64_t nu)
{
    if (nu < 2) {
        throw Error(Errc::InvalidArgument, "nu must be >= 2");
    }
    return n % nu == 0 && m != n / nu;
}

std::vector<SubcarrierSubset> orthogonal_subsets(const NumerologyPair& pair)
{
    const std::int64_t n1 = pair.n1();
    const std::int64_t n2 = pair.n2();
    const std::int64_t nu = pair.nu();

    std::vector<std::int64_t> all_wide(static_cast<std::size_t>(n1));
    std::vector<std::int64_t> all_narrow(static_cast<std::size_t>(n2));
    for (std::int64_t i = 0; i < n1; ++i) {
        all_wide[static_cast<std::size_t>(i)] = i;
    }
    for (std::int64_t i = 0; i < n2; ++i) {
        all_narrow[static_cast<std::size_t>(i)] = i;
    }

    SubcarrierSubset wide{"numerology-1", all_wide, {}, {}, 0.0, true};
    SubcarrierSubset narrow{"numerology-2", {}, all_narrow, {}, 0.0, true};

    SubcarrierSubset mixed{"mixed", all_wide, {}, {}, 0.0, false};
    for (std::int64_t n = 0; n < n2; n += nu) {
        mixed.narrow.push_back(n);
        mixed.co_located.push_back({n / nu, n});
    }
    double worst = 0.0;
    for (std::int64_t m : mixed.wide) {
        for (std::int64_t n : mixed.narrow) {
            if (m * nu == n) {
                continue;
            }
            worst = std::max({worst, rho_continuous(pair, m, n).magnitude, rho_discrete(pair, m, n).magnitude});
        }
    }
    mixed.max_cross_magnitude = worst;
    mixed.certified = worst < kOrthogonalityThreshold;

    return {std::move(wide), std::move(narrow), std::move(mixed)};
}

IniMatrix::IniMatrix(std::int64_t rows, std::int64_t cols, Mode mode, Direction direction)
    : rows_(rows), cols_(cols), mode_(mode), direction_(direction),
      cells_(static_cast<std::size_t>(rows * cols))
{
}

std::size_t IniMatrix::index(std::int64_t r, std::int64_t c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw Error(Errc::IndexOutOfRange, "matrix cell (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    }
    return static_cast<std::size_t>(r * cols_ + c);
}

std::vector<double> IniMatrix::row_power() const
{
    std::vector<double> out(static_cast<std::size_t>(rows_), 0.0);
    for (std::int64_t r = 0; r < rows_; ++r) {
        for (std::int64_t c = 0; c < cols_; ++c) {
            const double mag = at(r, c).magnitude;
            out[static_cast<std::size_t>(r)] += mag * mag;
        }
    }
    return out;
}

std::vector<double> IniMatrix::column_power() const
{
    std::vector<double> out(static_cast<std::size_t>(cols_), 0.0);
    for (std::int64_t r = 0; r < rows_; ++r) {
        for (std::int64_t c = 0; c < cols_; ++c) {
            const double mag = at(r, c).magnitude;
            out[static_cast<std::size_t>(c)] += mag * mag;
        }
    }
    return out;
}

IniMatrix ini_matrix(const NumerologyPair& pair, Mode mode, Direction direction, std::int64_t cap)
{
    const std::int64_t n1 = pair.n1();
    const std::int64_t n2 = pair.n2();
    if (n1 > cap / n2) {
        throw Error(Errc::CapExceeded, "matrix of " + std::to_string(n1) + " x " + std::to_string(n2)
                                           + " entries exceeds the cap of " + std::to_string(cap));
    }
    const bool forward = direction == Direction::WideFromNarrow;
    IniMatrix out(forward ? n1 : n2, forward ? n2 : n1, mode, direction);
    for (std::int64_t m = 0; m < n1; ++m) {
        for (std::int64_t n = 0; n < n2; ++n) {
            if (forward) {
                out.at(m, n) = mode == Mode::Continuous ? rho_continuous(pair, m, n) : rho_discrete(pair, m, n);
            } else {
                out.at(n, m) = mode == Mode::Continuous ? rho_continuous_reverse(pair, n, m)
                                                        : rho_discrete_reverse(pair, n, m);
            }
        }
    }
    return out;
}

} // namespace mnofdm
