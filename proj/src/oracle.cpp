// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/oracle.hpp"

#include "mnofdm/basis.hpp"
#include "mnofdm/compensated.hpp"
#include "mnofdm/error.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace mnofdm::oracle {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (non-negative half, descending) and
// weights; odd positions are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780, 0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    std::complex<double> kronrod;
    double error;

    bool operator<(const Panel& other) const noexcept { return error < other.error; }
};

template <typename F>
Panel gauss_kronrod(F&& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const std::complex<double> fc = f(centre);
    std::complex<double> kronrod = fc * kWgk[7];
    std::complex<double> gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const std::complex<double> pair_sum = f(centre - dx) + f(centre + dx);
        kronrod += pair_sum * kWgk[j];
        if (j % 2 == 1) {
            gauss += pair_sum * kWg[j / 2];
        }
    }
    kronrod *= half;
    gauss *= half;
    const std::complex<double> diff = kronrod - gauss;
    return Panel{a, b, kronrod, std::abs(diff.real()) + std::abs(diff.imag())};
}

} // namespace

InnerProduct rho_continuous_quadrature(const NumerologyPair& pair, std::int64_t m, std::int64_t n, double tol)
{
    if (!(tol >= kMinQuadratureTol && tol <= kMaxQuadratureTol)) {
        throw Error(Errc::InvalidArgument, "quadrature tolerance must lie in [1e-13, 1e-6]");
    }
    const SubcarrierRef wide(pair.wide(), m);
    const SubcarrierRef narrow(pair.narrow(), n);
    const double t1 = pair.wide().symbol_duration_s;

    auto integrand = [&](double t) { return std::conj(pulse_continuous(wide, t)) * pulse_continuous(narrow, t); };

    // Start with roughly two panels per cycle of the beat frequency so no
    // initial panel can alias the oscillation away.
    const double beat_hz = static_cast<double>(m) / t1 - static_cast<double>(n) / pair.narrow().symbol_duration_s;
    const auto initial = static_cast<std::int64_t>(std::ceil(2.0 * std::abs(beat_hz) * t1)) + 1;

    std::priority_queue<Panel> panels;
    double total_error = 0.0;
    for (std::int64_t i = 0; i < initial; ++i) {
        const double a = t1 * static_cast<double>(i) / static_cast<double>(initial);
        const double b = t1 * static_cast<double>(i + 1) / static_cast<double>(initial);
        Panel p = gauss_kronrod(integrand, a, b);
        total_error += p.error;
        panels.push(p);
    }

    auto count = initial;
    while (total_error > tol) {
        if (count >= kMaxPanels) {
            throw Error(Errc::ToleranceNotReached, "quadrature error " + std::to_string(total_error)
                                                       + " above tolerance after " + std::to_string(count)
                                                       + " panels");
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gauss_kronrod(integrand, worst.a, mid);
        Panel right = gauss_kronrod(integrand, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;

        // The running total drifts; re-add from scratch once it claims success.
        if (total_error <= tol) {
            CompensatedSum fresh;
            auto copy = panels;
            while (!copy.empty()) {
                fresh.add(copy.top().error);
                copy.pop();
            }
            total_error = fresh.value();
        }
    }

    CompensatedComplexSum sum;
    while (!panels.empty()) {
        sum.add(panels.top().kronrod);
        panels.pop();
    }
    const std::complex<double> value = sum.value();
    const double d = (static_cast<double>(m) / t1 - static_cast<double>(n) / pair.narrow().symbol_duration_s) * t1;
    return InnerProduct{value, std::abs(value), d, InnerProductKind::OracleQuadrature, 0, Direction::WideFromNarrow};
}

InnerProduct rho_discrete_soe(const NumerologyPair& pair, std::int64_t m, std::int64_t n)
{
    const std::complex<double> value = segment_rho_soe(pair, m, n, 0);
    const double d = static_cast<double>(m) - static_cast<double>(n * pair.n1()) / static_cast<double>(pair.n2());
    return InnerProduct{value, std::abs(value), d, InnerProductKind::OracleSoe, pair.n1(), Direction::WideFromNarrow};
}

std::complex<double> segment_rho_soe(const NumerologyPair& pair, std::int64_t m, std::int64_t n, std::int64_t q)
{
    if (q < 0 || q >= pair.nu()) {
        throw Error(Errc::IndexOutOfRange,
                    "segment " + std::to_string(q) + " outside [0, " + std::to_string(pair.nu()) + ")");
    }
    const SubcarrierRef wide(pair.wide(), m);
    const SubcarrierRef narrow(pair.narrow(), n);
    const std::int64_t offset = q * pair.n1();

    CompensatedComplexSum sum;
    for (std::int64_t l = 0; l < pair.n1(); ++l) {
        sum.add(std::conj(pulse_discrete(wide, l)) * pulse_discrete(narrow, offset + l));
    }
    return sum.value();
}

} // namespace mnofdm::oracle
