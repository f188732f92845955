// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/compensated.hpp"
#include "mnofdm/error.hpp"
#include "mnofdm/oracle.hpp"
#include "mnofdm/phasor.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace mnofdm;

namespace {

constexpr double kMagHalf = 0.45015815807855303;
constexpr double kSoe8_11Mag = 0.45306372317644392;

} // namespace

TEST_CASE("quadrature oracle examples")
{
    const auto p = NumerologyPair::make(480e3, 30e3, 15e3);

    const auto colocated = oracle::rho_continuous_quadrature(p, 1, 2, 1e-11);
    CHECK(std::abs(colocated.value - std::complex<double>{1.0 / std::sqrt(2.0), 0.0}) < 1e-11);
    CHECK(colocated.kind == InnerProductKind::OracleQuadrature);

    const auto half = oracle::rho_continuous_quadrature(p, 1, 1, 1e-11);
    CHECK(std::abs(half.value - std::complex<double>{0.0, -kMagHalf}) < 1e-9);
    CHECK(half.d == doctest::Approx(0.5));

    CHECK(std::abs(oracle::rho_continuous_quadrature(p, 2, 2, 1e-11).value) < 1e-10);

    CHECK_THROWS_AS(oracle::rho_continuous_quadrature(p, 1, 1, 1e-14), Error);
    CHECK_THROWS_AS(oracle::rho_continuous_quadrature(p, 1, 1, 1e-5), Error);
    CHECK_THROWS_AS(oracle::rho_continuous_quadrature(p, 16, 1, 1e-9), Error);
}

TEST_CASE("quadrature is self-consistent under tolerance halving")
{
    const auto p = NumerologyPair::from_counts(4, 16);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const auto m = static_cast<std::int64_t>(rng() % 16);
        const auto n = static_cast<std::int64_t>(rng() % 64);
        for (double tol : {1e-7, 1e-9, 1e-11}) {
            const auto a = oracle::rho_continuous_quadrature(p, m, n, tol).value;
            const auto b = oracle::rho_continuous_quadrature(p, m, n, tol / 2).value;
            CHECK(std::abs(a - b) <= tol);
        }
    }
}

TEST_CASE("SoE oracle examples")
{
    const auto p = NumerologyPair::from_counts(2, 8);
    CHECK(std::abs(oracle::rho_discrete_soe(p, 1, 2).value - std::complex<double>{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
    CHECK(oracle::rho_discrete_soe(p, 1, 1).magnitude == doctest::Approx(kSoe8_11Mag).epsilon(1e-13));
    CHECK(std::abs(oracle::rho_discrete_soe(p, 0, 4).value) < 1e-15);
    CHECK(oracle::rho_discrete_soe(p, 0, 4).d == -2.0);
}

TEST_CASE("segment products")
{
    const auto p = NumerologyPair::from_counts(2, 8);
    const auto base = oracle::rho_discrete_soe(p, 1, 1).value;
    CHECK(oracle::segment_rho_soe(p, 1, 1, 0) == base);
    CHECK(std::abs(oracle::segment_rho_soe(p, 1, 1, 1) + base) < 1e-12);
    CHECK_THROWS_AS(oracle::segment_rho_soe(p, 1, 1, 2), Error);
    CHECK_THROWS_AS(oracle::segment_rho_soe(p, 1, 1, -1), Error);

    // Offsetting the narrow pulse by q wide symbols rotates the product by
    // exp(j 2 pi n q / nu) and leaves the magnitude alone.
    for (std::int64_t nu : {2, 4, 8}) {
        for (std::int64_t n1 : {1, 4, 16}) {
            const auto pair = NumerologyPair::from_counts(nu, n1);
            for (std::int64_t m = 0; m < pair.n1(); ++m) {
                for (std::int64_t n = 0; n < pair.n2(); ++n) {
                    const auto q0 = oracle::rho_discrete_soe(pair, m, n).value;
                    for (std::int64_t q = 0; q < nu; ++q) {
                        const auto seg = oracle::segment_rho_soe(pair, m, n, q);
                        CHECK(std::abs(seg - unit_phasor(n * q, nu) * q0) < 1e-12);
                        CHECK(std::abs(std::abs(seg) - std::abs(q0)) < 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("compensated sums are order independent")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::complex<double>> xs(200);
        for (auto& x : xs) {
            x = {u(rng) * std::pow(10.0, trial % 7), u(rng)};
        }
        CompensatedComplexSum fwd;
        CompensatedComplexSum rev;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            fwd.add(xs[i]);
            rev.add(xs[xs.size() - 1 - i]);
        }
        const auto a = fwd.value();
        const auto b = rev.value();
        CHECK(std::abs(a.real() - b.real()) <= std::abs(a.real()) * 0x1p-52);
        CHECK(std::abs(a.imag() - b.imag()) <= std::abs(a.imag()) * 0x1p-52);
    }

    // A classic cancellation case a naive sum gets wrong.
    CompensatedSum s;
    for (double x : {1.0, 1e100, 1.0, -1e100}) {
        s.add(x);
    }
    CHECK(s.value() == 2.0);
}
