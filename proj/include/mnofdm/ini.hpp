// SPDX-License-Identifier: Apache-2.0
//
// Closed-form inter-numerology interference: relative distance, continuous and
// discrete inner products between a wide-numerology subcarrier m and a
// narrow-numerology subcarrier n, the discretization factor beta, and the
// orthogonality structure that follows from the sinc zero-crossings.
//
// Conventions:
//   * Inner products are conjugate-linear in the first argument, so the
//     wide<-narrow product of (m, n) is <phi1_m, phi2_n> = sum conj(phi1_m) phi2_n.
//   * d = m - n / nu, the centre separation in units of the wide spacing.
//   * Discrete sums run over l = 0 .. N^(1) - 1.

#pragma once

#include "mnofdm/numerology.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace mnofdm {

enum class InnerProductKind { Continuous, Discrete, OracleQuadrature, OracleSoe };

enum class Direction {
    WideFromNarrow, ///< rho^(1<-2)_{m,n}
    NarrowFromWide, ///< rho^(2<-1)_{n,m}
};

enum class Mode { Continuous, Discrete };

const char* to_string(InnerProductKind kind) noexcept;
const char* to_string(Direction direction) noexcept;
const char* to_string(Mode mode) noexcept;

struct InnerProduct {
    std::complex<double> value;
    double magnitude = 0.0;
    double d = 0.0;
    InnerProductKind kind = InnerProductKind::Continuous;
    std::int64_t n1 = 0; ///< samples per wide symbol; 0 for continuous products
    Direction direction = Direction::WideFromNarrow;
};

double relative_distance(std::int64_t m, std::int64_t n, std::int64_t nu);

// Magnitudes as functions of an arbitrary real d. These back the curve
// emitters; the index-based forms below reduce to them.
double magnitude_continuous_at(double d, std::int64_t nu);
/// Throws Error(DomainError) if |d| >= n1.
double magnitude_discrete_at(double d, std::int64_t nu, std::int64_t n1);

InnerProduct rho_continuous(const NumerologyPair& pair, std::int64_t m, std::int64_t n);
InnerProduct rho_discrete(const NumerologyPair& pair, std::int64_t m, std::int64_t n);

/// rho^(2<-1)_{n,m}: the narrow<-wide products, narrow index first.
InnerProduct rho_continuous_reverse(const NumerologyPair& pair, std::int64_t n, std::int64_t m);
InnerProduct rho_discrete_reverse(const NumerologyPair& pair, std::int64_t n, std::int64_t m);

InnerProduct rho(const NumerologyPair& pair, Mode mode, std::int64_t m, std::int64_t n);

double magnitude_continuous(const NumerologyPair& pair, std::int64_t m, std::int64_t n);
double magnitude_discrete(const NumerologyPair& pair, std::int64_t m, std::int64_t n);

/// 1 / |sinc(d / n1)|. Throws Error(DomainError) unless n1 >= 1 and |d| < n1.
double beta(double d, std::int64_t n1);

/// (beta - 1) * 100: the percentage by which the discrete magnitude exceeds
/// the continuous one.
double discretization_error_pct(double d, std::int64_t n1);

/// Smallest power-of-two n1 > |d| with discretization_error_pct(d, n1) <= tol_pct.
/// tol_pct must be > 0.
std::int64_t min_samples_for_tolerance(double d, double tol_pct);

/// True iff m - n/nu is a nonzero integer. Co-located pairs (d = 0) are not
/// orthogonal: their inner product has magnitude 1/sqrt(nu).
bool is_orthogonal(std::int64_t m, std::int64_t n, std::int64_t nu);

struct CoLocation {
    std::int64_t m = 0;
    std::int64_t n = 0;

    bool operator==(const CoLocation&) const = default;
};

struct SubcarrierSubset {
    std::string name;
    std::vector<std::int64_t> wide;
    std::vector<std::int64_t> narrow;
    std::vector<CoLocation> co_located;
    /// Largest cross-numerology magnitude over non-co-located pairs, taken
    /// over both the continuous and discrete products.
    double max_cross_magnitude = 0.0;
    bool certified = false;
};

/// Certification threshold for cross-numerology magnitudes.
inline constexpr double kOrthogonalityThreshold = 1e-12;

/// The three orthogonal subsets: all wide subcarriers, all narrow subcarriers,
/// and the mixed subset (all wide plus narrow n with n mod nu = 0).
std::vector<SubcarrierSubset> orthogonal_subsets(const NumerologyPair& pair);

inline constexpr std::int64_t kDefaultMatrixCap = std::int64_t{1} << 24;

/// Dense table of inner products. Rows index the victim numerology of the
/// direction (wide m for WideFromNarrow), columns the other one.
class IniMatrix {
public:
    IniMatrix(std::int64_t rows, std::int64_t cols, Mode mode, Direction direction);

    std::int64_t rows() const noexcept { return rows_; }
    std::int64_t cols() const noexcept { return cols_; }
    Mode mode() const noexcept { return mode_; }
    Direction direction() const noexcept { return direction_; }

    const InnerProduct& at(std::int64_t r, std::int64_t c) const { return cells_.at(index(r, c)); }
    InnerProduct& at(std::int64_t r, std::int64_t c) { return cells_.at(index(r, c)); }

    /// Sum of |rho|^2 along each row.
    std::vector<double> row_power() const;
    /// Sum of |rho|^2 down each column.
    std::vector<double> column_power() const;

private:
    std::size_t index(std::int64_t r, std::int64_t c) const;

    std::int64_t rows_;
    std::int64_t cols_;
    Mode mode_;
    Direction direction_;
    std::vector<InnerProduct> cells_;
};

/// Throws Error(CapExceeded) when N^(1) * N^(2) > cap.
IniMatrix ini_matrix(const NumerologyPair& pair, Mode mode, Direction direction = Direction::WideFromNarrow,
                     std::int64_t cap = kDefaultMatrixCap);

} // namespace mnofdm
