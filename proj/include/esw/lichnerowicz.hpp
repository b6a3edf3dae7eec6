#pragma once

#include <optional>

#include "esw/curvature.hpp"

namespace esw {

/// The r x r matrix of the Lichnerowicz Laplacian restricted to diagonal
/// invariant tensors, in the orthonormal basis (I_k / sqrt(d_k)).
///
/// entry(k,m) for k != m carries a 1/sqrt(d_k d_m) factor, which is kept
/// exact when d_k d_m is a perfect square and becomes Float64 otherwise.
/// `core` stores the factor-free data: core(k,m) = sqrt(d_k d_m) * entry(k,m)
/// for k != m and core(k,k) = d_k * entry(k,k). Row sums of the core vanish
/// identically (the sqrt(d) kernel), which is exactly checkable on rational
/// inputs even when the entries themselves are irrational.
struct LichnerowiczMatrix {
    int r = 0;
    std::vector<long long> dims;
    std::vector<Scalar> entries;  // row-major r*r, symmetric
    std::vector<Scalar> core;     // row-major r*r, symmetric

    const Scalar& entry(int k, int m) const { return entries[static_cast<size_t>(k) * r + m]; }
    const Scalar& core_at(int k, int m) const { return core[static_cast<size_t>(k) * r + m]; }
    bool is_exact() const;
    std::vector<double> to_doubles() const;
};

LichnerowiczMatrix build_matrix(const SpaceDescriptor& space, const DiagonalMetric& g);

/// Eigenvalues (ascending) of a dense symmetric matrix by cyclic Jacobi
/// rotations; stops when the off-diagonal Frobenius norm drops below
/// 1e-13 times the matrix norm. Requires r <= 64.
std::vector<double> spectrum(const std::vector<double>& matrix, int r);
std::vector<double> spectrum(const LichnerowiczMatrix& matrix);

/// Eigenvalues and matching eigenvector columns.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<double> vectors;  // column v of eigenvalue values[v] at [row*r + v]
};
EigenDecomposition jacobi_eigen(const std::vector<double>& matrix, int r);

/// Orthonormal basis (columns) of the hyperplane orthogonal to
/// (sqrt(d_1),...,sqrt(d_r)), via a Householder reflection. r x (r-1),
/// stored column-major in an r*(r-1) vector at [row + r*col].
std::vector<double> tt_basis(const std::vector<long long>& dims);

/// Spectrum of the matrix conjugated to the traceless hyperplane; empty for r=1.
std::vector<double> tt_spectrum(const std::vector<long long>& dims, const std::vector<double>& matrix);
std::vector<double> tt_spectrum(const SpaceDescriptor& space, const LichnerowiczMatrix& matrix);

/// TT eigenvalues (ascending) with matching directions mapped back to log
/// coordinates: direction v has components v_k = a_k / sqrt(d_k) with a the
/// unit eigenvector in the traceless hyperplane, so sum_k d_k v_k = 0.
struct TTEigenDirections {
    std::vector<double> values;
    std::vector<std::vector<double>> directions;
};
TTEigenDirections tt_eigen_directions(const SpaceDescriptor& space, const DiagonalMetric& g);

struct LichnerowiczReport {
    LichnerowiczMatrix matrix;
    std::vector<double> full_spectrum;  // ascending, r values
    std::vector<double> tt;             // ascending, r-1 values
    double lambda_min = 0;              // min of tt
    double lambda_max = 0;              // max of tt
    int kernel_dim_tt = 0;              // tt eigenvalues within tolerance of 0
};

LichnerowiczReport lichnerowicz_report(const SpaceDescriptor& space, const DiagonalMetric& g,
                                       double tol = 1e-7);

enum class StabilityKind { GStable, LocalMinimum, Saddle, Degenerate };
const char* to_string(StabilityKind k);

/// Classification of an Einstein metric against 2*rho.
///
/// Thresholds use max(tol, tol*|2rho|). Up to trivial_dim TT eigenvalues
/// nearest 2*rho are discounted before testing degeneracy (the Laplacian is
/// 2*rho*id on trivial variations).
struct StabilityVerdict {
    StabilityKind kind = StabilityKind::Degenerate;
    int coindex = 0;
    double two_rho = 0;
    double margin = 0;  // min distance from 2*rho to the (discounted) TT spectrum
    double tolerance = 0;
    int kernel_dim_tt = 0;
    bool ricci_locally_invertible = false;
    std::vector<double> tt;  // undiscounted TT spectrum, ascending
};

StabilityVerdict classify_tt(const std::vector<double>& tt_values, double two_rho,
                             long long trivial_dim, double tol);

/// Requires einstein_residual(space, g) <= 1e-8; throws NotEinsteinError
/// otherwise, carrying the residual.
StabilityVerdict classify(const SpaceDescriptor& space, const DiagonalMetric& g, double tol = 1e-7);

StabilityVerdict classify_from_matrix(const std::vector<double>& matrix,
                                      const std::vector<long long>& dims, double two_rho,
                                      long long trivial_dim = 0, double tol = 1e-7);

/// Second variation of total scalar curvature at an Einstein metric along
/// the traceless direction v (log coordinates): (1/2)(2rho |a|^2 - a^T L a)
/// with a_k = v_k sqrt(d_k). Requires sum_k d_k v_k = 0 within 1e-10.
double second_variation(const SpaceDescriptor& space, const DiagonalMetric& g_einstein,
                        const std::vector<double>& v);

/// Exact test that lambda is an eigenvalue of a rational matrix: evaluates
/// det(L - lambda I) by fraction-free elimination over big integers.
/// Throws std::invalid_argument if any entry is approximate.
bool charpoly_certificate(const LichnerowiczMatrix& matrix, const Rational& lambda);

/// Eigenvalue interval of a principal submatrix restricted to its own
/// traceless hyperplane; lies inside [lambda_p, lambda_p^max] of the full
/// matrix. Empty (nullopt) for singleton subsets. Indices are 1-based.
std::optional<std::pair<double, double>> submatrix_bounds(const SpaceDescriptor& space,
                                                          const DiagonalMetric& g,
                                                          const std::vector<int>& subset);

}  // namespace esw
