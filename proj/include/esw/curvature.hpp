#pragma once

#include "esw/space_model.hpp"

namespace esw {

struct NotEinsteinError : std::runtime_error {
    double residual;
    explicit NotEinsteinError(double res)
        : std::runtime_error("metric is not Einstein (residual " + std::to_string(res) + ")"),
          residual(res) {}
};

/// Curvature data of one diagonal metric. rho[k] is the Ricci eigenvalue on
/// summand k, m[k] the moment-map eigenvalue, so rho_k = b_k/(2 x_k) + m_k
/// and Sc = sum_k d_k rho_k.
struct CurvatureReport {
    std::vector<Scalar> rho;
    std::vector<Scalar> m;
    Scalar scalar;
    Scalar scalar_normalized;
    Scalar mu_norm_sq;
    double einstein_residual = 0.0;
};

/// |mu_p|^2 = sum over ordered (i,j,k) of (x_k/(x_i x_j)) [ijk].
Scalar mu_norm_sq(const SpaceDescriptor& space, const DiagonalMetric& g);

std::vector<Scalar> moment_eigenvalues(const SpaceDescriptor& space, const DiagonalMetric& g);

/// rho_k = b_k/(2 x_k) - (1/(4 d_k)) sum_{i,j} ((x_i^2+x_j^2-x_k^2)/(x_i x_j x_k)) [ijk],
/// ordered sums; exact on rational inputs.
std::vector<Scalar> ricci_eigenvalues(const SpaceDescriptor& space, const DiagonalMetric& g);

Scalar scalar_curvature(const SpaceDescriptor& space, const DiagonalMetric& g);

/// Sc_N = (prod x_k^{d_k})^{1/n} * Sc. Exact when the determinant factor is
/// exactly 1, Float64 otherwise (the n-th root).
Scalar scalar_curvature_normalized(const SpaceDescriptor& space, const DiagonalMetric& g);

/// Relative max deviation of rho_k from the d-weighted mean; ~0 iff Einstein.
double einstein_residual(const SpaceDescriptor& space, const DiagonalMetric& g);

/// Analytic partials dSc/dx_k of the scalar-curvature formula; equals
/// -d_k rho_k / x_k identically.
std::vector<Scalar> scalar_gradient(const SpaceDescriptor& space, const DiagonalMetric& g);

CurvatureReport curvature_report(const SpaceDescriptor& space, const DiagonalMetric& g);

/// d-weighted mean of the Ricci eigenvalues times two; exact on rational
/// inputs (and equal to every 2 rho_k when the metric is Einstein).
Scalar two_rho(const SpaceDescriptor& space, const DiagonalMetric& g);

// Double-precision fast path shared by the Newton solver and the flow
// integrator: the descriptor's ordered terms are expanded once.
struct CompiledSpace {
    int r = 0;
    double n = 0;
    std::vector<double> dims;
    std::vector<double> killing;
    struct Term {
        int i, j, k;
        double v;
    };
    std::vector<Term> terms;  // all distinct ordered permutations
};

CompiledSpace compile_space(const SpaceDescriptor& space);
void ricci_eigenvalues_d(const CompiledSpace& cs, const double* x, double* rho);
double scalar_curvature_d(const CompiledSpace& cs, const double* x);
double einstein_residual_d(const CompiledSpace& cs, const double* x);

}  // namespace esw
