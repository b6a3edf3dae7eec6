#include "esw/curvature.hpp"

#include <cmath>

namespace esw {

namespace {

void check_inputs(const SpaceDescriptor& space, const DiagonalMetric& g) {
    if (g.r() != space.r)
        throw ValidationError("metric has " + std::to_string(g.r()) + " coefficients, descriptor has r=" +
                              std::to_string(space.r));
}

constexpr double kResidualFloor = 1e-300;

}  // namespace

Scalar mu_norm_sq(const SpaceDescriptor& space, const DiagonalMetric& g) {
    check_inputs(space, g);
    Scalar sum(0);
    space.constants.for_each_ordered([&](int i, int j, int k, const Scalar& v) {
        sum += v * g.x[k - 1] / (g.x[i - 1] * g.x[j - 1]);
    });
    return sum;
}

std::vector<Scalar> moment_eigenvalues(const SpaceDescriptor& space, const DiagonalMetric& g) {
    check_inputs(space, g);
    const int r = space.r;
    std::vector<Scalar> first(static_cast<size_t>(r), Scalar(0));   // sum_{i,j} x_j/(x_i x_k) [ijk]
    std::vector<Scalar> second(static_cast<size_t>(r), Scalar(0));  // sum_{i,j} x_k/(x_i x_j) [ijk]
    space.constants.for_each_ordered([&](int i, int j, int k, const Scalar& v) {
        first[k - 1] += v * g.x[j - 1] / (g.x[i - 1] * g.x[k - 1]);
        second[k - 1] += v * g.x[k - 1] / (g.x[i - 1] * g.x[j - 1]);
    });
    std::vector<Scalar> m;
    m.reserve(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
        Scalar dk(space.dims[k]);
        m.push_back(first[k] / (Scalar(-2) * dk) + second[k] / (Scalar(4) * dk));
    }
    return m;
}

std::vector<Scalar> ricci_eigenvalues(const SpaceDescriptor& space, const DiagonalMetric& g) {
    check_inputs(space, g);
    const int r = space.r;
    std::vector<Scalar> sums(static_cast<size_t>(r), Scalar(0));
    space.constants.for_each_ordered([&](int i, int j, int k, const Scalar& v) {
        const Scalar& xi = g.x[i - 1];
        const Scalar& xj = g.x[j - 1];
        const Scalar& xk = g.x[k - 1];
        sums[k - 1] += v * (xi * xi + xj * xj - xk * xk) / (xi * xj * xk);
    });
    std::vector<Scalar> rho;
    rho.reserve(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
        rho.push_back(space.killing[k] / (Scalar(2) * g.x[k]) -
                      sums[k] / (Scalar(4 * space.dims[k])));
    }
    return rho;
}

Scalar scalar_curvature(const SpaceDescriptor& space, const DiagonalMetric& g) {
    check_inputs(space, g);
    Scalar sum(0);
    for (int k = 0; k < space.r; ++k) sum += Scalar(space.dims[k]) * space.killing[k] / g.x[k];
    return sum / Scalar(2) - mu_norm_sq(space, g) / Scalar(4);
}

Scalar scalar_curvature_normalized(const SpaceDescriptor& space, const DiagonalMetric& g) {
    Scalar sc = scalar_curvature(space, g);
    if (g.is_exact()) {
        Rational det(1);
        for (int k = 0; k < space.r; ++k) det *= g.x[k].rational().pow(space.dims[k]);
        if (det == Rational(1)) return sc;
        double root = std::pow(det.to_double(), 1.0 / static_cast<double>(space.n()));
        return Scalar::approx(root * sc.to_double());
    }
    double logdet = 0;
    for (int k = 0; k < space.r; ++k)
        logdet += static_cast<double>(space.dims[k]) * std::log(g.x[k].to_double());
    return Scalar::approx(std::exp(logdet / static_cast<double>(space.n())) * sc.to_double());
}

double einstein_residual(const SpaceDescriptor& space, const DiagonalMetric& g) {
    std::vector<Scalar> rho = ricci_eigenvalues(space, g);
    double mean = 0;
    for (int k = 0; k < space.r; ++k) mean += static_cast<double>(space.dims[k]) * rho[k].to_double();
    mean /= static_cast<double>(space.n());
    double dev = 0;
    for (const auto& rk : rho) dev = std::max(dev, std::fabs(rk.to_double() - mean));
    return dev / std::max(std::fabs(mean), kResidualFloor);
}

std::vector<Scalar> scalar_gradient(const SpaceDescriptor& space, const DiagonalMetric& g) {
    check_inputs(space, g);
    const int r = space.r;
    std::vector<Scalar> grad(static_cast<size_t>(r), Scalar(0));
    for (int k = 0; k < r; ++k)
        grad[k] -= Scalar(space.dims[k]) * space.killing[k] / (Scalar(2) * g.x[k] * g.x[k]);
    space.constants.for_each_ordered([&](int i, int j, int k, const Scalar& v) {
        const Scalar& xi = g.x[i - 1];
        const Scalar& xj = g.x[j - 1];
        const Scalar& xk = g.x[k - 1];
        Scalar q = Scalar(4);
        // d/dx of -(1/4) v x_k/(x_i x_j), one ordered term at a time
        grad[k - 1] -= v / (q * xi * xj);
        grad[i - 1] += v * xk / (q * xi * xi * xj);
        grad[j - 1] += v * xk / (q * xi * xj * xj);
    });
    return grad;
}

CurvatureReport curvature_report(const SpaceDescriptor& space, const DiagonalMetric& g) {
    CurvatureReport rep;
    rep.rho = ricci_eigenvalues(space, g);
    rep.m = moment_eigenvalues(space, g);
    rep.mu_norm_sq = mu_norm_sq(space, g);
    rep.scalar = Scalar(0);
    for (int k = 0; k < space.r; ++k) rep.scalar += Scalar(space.dims[k]) * rep.rho[k];
    rep.scalar_normalized = scalar_curvature_normalized(space, g);
    rep.einstein_residual = einstein_residual(space, g);
    return rep;
}

Scalar two_rho(const SpaceDescriptor& space, const DiagonalMetric& g) {
    std::vector<Scalar> rho = ricci_eigenvalues(space, g);
    Scalar acc(0);
    for (int k = 0; k < space.r; ++k) acc += Scalar(space.dims[k]) * rho[k];
    return Scalar(2) * acc / Scalar(space.n());
}

CompiledSpace compile_space(const SpaceDescriptor& space) {
    CompiledSpace cs;
    cs.r = space.r;
    cs.n = static_cast<double>(space.n());
    cs.dims.reserve(static_cast<size_t>(space.r));
    for (long long d : space.dims) cs.dims.push_back(static_cast<double>(d));
    for (const auto& b : space.killing) cs.killing.push_back(b.to_double());
    space.constants.for_each_ordered([&](int i, int j, int k, const Scalar& v) {
        cs.terms.push_back({i - 1, j - 1, k - 1, v.to_double()});
    });
    return cs;
}

void ricci_eigenvalues_d(const CompiledSpace& cs, const double* x, double* rho) {
    for (int k = 0; k < cs.r; ++k) rho[k] = cs.killing[k] / (2.0 * x[k]);
    for (const auto& t : cs.terms) {
        double xi = x[t.i], xj = x[t.j], xk = x[t.k];
        rho[t.k] -= t.v * (xi * xi + xj * xj - xk * xk) / (xi * xj * xk) / (4.0 * cs.dims[t.k]);
    }
}

double scalar_curvature_d(const CompiledSpace& cs, const double* x) {
    double sc = 0;
    for (int k = 0; k < cs.r; ++k) sc += 0.5 * cs.killing[k] * cs.dims[k] / x[k];
    for (const auto& t : cs.terms) sc -= 0.25 * t.v * x[t.k] / (x[t.i] * x[t.j]);
    return sc;
}

double einstein_residual_d(const CompiledSpace& cs, const double* x) {
    std::vector<double> rho(static_cast<size_t>(cs.r));
    ricci_eigenvalues_d(cs, x, rho.data());
    double mean = 0;
    for (int k = 0; k < cs.r; ++k) mean += cs.dims[k] * rho[k];
    mean /= cs.n;
    double dev = 0;
    for (int k = 0; k < cs.r; ++k) dev = std::max(dev, std::fabs(rho[k] - mean));
    return dev / std::max(std::fabs(mean), kResidualFloor);
}

}  // namespace esw
