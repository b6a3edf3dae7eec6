#include "esw/lichnerowicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace esw {

namespace {
constexpr int kMaxRank = 64;

double effective_tol(double tol, double scale) {
    return std::max(tol, tol * std::fabs(scale));
}
}  // namespace

bool LichnerowiczMatrix::is_exact() const {
    for (const auto& e : entries)
        if (!e.is_exact()) return false;
    return true;
}

std::vector<double> LichnerowiczMatrix::to_doubles() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.to_double());
    return out;
}

LichnerowiczMatrix build_matrix(const SpaceDescriptor& space, const DiagonalMetric& g) {
    if (g.r() != space.r)
        throw ValidationError("metric/descriptor rank mismatch in build_matrix");
    const int r = space.r;
    LichnerowiczMatrix L;
    L.r = r;
    L.dims = space.dims;
    L.core.assign(static_cast<size_t>(r) * r, Scalar(0));
    L.entries.assign(static_cast<size_t>(r) * r, Scalar(0));

    auto core = [&](int k, int m) -> Scalar& { return L.core[static_cast<size_t>(k) * r + m]; };

    // Diagonal core: d_k [L]_kk = sum_{i,j != k} (x_k/(x_i x_j)) [ijk]
    //                           + sum_{i != k} (x_i/x_k^2) [ikk].
    // Off-diagonal core: sqrt(d_k d_m) [L]_km
    //       = sum_i ((x_i^2 - x_k^2 - x_m^2)/(x_i x_k x_m)) [ikm],
    // the i-sum running over all indices including k and m.
    space.constants.for_each_ordered([&](int i, int j, int k, const Scalar& v) {
        const Scalar& xi = g.x[i - 1];
        const Scalar& xj = g.x[j - 1];
        const Scalar& xk = g.x[k - 1];
        if (i != k && j != k) core(k - 1, k - 1) += v * xk / (xi * xj);
        if (j == k && i != k) core(k - 1, k - 1) += v * xi / (xk * xk);
        // Ordered term (i, j, k) contributes to the pair {j, k} when j != k;
        // each unordered [ikm] with k != m is visited once as (i, k, m) and
        // once as (i, m, k) among the ordered permutations.
        if (j != k) {
            core(j - 1, k - 1) += v * (xi * xi - xj * xj - xk * xk) / (xi * xj * xk);
        }
    });

    for (int k = 0; k < r; ++k) {
        for (int m = 0; m < r; ++m) {
            if (k == m) {
                L.entries[static_cast<size_t>(k) * r + k] = core(k, k) / Scalar(space.dims[k]);
            } else {
                Scalar denom = Scalar(space.dims[k] * space.dims[m]).sqrt();
                L.entries[static_cast<size_t>(k) * r + m] = core(k, m) / denom;
            }
        }
    }
    return L;
}

EigenDecomposition jacobi_eigen(const std::vector<double>& matrix, int r) {
    if (r < 0 || matrix.size() != static_cast<size_t>(r) * r)
        throw std::invalid_argument("jacobi_eigen: matrix size does not match rank");
    if (r > kMaxRank) throw std::invalid_argument("jacobi_eigen: rank capped at 64");

    std::vector<double> a = matrix;
    double scale = 0;
    for (double v : a) scale = std::max(scale, std::fabs(v));
    for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q)
            if (std::fabs(a[static_cast<size_t>(p) * r + q] - a[static_cast<size_t>(q) * r + p]) >
                1e-12 * std::max(1.0, scale))
                throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");

    std::vector<double> V(static_cast<size_t>(r) * r, 0.0);
    for (int i = 0; i < r; ++i) V[static_cast<size_t>(i) * r + i] = 1.0;

    auto off_norm = [&]() {
        double s = 0;
        for (int p = 0; p < r; ++p)
            for (int q = p + 1; q < r; ++q) {
                double v = a[static_cast<size_t>(p) * r + q];
                s += 2 * v * v;
            }
        return std::sqrt(s);
    };
    double fro = 0;
    for (double v : a) fro += v * v;
    fro = std::sqrt(fro);
    const double target = 1e-13 * std::max(fro, 1e-300);

    for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
        for (int p = 0; p < r; ++p) {
            for (int q = p + 1; q < r; ++q) {
                double apq = a[static_cast<size_t>(p) * r + q];
                if (std::fabs(apq) <= 1e-300) continue;
                double app = a[static_cast<size_t>(p) * r + p];
                double aqq = a[static_cast<size_t>(q) * r + q];
                double theta = (aqq - app) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < r; ++i) {
                    double aip = a[static_cast<size_t>(i) * r + p];
                    double aiq = a[static_cast<size_t>(i) * r + q];
                    a[static_cast<size_t>(i) * r + p] = c * aip - s * aiq;
                    a[static_cast<size_t>(i) * r + q] = s * aip + c * aiq;
                }
                for (int i = 0; i < r; ++i) {
                    double api = a[static_cast<size_t>(p) * r + i];
                    double aqi = a[static_cast<size_t>(q) * r + i];
                    a[static_cast<size_t>(p) * r + i] = c * api - s * aqi;
                    a[static_cast<size_t>(q) * r + i] = s * api + c * aqi;
                }
                for (int i = 0; i < r; ++i) {
                    double vip = V[static_cast<size_t>(i) * r + p];
                    double viq = V[static_cast<size_t>(i) * r + q];
                    V[static_cast<size_t>(i) * r + p] = c * vip - s * viq;
                    V[static_cast<size_t>(i) * r + q] = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<size_t>(x) * r + x] < a[static_cast<size_t>(y) * r + y];
    });

    EigenDecomposition out;
    out.values.resize(static_cast<size_t>(r));
    out.vectors.assign(static_cast<size_t>(r) * r, 0.0);
    for (int c = 0; c < r; ++c) {
        out.values[c] = a[static_cast<size_t>(order[c]) * r + order[c]];
        for (int i = 0; i < r; ++i)
            out.vectors[static_cast<size_t>(i) * r + c] = V[static_cast<size_t>(i) * r + order[c]];
    }
    return out;
}

std::vector<double> spectrum(const std::vector<double>& matrix, int r) {
    return jacobi_eigen(matrix, r).values;
}

std::vector<double> spectrum(const LichnerowiczMatrix& matrix) {
    return spectrum(matrix.to_doubles(), matrix.r);
}

std::vector<double> tt_basis(const std::vector<long long>& dims) {
    const int r = static_cast<int>(dims.size());
    std::vector<double> w(static_cast<size_t>(r));
    double norm = 0;
    for (int i = 0; i < r; ++i) {
        w[i] = std::sqrt(static_cast<double>(dims[i]));
        norm += w[i] * w[i];
    }
    norm = std::sqrt(norm);
    for (double& v : w) v /= norm;

    // Householder vector u = w + e_1 maps e_1 to -w; later columns of the
    // reflection span the hyperplane orthogonal to w.
    std::vector<double> u = w;
    u[0] += 1.0;
    double uu = 0;
    for (double v : u) uu += v * v;

    std::vector<double> basis(static_cast<size_t>(r) * (r - 1), 0.0);
    for (int col = 1; col < r; ++col) {
        for (int row = 0; row < r; ++row) {
            double h = (row == col ? 1.0 : 0.0) - 2.0 * u[row] * u[col] / uu;
            basis[static_cast<size_t>(row) + static_cast<size_t>(r) * (col - 1)] = h;
        }
    }
    return basis;
}

std::vector<double> tt_spectrum(const std::vector<long long>& dims, const std::vector<double>& matrix) {
    const int r = static_cast<int>(dims.size());
    if (r <= 1) return {};
    if (matrix.size() != static_cast<size_t>(r) * r)
        throw std::invalid_argument("tt_spectrum: matrix size does not match dims");
    std::vector<double> basis = tt_basis(dims);
    const int s = r - 1;
    // B = V^T A V
    std::vector<double> av(static_cast<size_t>(r) * s, 0.0);
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < s; ++c) {
            double acc = 0;
            for (int j = 0; j < r; ++j)
                acc += matrix[static_cast<size_t>(i) * r + j] *
                       basis[static_cast<size_t>(j) + static_cast<size_t>(r) * c];
            av[static_cast<size_t>(i) + static_cast<size_t>(r) * c] = acc;
        }
    std::vector<double> b(static_cast<size_t>(s) * s, 0.0);
    for (int p = 0; p < s; ++p)
        for (int q = 0; q < s; ++q) {
            double acc = 0;
            for (int i = 0; i < r; ++i)
                acc += basis[static_cast<size_t>(i) + static_cast<size_t>(r) * p] *
                       av[static_cast<size_t>(i) + static_cast<size_t>(r) * q];
            b[static_cast<size_t>(p) * s + q] = acc;
        }
    // symmetrize away conjugation roundoff
    for (int p = 0; p < s; ++p)
        for (int q = p + 1; q < s; ++q) {
            double m = 0.5 * (b[static_cast<size_t>(p) * s + q] + b[static_cast<size_t>(q) * s + p]);
            b[static_cast<size_t>(p) * s + q] = b[static_cast<size_t>(q) * s + p] = m;
        }
    return spectrum(b, s);
}

std::vector<double> tt_spectrum(const SpaceDescriptor& space, const LichnerowiczMatrix& matrix) {
    return tt_spectrum(space.dims, matrix.to_doubles());
}

TTEigenDirections tt_eigen_directions(const SpaceDescriptor& space, const DiagonalMetric& g) {
    const int r = space.r;
    TTEigenDirections out;
    if (r <= 1) return out;
    std::vector<double> ld = build_matrix(space, g).to_doubles();
    std::vector<double> basis = tt_basis(space.dims);
    const int s = r - 1;
    std::vector<double> b(static_cast<size_t>(s) * s, 0.0);
    for (int p = 0; p < s; ++p)
        for (int q = 0; q < s; ++q) {
            double acc = 0;
            for (int i = 0; i < r; ++i) {
                double av = 0;
                for (int j = 0; j < r; ++j)
                    av += ld[static_cast<size_t>(i) * r + j] *
                          basis[static_cast<size_t>(j) + static_cast<size_t>(r) * q];
                acc += basis[static_cast<size_t>(i) + static_cast<size_t>(r) * p] * av;
            }
            b[static_cast<size_t>(p) * s + q] = acc;
        }
    for (int p = 0; p < s; ++p)
        for (int q = p + 1; q < s; ++q) {
            double mid = 0.5 * (b[static_cast<size_t>(p) * s + q] + b[static_cast<size_t>(q) * s + p]);
            b[static_cast<size_t>(p) * s + q] = b[static_cast<size_t>(q) * s + p] = mid;
        }
    EigenDecomposition eig = jacobi_eigen(b, s);
    out.values = eig.values;
    out.directions.resize(static_cast<size_t>(s));
    for (int c = 0; c < s; ++c) {
        std::vector<double> v(static_cast<size_t>(r));
        for (int k = 0; k < r; ++k) {
            double a = 0;
            for (int p = 0; p < s; ++p)
                a += basis[static_cast<size_t>(k) + static_cast<size_t>(r) * p] *
                     eig.vectors[static_cast<size_t>(p) * s + c];
            v[k] = a / std::sqrt(static_cast<double>(space.dims[k]));
        }
        out.directions[c] = std::move(v);
    }
    return out;
}

LichnerowiczReport lichnerowicz_report(const SpaceDescriptor& space, const DiagonalMetric& g,
                                       double tol) {
    LichnerowiczReport rep;
    rep.matrix = build_matrix(space, g);
    rep.full_spectrum = spectrum(rep.matrix);
    rep.tt = tt_spectrum(space, rep.matrix);
    if (!rep.tt.empty()) {
        rep.lambda_min = rep.tt.front();
        rep.lambda_max = rep.tt.back();
    }
    double thr = effective_tol(tol, rep.tt.empty() ? 0.0 : rep.lambda_max);
    for (double v : rep.tt)
        if (std::fabs(v) <= thr) ++rep.kernel_dim_tt;
    return rep;
}

const char* to_string(StabilityKind k) {
    switch (k) {
        case StabilityKind::GStable: return "g-stable";
        case StabilityKind::LocalMinimum: return "local-minimum";
        case StabilityKind::Saddle: return "saddle";
        case StabilityKind::Degenerate: return "degenerate";
    }
    return "?";
}

StabilityVerdict classify_tt(const std::vector<double>& tt_values, double two_rho,
                             long long trivial_dim, double tol) {
    StabilityVerdict out;
    out.tt = tt_values;
    std::sort(out.tt.begin(), out.tt.end());
    out.two_rho = two_rho;
    out.tolerance = effective_tol(tol, two_rho);

    const double thr = out.tolerance;
    for (double v : out.tt)
        if (std::fabs(v) <= thr) ++out.kernel_dim_tt;
    out.ricci_locally_invertible = (out.kernel_dim_tt == 0);

    // Trivial variations sit exactly at 2*rho; discount up to trivial_dim of
    // them before judging degeneracy.
    std::vector<double> work = out.tt;
    for (long long t = 0; t < trivial_dim && !work.empty(); ++t) {
        auto it = std::min_element(work.begin(), work.end(), [&](double a, double b) {
            return std::fabs(a - two_rho) < std::fabs(b - two_rho);
        });
        if (std::fabs(*it - two_rho) > thr) break;
        work.erase(it);
    }

    out.margin = std::numeric_limits<double>::infinity();
    for (double v : work) out.margin = std::min(out.margin, std::fabs(v - two_rho));

    int below = 0, above = 0, degenerate = 0;
    for (double v : work) {
        if (v < two_rho - thr)
            ++below;
        else if (v > two_rho + thr)
            ++above;
        else
            ++degenerate;
    }
    out.coindex = below;
    if (degenerate > 0)
        out.kind = StabilityKind::Degenerate;
    else if (below == 0)
        out.kind = StabilityKind::GStable;
    else if (above == 0)
        out.kind = StabilityKind::LocalMinimum;
    else
        out.kind = StabilityKind::Saddle;
    return out;
}

StabilityVerdict classify(const SpaceDescriptor& space, const DiagonalMetric& g, double tol) {
    double res = einstein_residual(space, g);
    if (res > 1e-8) throw NotEinsteinError(res);
    LichnerowiczMatrix L = build_matrix(space, g);
    std::vector<double> tt = tt_spectrum(space, L);
    double tr = two_rho(space, g).to_double();
    return classify_tt(tt, tr, space.trivial_dim, tol);
}

StabilityVerdict classify_from_matrix(const std::vector<double>& matrix,
                                      const std::vector<long long>& dims, double two_rho,
                                      long long trivial_dim, double tol) {
    return classify_tt(tt_spectrum(dims, matrix), two_rho, trivial_dim, tol);
}

double second_variation(const SpaceDescriptor& space, const DiagonalMetric& g_einstein,
                        const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != space.r)
        throw std::invalid_argument("second_variation: direction has wrong length");
    double trace = 0, scale = 0;
    for (int k = 0; k < space.r; ++k) {
        trace += static_cast<double>(space.dims[k]) * v[k];
        scale += std::fabs(static_cast<double>(space.dims[k]) * v[k]);
    }
    if (std::fabs(trace) > 1e-10 * std::max(1.0, scale))
        throw std::invalid_argument("second_variation: direction is not traceless");

    std::vector<double> a(static_cast<size_t>(space.r));
    for (int k = 0; k < space.r; ++k) a[k] = v[k] * std::sqrt(static_cast<double>(space.dims[k]));

    std::vector<double> L = build_matrix(space, g_einstein).to_doubles();
    double quad = 0, norm2 = 0;
    for (int k = 0; k < space.r; ++k) {
        norm2 += a[k] * a[k];
        for (int m = 0; m < space.r; ++m) quad += a[k] * L[static_cast<size_t>(k) * space.r + m] * a[m];
    }
    double tr = two_rho(space, g_einstein).to_double();
    return 0.5 * (tr * norm2 - quad);
}

bool charpoly_certificate(const LichnerowiczMatrix& matrix, const Rational& lambda) {
    const int r = matrix.r;
    std::vector<Rational> m(static_cast<size_t>(r) * r);
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j) {
            const Scalar& e = matrix.entry(k, j);
            if (!e.is_exact())
                throw std::invalid_argument(
                    "charpoly_certificate: matrix has approximate entries (sqrt(d_k d_m) not a perfect square)");
            m[static_cast<size_t>(k) * r + j] = e.rational();
            if (k == j) m[static_cast<size_t>(k) * r + j] -= lambda;
        }

    // Clear denominators row by row, then run fraction-free (Bareiss)
    // elimination over integers; det == 0 is preserved by row scaling.
    std::vector<BigInt> a(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i) {
        BigInt lcm(1);
        for (int j = 0; j < r; ++j) {
            const BigInt& d = m[static_cast<size_t>(i) * r + j].den();
            lcm = lcm / BigInt::gcd(lcm, d) * d;
        }
        for (int j = 0; j < r; ++j) {
            const Rational& q = m[static_cast<size_t>(i) * r + j];
            a[static_cast<size_t>(i) * r + j] = q.num() * (lcm / q.den());
        }
    }

    BigInt prev(1);
    for (int k = 0; k < r - 1; ++k) {
        // pivot search
        int pivot = -1;
        for (int i = k; i < r; ++i)
            if (!a[static_cast<size_t>(i) * r + k].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return true;  // zero column: det is exactly zero
        if (pivot != k)
            for (int j = 0; j < r; ++j)
                std::swap(a[static_cast<size_t>(pivot) * r + j], a[static_cast<size_t>(k) * r + j]);
        for (int i = k + 1; i < r; ++i) {
            for (int j = k + 1; j < r; ++j) {
                BigInt t = a[static_cast<size_t>(i) * r + j] * a[static_cast<size_t>(k) * r + k] -
                           a[static_cast<size_t>(i) * r + k] * a[static_cast<size_t>(k) * r + j];
                a[static_cast<size_t>(i) * r + j] = t / prev;  // exact by Bareiss
            }
            a[static_cast<size_t>(i) * r + k] = BigInt(0);
        }
        prev = a[static_cast<size_t>(k) * r + k];
    }
    return a[static_cast<size_t>(r - 1) * r + (r - 1)].is_zero();
}

std::optional<std::pair<double, double>> submatrix_bounds(const SpaceDescriptor& space,
                                                          const DiagonalMetric& g,
                                                          const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("submatrix_bounds: empty subset");
    for (int idx : subset)
        if (idx < 1 || idx > space.r)
            throw std::invalid_argument("submatrix_bounds: index out of range");
    if (subset.size() == 1) return std::nullopt;  // no traceless directions

    LichnerowiczMatrix L = build_matrix(space, g);
    const int s = static_cast<int>(subset.size());
    std::vector<double> sub(static_cast<size_t>(s) * s);
    std::vector<long long> dims(static_cast<size_t>(s));
    for (int p = 0; p < s; ++p) {
        dims[p] = space.dims[subset[p] - 1];
        for (int q = 0; q < s; ++q)
            sub[static_cast<size_t>(p) * s + q] = L.entry(subset[p] - 1, subset[q] - 1).to_double();
    }
    std::vector<double> vals = tt_spectrum(dims, sub);
    return std::make_pair(vals.front(), vals.back());
}

}  // namespace esw
