#include "esw/einstein_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace esw {

const char* to_string(SolutionSource s) {
    switch (s) {
        case SolutionSource::ClosedFormEqualDims: return "closed-form-equal-dims";
        case SolutionSource::ClosedFormTwoEqual: return "closed-form-two-equal";
        case SolutionSource::ClosedFormW2General: return "closed-form-w2-general";
        case SolutionSource::ClosedFormW4Quartic: return "closed-form-w4-quartic";
        case SolutionSource::ClosedFormFlagR2: return "closed-form-flag-r2";
        case SolutionSource::Numeric: return "numeric";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// RatPoly / Sturm
// ---------------------------------------------------------------------------

int RatPoly::degree() const {
    for (size_t i = c.size(); i-- > 0;)
        if (!c[i].is_zero()) return static_cast<int>(i);
    return -1;
}

void RatPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double RatPoly::eval(double x) const {
    double acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].to_double();
    return acc;
}

RatPoly RatPoly::derivative() const {
    RatPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rational(static_cast<long long>(i)));
    d.trim();
    return d;
}

namespace {

RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    a.trim();
    int db = b.degree();
    if (db < 0) throw std::domain_error("poly_rem: division by zero polynomial");
    while (a.degree() >= db) {
        int da = a.degree();
        Rational f = a.c[da] / b.c[db];
        for (int i = 0; i <= db; ++i) a.c[da - db + i] -= f * b.c[i];
        a.trim();
    }
    return a;
}

}  // namespace

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    RatPoly p0 = p;
    p0.trim();
    if (p0.degree() < 0) return chain;
    chain.push_back(p0);
    RatPoly p1 = p0.derivative();
    if (p1.degree() < 0) return chain;
    chain.push_back(p1);
    while (chain.back().degree() >= 1) {
        RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.degree() < 0) break;
        for (auto& coeff : r.c) coeff = -coeff;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sturm_sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).signum();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int sturm_count(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b) {
    return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

std::vector<double> isolate_roots(const RatPoly& p, const Rational& lo, const Rational& hi) {
    std::vector<RatPoly> chain = sturm_chain(p);
    if (chain.empty()) return {};
    RatPoly dp = p.derivative();

    struct Interval {
        Rational a, b;
        int count;
    };
    std::vector<Interval> queue{{lo, hi, sturm_count(chain, lo, hi)}};
    std::vector<Interval> isolated;
    while (!queue.empty()) {
        Interval iv = queue.back();
        queue.pop_back();
        if (iv.count <= 0) continue;
        if (iv.count == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rational mid = (iv.a + iv.b) / Rational(2);
        int left = sturm_count(chain, iv.a, mid);
        queue.push_back({iv.a, mid, left});
        queue.push_back({mid, iv.b, iv.count - left});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const Interval& x, const Interval& y) { return x.a < y.a; });

    std::vector<double> roots;
    for (auto& iv : isolated) {
        // narrow the certified bracket, then polish in double
        for (int step = 0; step < 40; ++step) {
            Rational mid = (iv.a + iv.b) / Rational(2);
            if (sturm_count(chain, iv.a, mid) == 1)
                iv.b = mid;
            else
                iv.a = mid;
        }
        double a = iv.a.to_double(), b = iv.b.to_double();
        double x = 0.5 * (a + b);
        for (int it = 0; it < 100; ++it) {
            double f = p.eval(x);
            double fp = dp.eval(x);
            double nx;
            if (fp != 0.0) {
                nx = x - f / fp;
                if (!(nx >= a && nx <= b)) nx = 0.5 * (a + b);
            } else {
                nx = 0.5 * (a + b);
            }
            if (std::fabs(nx - x) <= 1e-15 * std::max(1.0, std::fabs(x))) {
                x = nx;
                break;
            }
            x = nx;
        }
        roots.push_back(x);
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Closed-form solvers
// ---------------------------------------------------------------------------

namespace {

/// Minimal r=3 descriptor realizing the summand data (a_1, a_2, a_3): integer
/// dims d_i with d_i * a_i all equal to one constant [123]. Curvature and the
/// reduced Laplacian depend on the a_i only, so this is enough to verify
/// residuals of closed-form metrics.
SpaceDescriptor synthetic_from_as(const Rational& a1, const Rational& a2, const Rational& a3) {
    const Rational as[3] = {a1, a2, a3};
    BigInt lcm(1);
    for (const auto& a : as) {
        if (a.signum() <= 0) throw std::invalid_argument("summand data a_i must be positive");
        lcm = lcm / BigInt::gcd(lcm, a.num()) * a.num();
    }
    SpaceDescriptor d;
    d.name = "synthetic(" + a1.to_string() + "," + a2.to_string() + "," + a3.to_string() + ")";
    d.r = 3;
    for (const auto& a : as) {
        BigInt di = lcm / a.num() * a.den();
        d.dims.push_back(di.to_longlong());
    }
    d.killing.assign(3, Scalar(1));
    d.constants = StructureConstants(3);
    d.constants.set(1, 2, 3, Scalar(Rational(lcm, BigInt(1))));
    validate_descriptor(d);
    return d;
}

EinsteinSolution missing(std::string label, SolutionSource src, std::string reason) {
    EinsteinSolution s;
    s.label = std::move(label);
    s.source = src;
    s.exists = false;
    s.reason = std::move(reason);
    return s;
}

EinsteinSolution make_solution(std::string label, SolutionSource src, const SpaceDescriptor& check,
                               DiagonalMetric metric, Scalar two_rho_value,
                               std::vector<Scalar> tt = {}) {
    EinsteinSolution s;
    s.label = std::move(label);
    s.source = src;
    s.metric = std::move(metric);
    s.two_rho_value = std::move(two_rho_value);
    s.residual = einstein_residual(check, s.metric);
    s.closed_form_tt = std::move(tt);
    std::sort(s.closed_form_tt.begin(), s.closed_form_tt.end(),
              [](const Scalar& x, const Scalar& y) { return x.to_double() < y.to_double(); });
    return s;
}

}  // namespace

std::vector<EinsteinSolution> solve_equal_dims(const Rational& b) {
    if (!(Rational(0) < b && b < Rational(1, 2)))
        throw std::invalid_argument("solve_equal_dims: requires 0 < b < 1/2, got b = " + b.to_string());
    SpaceDescriptor check = synthetic_from_as(b, b, b);

    std::vector<EinsteinSolution> out;
    Scalar sb(b);
    out.push_back(make_solution("g_kil", SolutionSource::ClosedFormEqualDims, check,
                                DiagonalMetric::ones(3), Scalar(Rational(1) - b),
                                {Scalar(Rational(3) * b), Scalar(Rational(3) * b)}));

    Rational t = (Rational(1) - Rational(2) * b) / (Rational(2) * b);
    Rational lam1 = (Rational(12) * b * b + Rational(4) * b - Rational(1)) /
                    (Rational(2) * (Rational(1) - Rational(2) * b));
    Rational lam2 = Rational(3, 2) * (Rational(1) - Rational(2) * b);
    Rational tr = (Rational(1) + Rational(2) * b) / Rational(2);
    for (int i = 0; i < 3; ++i) {
        std::vector<Scalar> x(3, Scalar(1));
        x[i] = Scalar(t);
        out.push_back(make_solution("g_" + std::to_string(i + 1),
                                    SolutionSource::ClosedFormEqualDims, check,
                                    DiagonalMetric(std::move(x)), Scalar(tr),
                                    {Scalar(lam1), Scalar(lam2)}));
    }
    return out;
}

std::vector<EinsteinSolution> solve_two_equal(const Rational& b, const Rational& c) {
    if (b.signum() <= 0 || c.signum() <= 0)
        throw std::invalid_argument("solve_two_equal: requires b > 0 and c > 0");
    SpaceDescriptor check = synthetic_from_as(b, b, c);
    std::vector<EinsteinSolution> out;

    const Rational one(1), two(2), four(4);
    Rational bc = b + c;

    // g_q = (1, 1, q)
    Rational rad_q = one - four * bc * (one - two * c);
    if (rad_q.signum() < 0) {
        std::string why = "radicand 1-4(b+c)(1-2c) = " + rad_q.to_string() + " < 0";
        out.push_back(missing("g_q+", SolutionSource::ClosedFormTwoEqual, why));
        out.push_back(missing("g_q-", SolutionSource::ClosedFormTwoEqual, why));
    } else {
        Scalar sq = Scalar(rad_q).sqrt();
        Scalar denom(Rational(2) * bc);
        Scalar qs[2] = {(Scalar(1) + sq) / denom, (Scalar(1) - sq) / denom};
        const char* labels[2] = {"g_q+", "g_q-"};
        for (int i = 0; i < 2; ++i) {
            if (i == 1 && rad_q.is_zero()) {
                out.push_back(missing(labels[i], SolutionSource::ClosedFormTwoEqual,
                                      "double root, coincides with g_q+"));
                continue;
            }
            const Scalar& q = qs[i];
            if (q.signum() <= 0) {
                out.push_back(missing(labels[i], SolutionSource::ClosedFormTwoEqual,
                                      "root q = " + q.to_string() + " is not positive"));
                continue;
            }
            Scalar lam1 = Scalar(b) * (Scalar(4) - q * q) / q;
            Scalar lam2 = q * Scalar(b + two * c);
            out.push_back(make_solution(labels[i], SolutionSource::ClosedFormTwoEqual, check,
                                        DiagonalMetric({Scalar(1), Scalar(1), q}),
                                        Scalar(1) - Scalar(b) * q, {lam1, lam2}));
        }
    }

    // g_p = (p, 1, 2b(p+1)); the radicand of p is positive iff T > 0.
    Rational T = one - two * (two * b + c) + Rational(16) * b * b * bc;
    Rational Bden = two * bc * (one - four * b * b);
    if (T.signum() <= 0) {
        std::string why = "T = 1-2(2b+c)+16b^2(b+c) = " + T.to_string() + " <= 0";
        out.push_back(missing("g_p+", SolutionSource::ClosedFormTwoEqual, why));
        out.push_back(missing("g_p-", SolutionSource::ClosedFormTwoEqual, why));
    } else if (Bden.signum() <= 0) {
        std::string why = "requires b < 1/2";
        out.push_back(missing("g_p+", SolutionSource::ClosedFormTwoEqual, why));
        out.push_back(missing("g_p-", SolutionSource::ClosedFormTwoEqual, why));
    } else {
        Rational A = one - two * b + Rational(8) * b * b * bc;
        Scalar sp = Scalar(A * A - Bden * Bden).sqrt();  // = T(1+2c) > 0
        Scalar ps[2] = {(Scalar(A) + sp) / Scalar(Bden), (Scalar(A) - sp) / Scalar(Bden)};
        const char* labels[2] = {"g_p+", "g_p-"};

        // spectrum coefficients of the quartic D(p)
        Rational c4 = bc * (Rational(8) * b * b * b * c + one - four * b * b +
                            Rational(8) * b.pow(4));
        Rational c3 = Rational(8) * b * b * bc * (four * b * c + four * b * b - one);
        Rational c2 = Rational(96) * c * b.pow(4) - Rational(8) * b.pow(3) +
                      Rational(48) * c * c * b.pow(3) + Rational(48) * b.pow(5) - two * c -
                      Rational(8) * c * b * b;

        for (int i = 0; i < 2; ++i) {
            const Scalar& p = ps[i];
            if (p.signum() <= 0) {
                out.push_back(missing(labels[i], SolutionSource::ClosedFormTwoEqual,
                                      "root p = " + p.to_string() + " is not positive"));
                continue;
            }
            Scalar x3 = Scalar(two * b) * (p + Scalar(1));
            Scalar tr = (Scalar(1) + p) * Scalar(one - four * b * b) / (Scalar(2) * p);
            Scalar D = Scalar(c4) * (p.pow_int(4) + Scalar(1)) +
                       Scalar(c3) * (p.pow_int(3) + p) + Scalar(c2) * p * p;
            Scalar root = (Scalar(two * b) * D).sqrt();
            Scalar base = Scalar(four * c * b * b) * (p + Scalar(1)) * (p + Scalar(1)) +
                          Scalar(b) * (p * p + Scalar(1));
            Scalar den = Scalar(two * b) * p * (p + Scalar(1));
            out.push_back(make_solution(labels[i], SolutionSource::ClosedFormTwoEqual, check,
                                        DiagonalMetric({p, Scalar(1), x3}), tr,
                                        {(base - root) / den, (base + root) / den}));
        }
    }
    return out;
}

std::vector<EinsteinSolution> solve_w2_general(long long k, long long l, long long m) {
    if (k == l || l == m || k == m)
        throw std::invalid_argument(
            "solve_w2_general: k, l, m must be pairwise distinct (use solve_equal_dims or "
            "solve_two_equal otherwise)");
    SpaceDescriptor space = wallach_descriptor(WallachFamily::W2, {k, l, m});
    const Rational K(k), L(l), M(m), S(k + l + m);

    std::vector<EinsteinSolution> out;
    Rational T0 = (K + L) * (K + M) * (L + M);
    Rational klm = K * L * M;
    {
        DiagonalMetric g0({Scalar(Rational(l + m)), Scalar(Rational(k + m)), Scalar(Rational(k + l))});
        Rational tr = (T0 + Rational(2) * klm) / (S * T0);
        Rational P = T0 * (T0 - Rational(8) * klm);
        Scalar sp = Scalar(P).sqrt();
        Scalar den = Scalar(Rational(2) * S * T0);
        Scalar mid = Scalar(T0 + Rational(4) * klm);
        out.push_back(make_solution("g_0", SolutionSource::ClosedFormW2General, space, g0,
                                    Scalar(tr), {(mid - sp) / den, (mid + sp) / den}));
    }
    struct Stretch {
        const char* label;
        int axis;
        long long by;
        Rational lam_max;
    };
    const Stretch stretches[3] = {
        {"g_k", 0, 2 * k, Rational(4 * k + l + m) / (S * Rational(2 * k + l + m))},
        {"g_l", 1, 2 * l, Rational(k + 4 * l + m) / (S * Rational(k + 2 * l + m))},
        {"g_m", 2, 2 * m, Rational(k + l + 4 * m) / (S * Rational(k + l + 2 * m))},
    };
    for (const auto& st : stretches) {
        std::vector<Scalar> x = {Scalar(Rational(l + m)), Scalar(Rational(k + m)),
                                 Scalar(Rational(k + l))};
        x[st.axis] += Scalar(Rational(st.by));
        out.push_back(make_solution(st.label, SolutionSource::ClosedFormW2General, space,
                                    DiagonalMetric(std::move(x)), Scalar(Rational(1) / S),
                                    {Scalar(0), Scalar(st.lam_max)}));
    }
    return out;
}

std::vector<EinsteinSolution> solve_w4_quartic(long long l) {
    if (l < 2) throw std::invalid_argument("solve_w4_quartic: requires l >= 2");
    SpaceDescriptor space = wallach_descriptor(WallachFamily::W4, {l});

    RatPoly quartic;
    quartic.c = {
        Rational(12 * l * l * l * l - 20 * l * l * l + 7 * l * l + 2 * l - 1),
        Rational(-(48 * l * l * l - 48 * l * l + 4 * l + 4) * l),
        Rational((72 * l * l - 36 * l - 4) * l * l),
        Rational(-(48 * l - 8) * l * l * l),
        Rational(12 * l * l * l * l),
    };
    // Cauchy bound on positive roots
    Rational bound(1);
    for (size_t i = 0; i + 1 < quartic.c.size(); ++i) {
        Rational q = (quartic.c[i] / quartic.c.back()).abs();
        if (q > bound) bound = q;
    }
    bound += Rational(1);
    std::vector<double> roots = isolate_roots(quartic, Rational(0), bound);
    if (roots.size() != 2) {
        std::ostringstream os;
        os << "solve_w4_quartic: expected exactly 2 positive roots for l=" << l << ", found "
           << roots.size();
        throw std::runtime_error(os.str());
    }

    CompiledSpace cs = compile_space(space);
    std::vector<EinsteinSolution> out;
    int idx = 1;
    for (double x3 : roots) {
        double ld = static_cast<double>(l);
        double x2 = (2 * ld * ld * x3 * x3 + 2 * ld * x3 + 1 - ld - 2 * ld * ld) /
                    (2 * ld * (2 * ld * x3 - 2 * ld + 1));
        if (!(x2 > 0))
            throw std::runtime_error("solve_w4_quartic: companion coefficient x2 is not positive");
        // clean the pair to full double precision on the Einstein system
        double x[3] = {1.0, x2, x3};
        for (int it = 0; it < 6; ++it) {
            double rho[3];
            ricci_eigenvalues_d(cs, x, rho);
            double f[2] = {rho[1] - rho[0], rho[2] - rho[0]};
            double J[4];
            const double h = 1e-7;
            for (int col = 0; col < 2; ++col) {
                double saved = x[col + 1];
                x[col + 1] = saved * std::exp(h);
                double rho2[3];
                ricci_eigenvalues_d(cs, x, rho2);
                x[col + 1] = saved;
                J[0 * 2 + col] = (rho2[1] - rho2[0] - f[0]) / h;
                J[1 * 2 + col] = (rho2[2] - rho2[0] - f[1]) / h;
            }
            double det = J[0] * J[3] - J[1] * J[2];
            if (det == 0) break;
            double du0 = (-f[0] * J[3] + f[1] * J[1]) / det;
            double du1 = (-J[0] * f[1] + J[2] * f[0]) / det;
            x[1] *= std::exp(du0);
            x[2] *= std::exp(du1);
            if (std::fabs(du0) + std::fabs(du1) < 1e-15) break;
        }
        DiagonalMetric g = DiagonalMetric::from_doubles({x[0], x[1], x[2]});
        EinsteinSolution s = make_solution("g_" + std::to_string(idx++),
                                           SolutionSource::ClosedFormW4Quartic, space, g,
                                           two_rho(space, g));
        if (s.residual > 1e-10)
            throw std::runtime_error("solve_w4_quartic: root failed residual verification");
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<EinsteinSolution> solve_flag_r2(long long d1, long long d2) {
    SpaceDescriptor space = flag_r2_descriptor(d1, d2);
    auto lam = [&](const Rational& x2) {
        return Scalar(Rational(d1 + d2) * x2 / Rational(d1 + 4 * d2));
    };
    std::vector<EinsteinSolution> out;
    {
        DiagonalMetric g0({Scalar(1), Scalar(2)});
        out.push_back(make_solution("g_0", SolutionSource::ClosedFormFlagR2, space, g0,
                                    two_rho(space, g0), {lam(Rational(2))}));
    }
    {
        Rational y(4 * d2, d1 + 2 * d2);
        DiagonalMetric g1({Scalar(1), Scalar(y)});
        out.push_back(make_solution("g_1", SolutionSource::ClosedFormFlagR2, space, g1,
                                    two_rho(space, g1), {lam(y)}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Numeric multistart solver
// ---------------------------------------------------------------------------

namespace {

// Solves J du = -f in place; returns false on a singular pivot.
bool solve_linear(std::vector<double>& J, std::vector<double>& f, int n) {
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(J[static_cast<size_t>(i) * n + k]) >
                std::fabs(J[static_cast<size_t>(pivot) * n + k]))
                pivot = i;
        if (J[static_cast<size_t>(pivot) * n + k] == 0.0) return false;
        if (pivot != k) {
            for (int j = 0; j < n; ++j)
                std::swap(J[static_cast<size_t>(pivot) * n + j], J[static_cast<size_t>(k) * n + j]);
            std::swap(f[pivot], f[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            double fac = J[static_cast<size_t>(i) * n + k] / J[static_cast<size_t>(k) * n + k];
            for (int j = k; j < n; ++j)
                J[static_cast<size_t>(i) * n + j] -= fac * J[static_cast<size_t>(k) * n + j];
            f[i] -= fac * f[k];
        }
    }
    for (int i = n; i-- > 0;) {
        double acc = f[i];
        for (int j = i + 1; j < n; ++j) acc -= J[static_cast<size_t>(i) * n + j] * f[j];
        f[i] = acc / J[static_cast<size_t>(i) * n + i];
    }
    for (int i = 0; i < n; ++i) f[i] = -f[i];
    return true;
}

void residual_map(const CompiledSpace& cs, const std::vector<double>& u, std::vector<double>& f,
                  std::vector<double>& x, std::vector<double>& rho) {
    const int r = cs.r;
    x[0] = 1.0;
    for (int k = 1; k < r; ++k) x[k] = std::exp(u[k - 1]);
    ricci_eigenvalues_d(cs, x.data(), rho.data());
    for (int k = 1; k < r; ++k) f[k - 1] = rho[k] - rho[0];
}

bool newton_solve(const CompiledSpace& cs, std::vector<double>& u, const NumericSolveOptions& opts) {
    const int n = cs.r - 1;
    std::vector<double> f(n), fh(n), x(cs.r), rho(cs.r), J(static_cast<size_t>(n) * n), du(n);
    const double h = 1e-7;
    for (int it = 0; it < opts.max_iterations; ++it) {
        residual_map(cs, u, f, x, rho);
        double fn = 0;
        for (double v : f) fn = std::max(fn, std::fabs(v));
        if (!std::isfinite(fn)) return false;
        if (fn < opts.fnorm_tol) return true;
        for (int col = 0; col < n; ++col) {
            double saved = u[col];
            u[col] = saved + h;
            residual_map(cs, u, fh, x, rho);
            u[col] = saved;
            for (int row = 0; row < n; ++row) J[static_cast<size_t>(row) * n + col] = (fh[row] - f[row]) / h;
        }
        du = f;
        if (!solve_linear(J, du, n)) return false;
        double step = 0;
        for (int i = 0; i < n; ++i) step = std::max(step, std::fabs(du[i]));
        if (step > 2.0)  // keep multistart iterates from jumping across the domain
            for (int i = 0; i < n; ++i) du[i] *= 2.0 / step;
        for (int i = 0; i < n; ++i) u[i] += du[i];
        double un = 0;
        for (double v : u) un = std::max(un, std::fabs(v));
        if (un > 20.0) return false;
    }
    // accept a start only if it actually hit the tolerance
    residual_map(cs, u, f, x, rho);
    double fn = 0;
    for (double v : f) fn = std::max(fn, std::fabs(v));
    return std::isfinite(fn) && fn < opts.fnorm_tol;
}

}  // namespace

std::vector<EinsteinSolution> solve_numeric(const SpaceDescriptor& space,
                                            const NumericSolveOptions& opts) {
    if (space.r < 2) throw std::invalid_argument("solve_numeric: requires r >= 2");
    const int n = space.r - 1;
    double total = std::pow(static_cast<double>(opts.points_per_axis), n);
    if (total > 1e6)
        throw std::invalid_argument(
            "solve_numeric: start grid would exceed 1e6 points; reduce points_per_axis");

    CompiledSpace cs = compile_space(space);
    std::vector<double> levels(static_cast<size_t>(opts.points_per_axis));
    {
        double lo = std::log(opts.grid_min), hi = std::log(opts.grid_max);
        for (int i = 0; i < opts.points_per_axis; ++i)
            levels[i] = opts.points_per_axis == 1
                            ? 0.5 * (lo + hi)
                            : lo + (hi - lo) * static_cast<double>(i) /
                                       static_cast<double>(opts.points_per_axis - 1);
    }

    std::vector<std::vector<double>> roots;
    std::vector<int> odo(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<double> u(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) u[i] = levels[odo[i]];
        if (newton_solve(cs, u, opts)) {
            bool dup = false;
            for (const auto& seen : roots) {
                double d = 0;
                for (int i = 0; i < n; ++i) d = std::max(d, std::fabs(seen[i] - u[i]));
                if (d < opts.dedup_tol) {
                    dup = true;
                    break;
                }
            }
            if (!dup) roots.push_back(u);
        }
        int pos = 0;
        while (pos < n && ++odo[pos] == opts.points_per_axis) odo[pos++] = 0;
        if (pos == n) break;
    }

    std::sort(roots.begin(), roots.end());
    std::vector<EinsteinSolution> out;
    int idx = 1;
    for (const auto& u : roots) {
        std::vector<double> x(static_cast<size_t>(space.r), 1.0);
        for (int k = 1; k < space.r; ++k) x[k] = std::exp(u[k - 1]);
        DiagonalMetric g = DiagonalMetric::from_doubles(x);
        double res = einstein_residual(space, g);
        if (res > 1e-10) continue;
        EinsteinSolution s;
        s.label = "numeric_" + std::to_string(idx++);
        s.source = SolutionSource::Numeric;
        s.metric = std::move(g);
        s.two_rho_value = Scalar::approx(two_rho(space, s.metric).to_double());
        s.residual = res;
        out.push_back(std::move(s));
    }
    return out;
}

DiagonalMetric kahler_ricci_curve(double t) {
    if (!(t > 0)) throw std::invalid_argument("kahler_ricci_curve: requires t > 0");
    double s = std::sqrt(t * t + 8.0 / t);
    return DiagonalMetric::from_doubles({t, 0.5 * (-t + s), 0.5 * (t + s)});
}

}  // namespace esw
