#pragma once

#include "esw/lichnerowicz.hpp"

namespace esw {

enum class SolutionSource {
    ClosedFormEqualDims,
    ClosedFormTwoEqual,
    ClosedFormW2General,
    ClosedFormW4Quartic,
    ClosedFormFlagR2,
    Numeric,
};
const char* to_string(SolutionSource s);

/// One Einstein metric (or a recorded non-existence case). Closed-form
/// sources keep exact values where the formulas stay rational and attach
/// their TT spectrum when one is available in closed form.
struct EinsteinSolution {
    std::string label;
    DiagonalMetric metric;
    Scalar two_rho_value;
    double residual = 0;
    SolutionSource source = SolutionSource::Numeric;
    bool exists = true;
    std::string reason;                  // violated condition when exists == false
    std::vector<Scalar> closed_form_tt;  // empty when no closed form is attached
};

/// Equal summand data a_1 = a_2 = a_3 = b, 0 < b < 1/2. Returns the standard
/// metric (1,1,1) with 2rho = 1-b and TT spectrum {3b, 3b}, and the three
/// permutations of ((1-2b)/(2b), 1, 1) with 2rho = (1+2b)/2 and TT spectrum
/// {(12b^2+4b-1)/(2(1-2b)), 3(1-2b)/2}.
std::vector<EinsteinSolution> solve_equal_dims(const Rational& b);

/// Two equal summands: a_1 = a_2 = b, a_3 = c, both positive. Up to four
/// metrics: g_q = (1,1,q) for the real positive roots q of the quadratic
/// (radicand 1-4(b+c)(1-2c)), and g_p = (p, 1, 2b(p+1)) when
/// T = 1-2(2b+c)+16b^2(b+c) > 0. Non-existence is data (exists = false),
/// not an error.
std::vector<EinsteinSolution> solve_two_equal(const Rational& b, const Rational& c);

/// SU(k+l+m) flags with pairwise distinct k, l, m: the four metrics
/// g_0 = (l+m, k+m, k+l) and the three Kaehler ones obtained by stretching
/// one entry by 2k, 2l, 2m respectively.
std::vector<EinsteinSolution> solve_w2_general(long long k, long long l, long long m);

/// SU(2l)/U(l), l >= 2: both Einstein metrics (1, x2, x3) where x3 is a
/// positive root of a quartic, isolated by Sturm bracketing and polished by
/// Newton to ~1e-13.
std::vector<EinsteinSolution> solve_w4_quartic(long long l);

/// Two-summand flag: g_0 = (1,2) and g_1 = (1, 4*d2/(d1+2*d2)); attaches the
/// single TT eigenvalue (d1+d2) x2 / ((d1+4*d2) x1^2).
std::vector<EinsteinSolution> solve_flag_r2(long long d1, long long d2);

struct NumericSolveOptions {
    double grid_min = 0.1;
    double grid_max = 5.0;
    int points_per_axis = 7;
    int max_iterations = 60;
    double fnorm_tol = 1e-12;
    double dedup_tol = 1e-6;
};

/// Multistart Newton in gauge x_1 = 1: unknowns u_k = ln x_k for k >= 2,
/// residual map rho_{k+1} - rho_1, Jacobian by finite differences (step
/// 1e-7). The start grid is log-uniform and deterministic; converged roots
/// are deduplicated in u-space and returned sorted, each verified through
/// einstein_residual.
std::vector<EinsteinSolution> solve_numeric(const SpaceDescriptor& space,
                                            const NumericSolveOptions& opts = {});

/// The curve g_t = (t, (-t+s)/2, (t+s)/2), s = sqrt(t^2 + 8/t), t > 0.
/// By construction x3 = x1 + x2 and x1 x2 x3 = 2 for every t.
DiagonalMetric kahler_ricci_curve(double t);

// ---------------------------------------------------------------------------
// Exact-coefficient polynomials with Sturm root counting (used by the quartic
// solver and by tests that need certified root brackets).
// ---------------------------------------------------------------------------

struct RatPoly {
    std::vector<Rational> c;  // c[i] is the coefficient of x^i

    int degree() const;
    void trim();
    Rational eval(const Rational& x) const;
    double eval(double x) const;
    RatPoly derivative() const;
};

std::vector<RatPoly> sturm_chain(const RatPoly& p);
int sturm_sign_changes(const std::vector<RatPoly>& chain, const Rational& x);
/// Number of distinct real roots in (a, b].
int sturm_count(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b);
/// Distinct real roots in (lo, hi], isolated by Sturm bisection and polished
/// by Newton; ascending.
std::vector<double> isolate_roots(const RatPoly& p, const Rational& lo, const Rational& hi);

}  // namespace esw
