#include "doctest.h"

#include <cmath>

#include "esw/einstein_solvers.hpp"
#include "esw/reports.hpp"

using namespace esw;

TEST_CASE("sturm chains count and isolate real roots") {
    // (x-1)(x-2)(x-4) = x^3 - 7x^2 + 14x - 8
    RatPoly p;
    p.c = {Rational(-8), Rational(14), Rational(-7), Rational(1)};
    auto chain = sturm_chain(p);
    CHECK(sturm_count(chain, Rational(0), Rational(10)) == 3);
    CHECK(sturm_count(chain, Rational(3, 2), Rational(3)) == 1);
    auto roots = isolate_roots(p, Rational(0), Rational(10));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(roots[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(roots[2] == doctest::Approx(4.0).epsilon(1e-13));

    // double root: x^2 - 2x + 1; Sturm counts distinct roots
    RatPoly q;
    q.c = {Rational(1), Rational(-2), Rational(1)};
    auto qchain = sturm_chain(q);
    CHECK(sturm_count(qchain, Rational(0), Rational(3)) == 1);
}

TEST_CASE("equal-dims closed forms") {
    SUBCASE("largest equal-dims case, b = 5/18") {
        auto sols = solve_equal_dims(Rational(5, 18));
        REQUIRE(sols.size() == 4);
        CHECK(sols[0].label == "g_kil");
        CHECK(sols[0].two_rho_value.rational() == Rational(13, 18));
        CHECK(sols[0].closed_form_tt[0].rational() == Rational(5, 6));
        CHECK(sols[0].closed_form_tt[1].rational() == Rational(5, 6));
        CHECK(sols[0].residual <= 1e-14);
        for (int i = 1; i <= 3; ++i) {
            CHECK(sols[i].two_rho_value.rational() == Rational(7, 9));
            CHECK(sols[i].closed_form_tt[0].rational() == Rational(2, 3));
            CHECK(sols[i].closed_form_tt[1].rational() == Rational(7, 6));
            CHECK(sols[i].residual <= 1e-14);
        }
        CHECK(sols[1].metric.x[0].rational() == Rational(4, 5));
    }
    SUBCASE("b = 1/6 flag family has the kernel eigenvalue") {
        auto sols = solve_equal_dims(Rational(1, 6));
        CHECK(sols[1].closed_form_tt[0].rational() == Rational(0));
        CHECK(sols[1].closed_form_tt[1].rational() == Rational(1));
        CHECK(sols[1].metric.x[0].rational() == Rational(2));
    }
    SUBCASE("b = 1/9 has a negative eigenvalue") {
        auto sols = solve_equal_dims(Rational(1, 9));
        CHECK(sols[1].closed_form_tt[0].rational() == Rational(-11, 42));
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS((void)solve_equal_dims(Rational(1, 2)), std::invalid_argument);
        CHECK_THROWS_AS((void)solve_equal_dims(Rational(0)), std::invalid_argument);
    }
}

TEST_CASE("two-equal closed forms") {
    SUBCASE("W12 data: only the q pair exists") {
        auto sols = solve_two_equal(Rational(1, 5), Rational(4, 15));
        REQUIRE(sols.size() == 4);
        double r29 = std::sqrt(29.0);
        CHECK(sols[0].exists);
        CHECK(sols[0].metric.x[2].to_double() == doctest::Approx((15 + r29) / 14).epsilon(1e-14));
        CHECK(sols[1].exists);
        CHECK(sols[1].metric.x[2].to_double() == doctest::Approx((15 - r29) / 14).epsilon(1e-14));
        CHECK_FALSE(sols[2].exists);
        CHECK_FALSE(sols[3].exists);
        CHECK(sols[2].reason.find("T") != std::string::npos);
    }
    SUBCASE("W5 l=5 data: all four exist and are rational") {
        auto sols = solve_two_equal(Rational(3, 16), Rational(1, 8));
        REQUIRE(sols.size() == 4);
        CHECK(sols[0].metric.x[2].rational() == Rational(2));
        CHECK(sols[1].metric.x[2].rational() == Rational(6, 5));
        CHECK(sols[2].metric.x[0].rational() == Rational(11, 5));
        CHECK(sols[3].metric.x[0].rational() == Rational(5, 11));
        for (const auto& s : sols) CHECK(s.residual <= 1e-12);
        // Kaehler q+ and p+ have an exact zero in the spectrum
        CHECK(sols[0].closed_form_tt[0].is_zero());
        CHECK(sols[2].closed_form_tt[0].is_zero());
        CHECK(sols[2].closed_form_tt[1].rational() == Rational(85, 88));
        // 2rho values
        CHECK(sols[0].two_rho_value.rational() == Rational(5, 8));
        CHECK(sols[1].two_rho_value.rational() == Rational(31, 40));
    }
    SUBCASE("W6 data: only the p pair exists") {
        auto sols = solve_two_equal(Rational(1, 4), Rational(1, 6));
        CHECK_FALSE(sols[0].exists);
        CHECK_FALSE(sols[1].exists);
        CHECK(sols[0].reason.find("radicand") != std::string::npos);
        CHECK(sols[2].metric.x[0].rational() == Rational(5, 3));
        CHECK(sols[3].metric.x[0].rational() == Rational(3, 5));
        CHECK(sols[2].two_rho_value.rational() == Rational(3, 5));
        CHECK(sols[3].two_rho_value.rational() == Rational(1));
    }
    SUBCASE("Stiefel data: single q metric") {
        long long k = 3;
        auto sols = solve_two_equal(Rational(1, 2 * k), Rational(1, 2));
        CHECK(sols[0].exists);
        CHECK(sols[0].metric.x[2].rational() == Rational(2 * k, k + 1));
        CHECK_FALSE(sols[1].exists);
        CHECK_FALSE(sols[2].exists);
    }
    SUBCASE("root relations: p+ p- = 1 and q+ q- = (1-2c)/(b+c)") {
        for (auto [b, c] : {std::pair<Rational, Rational>{Rational(3, 16), Rational(1, 8)},
                            {Rational(1, 4), Rational(1, 6)},
                            {Rational(5, 18), Rational(1, 9)},
                            {Rational(1, 5), Rational(4, 15)},
                            {Rational(1, 6), Rational(1, 12)}}) {
            auto sols = solve_two_equal(b, c);
            if (sols[2].exists) {
                double prod = sols[2].metric.x[0].to_double() * sols[3].metric.x[0].to_double();
                CHECK(prod == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(sols[2].metric.x[0].to_double() > 1.0);
            }
            if (sols[0].exists && sols[1].exists) {
                double prod = sols[0].metric.x[2].to_double() * sols[1].metric.x[2].to_double();
                double expected = ((Rational(1) - Rational(2) * c) / (b + c)).to_double();
                CHECK(prod == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("pairwise-distinct SU(k+l+m) closed forms") {
    auto sols = solve_w2_general(1, 2, 3);
    REQUIRE(sols.size() == 4);
    CHECK(sols[0].label == "g_0");
    CHECK(sols[0].metric.x[0].rational() == Rational(5));
    CHECK(sols[0].metric.x[1].rational() == Rational(4));
    CHECK(sols[0].metric.x[2].rational() == Rational(3));
    CHECK(sols[0].two_rho_value.rational() == Rational(1, 5));
    double r5 = std::sqrt(5.0);
    CHECK(sols[0].closed_form_tt[0].to_double() == doctest::Approx((7 - r5) / 60).epsilon(1e-14));
    CHECK(sols[0].closed_form_tt[1].to_double() == doctest::Approx((7 + r5) / 60).epsilon(1e-14));
    for (int i = 1; i < 4; ++i) {
        CHECK(sols[i].two_rho_value.rational() == Rational(1, 6));
        CHECK(sols[i].residual <= 1e-14);
        CHECK(sols[i].closed_form_tt[0].is_zero());
    }
    CHECK(sols[1].metric.x[0].rational() == Rational(7));

    // the closed-form lambda_max values match the machinery
    auto desc = wallach_descriptor(WallachFamily::W2, {1, 2, 3});
    for (int i = 1; i < 4; ++i) {
        auto v = classify(desc, sols[i].metric);
        CHECK(v.tt.back() ==
              doctest::Approx(sols[i].closed_form_tt[1].to_double()).epsilon(1e-12));
        CHECK(std::fabs(v.tt.front()) <= 1e-12);
    }

    CHECK_THROWS_AS((void)solve_w2_general(1, 1, 2), std::invalid_argument);
}

TEST_CASE("quartic solver for SU(2l)/U(l)") {
    for (long long l : {2, 3, 5}) {
        auto sols = solve_w4_quartic(l);
        REQUIRE(sols.size() == 2);
        auto desc = wallach_descriptor(WallachFamily::W4, {l});
        for (const auto& s : sols) {
            CHECK(s.residual <= 1e-10);
            CHECK(s.metric.x[0].to_double() == 1.0);
            CHECK(s.metric.x[1].to_double() > 0);
            CHECK(s.metric.x[2].to_double() > 0);
            auto v = classify(desc, s.metric);
            CHECK(v.kind == StabilityKind::Saddle);
        }
        CHECK(sols[0].metric.x[2].to_double() < sols[1].metric.x[2].to_double());
    }
}

TEST_CASE("two-summand flag closed forms") {
    SUBCASE("(4,1): non-Kaehler metric is (1, 2/3)") {
        auto sols = solve_flag_r2(4, 1);
        REQUIRE(sols.size() == 2);
        CHECK(sols[0].metric.x[1].rational() == Rational(2));
        CHECK(sols[1].metric.x[1].rational() == Rational(2, 3));
        CHECK(sols[0].residual <= 1e-14);
        CHECK(sols[1].residual <= 1e-14);
    }
    SUBCASE("verdicts across a small sweep") {
        auto desc = flag_r2_descriptor(7, 5);
        auto sols = solve_flag_r2(7, 5);
        CHECK(classify(desc, sols[0].metric).kind == StabilityKind::GStable);
        CHECK(classify(desc, sols[1].metric).kind == StabilityKind::LocalMinimum);
        // closed-form lambda matches machinery
        auto v0 = classify(desc, sols[0].metric);
        CHECK(v0.tt.front() ==
              doctest::Approx(sols[0].closed_form_tt[0].to_double()).epsilon(1e-12));
    }
}

TEST_CASE("numeric multistart solver") {
    SUBCASE("equal dims: recovers all four closed-form metrics up to gauge") {
        auto desc = wallach_descriptor(WallachFamily::W2, {2, 2, 2});
        auto numeric = solve_numeric(desc);
        REQUIRE(numeric.size() == 4);
        // gauge-normalized closed forms: (1,1,1), (1,1/2,1/2), (1,2,1), (1,1,2)
        auto expect = std::vector<std::vector<double>>{
            {1, 0.5, 0.5}, {1, 1, 1}, {1, 1, 2}, {1, 2, 1}};
        for (const auto& e : expect) {
            double best = 1e9;
            for (const auto& s : numeric) {
                auto got = s.metric.to_doubles();
                double dev = 0;
                for (int k = 0; k < 3; ++k) dev = std::max(dev, std::fabs(got[k] - e[k]));
                best = std::min(best, dev);
            }
            CHECK(best <= 1e-8);
        }
        for (const auto& s : numeric) CHECK(s.residual <= 1e-10);
    }
    SUBCASE("no constants: the single round gauge representative") {
        SpaceDescriptor flat;
        flat.r = 3;
        flat.name = "flat";
        flat.dims = {2, 3, 4};
        flat.killing = {Scalar(1), Scalar(1), Scalar(1)};
        flat.constants = StructureConstants(3);
        auto numeric = solve_numeric(flat);
        REQUIRE(numeric.size() == 1);
        for (int k = 0; k < 3; ++k)
            CHECK(numeric[0].metric.x[k].to_double() == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("grid size guard") {
        auto desc = full_flag_sun_descriptor(5);
        CHECK_THROWS_AS((void)solve_numeric(desc), std::invalid_argument);
    }
}

TEST_CASE("prescribed-Ricci curve") {
    SUBCASE("t=1 is the Kaehler-Einstein metric (1,1,2)") {
        auto g = kahler_ricci_curve(1.0);
        CHECK(g.x[0].to_double() == doctest::Approx(1.0));
        CHECK(g.x[1].to_double() == doctest::Approx(1.0));
        CHECK(g.x[2].to_double() == doctest::Approx(2.0));
    }
    SUBCASE("x3 = x1 + x2 and constant volume along the curve") {
        for (double t : {0.5, 1.3, 2.0, 3.7}) {
            auto g = kahler_ricci_curve(t);
            auto x = g.to_doubles();
            CHECK(x[2] == doctest::Approx(x[0] + x[1]).epsilon(1e-14));
            CHECK(x[0] * x[1] * x[2] == doctest::Approx(2.0).epsilon(1e-13));
        }
    }
    SUBCASE("Ricci components stay fixed along the curve") {
        auto desc = wallach_descriptor(WallachFamily::W2, {1, 1, 1});
        auto base = ricci_eigenvalues(desc, kahler_ricci_curve(1.0));
        std::vector<double> ref(3);
        auto g1 = kahler_ricci_curve(1.0).to_doubles();
        for (int k = 0; k < 3; ++k) ref[k] = g1[k] * base[k].to_double();
        for (double t : {1.5, 2.0, 3.0}) {
            auto g = kahler_ricci_curve(t);
            auto rho = ricci_eigenvalues(desc, g);
            auto x = g.to_doubles();
            for (int k = 0; k < 3; ++k)
                CHECK(x[k] * rho[k].to_double() == doctest::Approx(ref[k]).epsilon(1e-12));
        }
    }
    SUBCASE("level set characterization: equal Ricci iff x3 = x1 + x2") {
        auto desc = wallach_descriptor(WallachFamily::W2, {1, 1, 1});
        auto ric_of = [&](const std::vector<double>& x) {
            auto rho = ricci_eigenvalues(desc, DiagonalMetric::from_doubles(x));
            return std::vector<double>{x[0] * rho[0].to_double(), x[1] * rho[1].to_double(),
                                       x[2] * rho[2].to_double()};
        };
        auto ref = ric_of({1, 1, 2});
        for (double x1 : {0.5, 1.0, 1.7})
            for (double x2 : {0.8, 1.0, 2.3}) {
                auto on = ric_of({x1, x2, x1 + x2});
                for (int k = 0; k < 3; ++k) CHECK(on[k] == doctest::Approx(ref[k]).epsilon(1e-12));
                auto off = ric_of({x1, x2, x1 + x2 + 0.25});
                double dev = 0;
                for (int k = 0; k < 3; ++k) dev = std::max(dev, std::fabs(off[k] - ref[k]));
                CHECK(dev > 1e-6);
            }
    }
    CHECK_THROWS_AS((void)kahler_ricci_curve(0.0), std::invalid_argument);
}

TEST_CASE("solve_space dispatches closed forms and permutes frames") {
    SUBCASE("two-equal parameters out of frame order") {
        // W2:1,2,2 puts the distinct summand first; solutions must be valid
        // for the descriptor ordering
        auto desc = resolve_space("W2:1,2,2");
        auto sols = solve_space("W2:1,2,2", "auto");
        int existing = 0;
        for (const auto& s : sols)
            if (s.exists) {
                ++existing;
                CHECK(einstein_residual(desc, s.metric) <= 1e-10);
            }
        CHECK(existing == 4);
    }
    SUBCASE("numeric agrees with the permuted closed forms") {
        auto desc = resolve_space("W2:1,2,2");
        auto closed = solve_space("W2:1,2,2", "auto");
        auto numeric = solve_numeric(desc);
        CHECK(numeric.size() == 4);
        for (const auto& n : numeric) {
            double best = 1e9;
            for (const auto& c : closed) {
                if (!c.exists) continue;
                // compare up to scale: normalize both to x1 = 1
                double scale = c.metric.x[0].to_double();
                double dev = 0;
                for (int k = 0; k < 3; ++k)
                    dev = std::max(dev, std::fabs(c.metric.x[k].to_double() / scale -
                                                  n.metric.x[k].to_double()));
                best = std::min(best, dev);
            }
            CHECK(best <= 1e-8);
        }
    }
    SUBCASE("unknown space") {
        CHECK_THROWS_AS((void)resolve_space("nosuch"), std::invalid_argument);
        CHECK_THROWS_AS((void)resolve_space("W2:1,1"), std::invalid_argument);
    }
}
