#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cwillmore/cwillmore.hpp"

using namespace cwillmore;

namespace {

constexpr double kPi = std::numbers::pi;

// Eliminate r1 through the second equation, (r + r1) sin b = (1 - r1) cos b,
// then bisect the first on the smallest sign change in beta.
struct Bisected {
    double r1, beta;
};

double r1_from_beta(double r, double b) {
    return (std::cos(b) - r * std::sin(b)) / (std::sin(b) + std::cos(b));
}

double reduced_f1(double r, double b) {
    const double r1 = r1_from_beta(r, b);
    const double sb = std::sin(b), cb = std::cos(b);
    return r * cb + 2.0 * r * sb * sb * std::acosh(1.0 / sb) - r1 * cb - (1.0 - r1) * sb;
}

Bisected bisect_neck(double r) {
    double lo = 1e-12, hi = lo;
    const double step = 1e-4;
    double flo = reduced_f1(r, lo);
    while (true) {
        hi = lo + step;
        const double fhi = reduced_f1(r, hi);
        if ((flo < 0) != (fhi < 0)) break;
        lo = hi;
        flo = fhi;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((reduced_f1(r, mid) < 0) == (flo < 0)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double b = 0.5 * (lo + hi);
    return {r1_from_beta(r, b), b};
}

// Willmore energy of Sigma_+ piece by piece: H = 2 on the unit-sphere cap,
// H = 2/r on the inner cap, H = 0 on the catenoid, and on the torus piece
// H = 1/r1 + cos(theta)/x, integrated by Simpson's rule.
double willmore_oracle(const NeckSolution& n) {
    const NeckEnergies e = closed_form_energies(n);
    const int m = 20000;
    const double a = n.beta, b = n.beta + kPi / 2.0, h = (b - a) / m;
    double sum = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double th = a + i * h;
        const double x = n.x1 + n.r1 * std::cos(th);
        const double H = 1.0 / n.r1 + std::cos(th) / x;
        const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * 0.25 * H * H * 2.0 * kPi * x * n.r1;
    }
    return e.a1 + e.a4 / (n.r * n.r) + sum * h / 3.0;
}

}  // namespace

TEST(NeckSystem, TrivialRootAndNonRoot) {
    const auto f0 = eval_F(1.0, 1.0, 0.0);
    EXPECT_DOUBLE_EQ(f0[0], 0.0);
    EXPECT_DOUBLE_EQ(f0[1], 0.0);
    const auto f1 = eval_F(1.0, 1.0, 0.1);
    EXPECT_GT(std::abs(f1[0]) + std::abs(f1[1]), 1e-3);
}

TEST(NeckSystem, SecondEquationIsTangentCondition) {
    for (double r : {0.6, 0.8, 0.95}) {
        for (double r1 : {0.2, 0.5, 0.9}) {
            const double b = std::atan((1.0 - r1) / (r + r1));
            EXPECT_NEAR(eval_F(r, r1, b)[1], 0.0, 1e-15);
        }
    }
}

TEST(NeckSystem, JacobianMatchesFiniteDifferences) {
    const double r = 0.9, r1 = 0.8, b = 0.1, h = 1e-7;
    const auto J = neck_jacobian(r, r1, b);
    const auto fr1p = eval_F(r, r1 + h, b), fr1m = eval_F(r, r1 - h, b);
    const auto fbp = eval_F(r, r1, b + h), fbm = eval_F(r, r1, b - h);
    EXPECT_NEAR(J[0], (fr1p[0] - fr1m[0]) / (2 * h), 1e-6);
    EXPECT_NEAR(J[1], (fbp[0] - fbm[0]) / (2 * h), 1e-6);
    EXPECT_NEAR(J[2], (fr1p[1] - fr1m[1]) / (2 * h), 1e-6);
    EXPECT_NEAR(J[3], (fbp[1] - fbm[1]) / (2 * h), 1e-6);
}

TEST(SolveNeck, MatchesBisectionOracle) {
    for (double r : {0.6, 0.9, 0.95, 0.99}) {
        const NeckSolution n = solve_neck(r);
        const Bisected o = bisect_neck(r);
        EXPECT_NEAR(n.beta, o.beta, 1e-10) << "r=" << r;
        EXPECT_NEAR(n.r1, o.r1, 1e-10) << "r=" << r;
    }
}

TEST(SolveNeckProperty, Invariants) {
    for (double r = 0.55; r < 0.9999; r += 0.0371) {
        const NeckSolution n = solve_neck(r);
        EXPECT_LE(n.residual, 1e-12);
        EXPECT_GT(n.r1, 0.0);
        EXPECT_LT(n.r1, 1.0);
        EXPECT_GT(n.beta, 0.0);
        EXPECT_LT(n.beta, kPi / 2.0);
        EXPECT_NEAR(n.x1, (1.0 - n.r1) * std::cos(n.beta), 1e-12);
        EXPECT_NEAR(n.y1, (1.0 - n.r1) * std::sin(n.beta), 1e-12);
        EXPECT_NEAR(n.x0, r * std::sin(n.beta), 1e-12);
        EXPECT_NEAR(n.lambda, n.x0 * std::sin(n.beta), 1e-12);
        EXPECT_NEAR(n.y0, 0.5 * (n.y1 + (r + n.r1) * std::cos(n.beta)), 1e-12);
        EXPECT_GT(std::abs(neck_jacobian_determinant(n)), 0.0);
    }
}

TEST(SolveNeck, Domain) {
    EXPECT_THROW((void)solve_neck(1.0), DomainError);
    EXPECT_THROW((void)solve_neck(0.4), DomainError);
}

TEST(SolveNeck, Linearization) {
    const double h = 1e-6;
    const NeckSolution n = solve_neck(1.0 - h);
    EXPECT_NEAR((1.0 - n.r1) / h, 1.0, 0.01);
    EXPECT_NEAR(n.beta / (0.5 * h), 1.0, 0.01);
}

TEST(SolveNeck, LimitGeometry) {
    const NeckSolution n = solve_neck(1.0 - 1e-5);
    EXPECT_LE(std::abs(n.x0) + std::abs(1.0 - n.y0) + n.lambda, 1e-2);
}

TEST(SigmaPlus, ChainIsConfinedAndC1) {
    for (double r : {0.9, 0.95, 0.99, 0.999}) {
        const RevolutionSurface s = build_sigma_plus(solve_neck(r));
        const auto [pos, tan] = s.junction_gaps();
        EXPECT_LE(pos, kPositionTol);
        EXPECT_LE(tan, kTangentTol);
        EXPECT_LE(s.max_radius(), 1.0 + 1e-9);
        EXPECT_FALSE(s.is_closed());
    }
}

TEST(SigmaPlus, AreaMatchesClosedForm) {
    for (double r : {0.9, 0.95, 0.99}) {
        const NeckSolution n = solve_neck(r);
        const NeckEnergies e = closed_form_energies(n);
        EXPECT_NEAR(e.area_plus, e.a1 + e.a2 + e.a3 + e.a4, 0.0);
        EXPECT_GT(std::min({e.a1, e.a2, e.a3, e.a4}), 0.0);
        EXPECT_NEAR(report(build_sigma_plus(n)).area / e.area_plus, 1.0, 1e-8) << "r=" << r;
    }
}

// The quadrature energy of the assembled chain agrees with a piecewise oracle
// that treats the small arc as the torus piece it is.
TEST(SigmaPlus, WillmoreMatchesPiecewiseOracle) {
    for (double r : {0.9, 0.95, 0.99}) {
        const NeckSolution n = solve_neck(r);
        EXPECT_NEAR(report(build_sigma_plus(n)).willmore / willmore_oracle(n), 1.0, 1e-8) << "r=" << r;
    }
}

TEST(SigmaPlus, ConfinedEnergyExceedsArea) {
    for (double r : {0.9, 0.95, 0.99, 0.999}) {
        const SurfaceReport rep = report(build_neck_shell(solve_neck(r)));
        EXPECT_TRUE(rep.confined);
        EXPECT_GE(rep.willmore, rep.area) << "r=" << r;
    }
}

TEST(ClosedForm, LimitAtOne) {
    const NeckEnergies e = closed_form_energies(solve_neck(1.0 - 1e-6));
    EXPECT_NEAR(e.area_plus, 4.0 * kPi, 1e-4);
    const NeckEnergies e1 = closed_form_energies_at_one();
    EXPECT_NEAR(e1.area_plus, 4.0 * kPi, 1e-14);
    EXPECT_NEAR(e1.willmore_plus, 4.0 * kPi, 1e-14);
}

TEST(ClosedForm, WillmoreSlopeAtOne) {
    const double h = 1e-5;
    const double d = (closed_form_energies_at_one().willmore_plus -
                      closed_form_energies(solve_neck(1.0 - h)).willmore_plus) / h;
    EXPECT_NEAR(d / (-kPi * kPi), 1.0, 1e-3);
}

// Independent slope of the closed-form area: each piece differentiated with
// r1' = 1, beta' = -1/2 at r = 1 gives 2 pi (4 - pi/2).
TEST(ClosedForm, AreaSlopeAtOneFromLinearization) {
    const double h = 1e-6;
    const double d = (closed_form_energies_at_one().area_plus -
                      closed_form_energies(solve_neck(1.0 - h)).area_plus) / h;
    EXPECT_NEAR(d / (2.0 * kPi * (4.0 - kPi / 2.0)), 1.0, 1e-3);
}

TEST(DoubleSphere, AreaTunedAndClosed) {
    const NestedSurface d = build_double_sphere(0.999);
    const SurfaceReport r = report(d.surface);
    EXPECT_NEAR(r.area, 8.0 * kPi, 1e-9);
    EXPECT_TRUE(r.confined);
    EXPECT_TRUE(d.surface.is_closed());
    EXPECT_NEAR(r.gauss_integral, 4.0 * kPi, 1e-6);
    EXPECT_GE(r.willmore, 8.0 * kPi);
}

TEST(DoubleSphere, EnergyDecreasesTowardsOne) {
    double prev = 1e300;
    for (double r : {0.999, 0.9995, 0.9999}) {
        const double w = report(build_double_sphere(r).surface).willmore;
        EXPECT_LT(w, prev + 1e-6) << "r=" << r;
        EXPECT_GT(w, 8.0 * kPi);
        prev = w;
    }
}

TEST(DoubleSphere, KEqualsTwoDelegates) {
    const SurfaceReport a = report(nested_family(2, 0.999).surface);
    const SurfaceReport b = report(build_double_sphere(0.999).surface);
    EXPECT_EQ(a.area, b.area);
    EXPECT_EQ(a.willmore, b.willmore);
}

TEST(Nested, ThreeSpheresAreaTuned) {
    const NestedSurface n = nested_family(3, 0.999);
    const SurfaceReport r = report(n.surface);
    EXPECT_NEAR(r.area, 12.0 * kPi, 1e-6);
    EXPECT_TRUE(r.confined);
    EXPECT_NEAR(r.gauss_integral, 4.0 * kPi, 1e-6);
    EXPECT_THROW((void)nested_family(5, 0.999), DomainError);
}
