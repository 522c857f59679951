#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cwillmore/cwillmore.hpp"

using namespace cwillmore;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent closed forms of the standard bump and its derivatives.
struct Eta {
    double v, d1, d2;
};

Eta eta_oracle(double u) {
    if (std::abs(u) >= 1.0) return {0.0, 0.0, 0.0};
    const double w = 1.0 - u * u;
    const double e = std::exp(1.0 - 1.0 / w);
    const double d1 = e * (-2.0 * u / (w * w));
    const double d2 = e * (4.0 * u * u / (w * w * w * w) - 2.0 / (w * w) - 8.0 * u * u / (w * w * w));
    return {e, d1, d2};
}

// Surface element of the bump graph, with the cross term of the expansion
// of (r / sqrt(1 - r^2) + (t/s) eta')^2.
double g_oracle(double r, double s, double t) {
    const Eta e = eta_oracle(r / s);
    const double q2 = 1.0 - r * r;
    const double g2 = 1.0 / q2 + 2.0 * r / std::sqrt(q2) * (t / s) * e.d1 + (t * t) / (s * s) * e.d1 * e.d1;
    return std::sqrt(g2);
}

// Mean curvature of the bump graph from its expansion in r, s, t.
double h_oracle(double r, double s, double t) {
    const Eta e = eta_oracle(r / s);
    const double q2 = 1.0 - r * r;
    const double rhs = 2.0 * std::pow(q2, -1.5) + t / (s * s) * e.d2 + t / s / r * e.d1 +
                       3.0 * t / s * r / q2 * e.d1 + 3.0 * t * t / (s * s) / std::sqrt(q2) * e.d1 * e.d1 +
                       t * t * t / (s * s * s) / r * e.d1 * e.d1 * e.d1;
    const double g = g_oracle(r, s, t);
    return rhs / (g * g * g);
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace

TEST(Eta, ClosedFormValues) {
    EXPECT_DOUBLE_EQ(eta_std(0.0).value, 1.0);
    EXPECT_DOUBLE_EQ(eta_std(0.0).d1, 0.0);
    EXPECT_DOUBLE_EQ(eta_std(1.0).value, 0.0);
    EXPECT_DOUBLE_EQ(eta_std(-1.0).value, 0.0);
    EXPECT_NEAR(eta_std(0.5).value, std::exp(-1.0 / 3.0), 1e-15);
    EXPECT_NEAR(eta_std(0.5).value, 0.716531310573789, 1e-14);
}

TEST(Eta, DerivativesMatchOracle) {
    for (double u = -0.99; u < 1.0; u += 0.0137) {
        const Jet j = eta_std(u);
        const Eta o = eta_oracle(u);
        EXPECT_NEAR(j.value, o.v, 1e-14);
        EXPECT_NEAR(j.d1, o.d1, 1e-12 * std::max(1.0, std::abs(o.d1)));
        EXPECT_NEAR(j.d2, o.d2, 1e-11 * std::max(1.0, std::abs(o.d2)));
    }
}

TEST(EtaProperty, SymmetricAndDecreasing) {
    for (int i = 1; i < 1000; ++i) {
        const double u = i / 1000.0;
        EXPECT_LE(eta_std(u).d1, 0.0);
        EXPECT_DOUBLE_EQ(eta_std(u).value, eta_std(-u).value);
    }
}

TEST(AlphaStar, SimpsonOracle) {
    auto d1 = [](double u) { return eta_oracle(u).d1; };
    const int n = 100000;
    const double first = simpson([&](double r) { return r * r * d1(r); }, 0.0, 1.0, n);
    const double grad = simpson([&](double r) { return 0.5 * r * d1(r) * d1(r); }, 0.0, 1.0, n);
    const BumpConstants c = compute_bump_constants();
    EXPECT_NEAR(c.first_moment, first, 1e-10);
    EXPECT_NEAR(c.gradient_term, grad, 1e-10);
    EXPECT_NEAR(c.alpha_star, std::abs(first) / grad, 1e-9);
    EXPECT_LT(c.first_moment, 0.0);
}

TEST(AlphaStar, BracketSign) {
    const BumpConstants c = compute_bump_constants();
    EXPECT_GT(c.bracket(2.0 * c.alpha_star), 0.0);
    EXPECT_LT(c.bracket(0.5 * c.alpha_star), 0.0);
    EXPECT_NEAR(c.bracket(c.alpha_star), 0.0, 1e-12);
}

// Geometry of the graph segment reproduces the closed-form surface element
// and mean curvature on random admissible (r, s, t).
TEST(BumpProperty, GraphMatchesClosedForms) {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int k = 0; k < 100; ++k) {
        const double s = 0.02 + 0.28 * u01(rng);
        const double t = 0.9 * u01(rng) * max_bump_amplitude(s);
        const double r = s * (0.02 + 0.96 * u01(rng));
        const RevolutionSurface surf = build_bump_sphere(s, t / (s * s));
        const ProfileSegment& graph = surf.segments().at(2);
        ASSERT_TRUE(std::holds_alternative<GraphSegment>(graph));
        const PointFrame f = surf.frame(2, r);
        const double h = h_oracle(r, s, t);
        EXPECT_NEAR(f.mean, h, 1e-10 * std::max(1.0, std::abs(h))) << "r=" << r << " s=" << s << " t=" << t;
        EXPECT_NEAR(speed(graph, r), g_oracle(r, s, t), 1e-10) << "r=" << r << " s=" << s << " t=" << t;
    }
}

TEST(BumpSphere, ZeroAmplitudeIsTheUnitSphere) {
    const SurfaceReport b = report(build_bump_sphere(0.1, 0.0));
    const SurfaceReport s = report(make_sphere(1.0));
    EXPECT_NEAR(b.area, s.area, 1e-12);
    EXPECT_NEAR(b.willmore, s.willmore, 1e-12);
    EXPECT_NEAR(area_excess(0.1, 0.0), 0.0, 1e-10);
}

TEST(BumpSphere, PositiveExcessAndConfinement) {
    const double alpha = 2.0 * compute_alpha_star();
    const SurfaceReport r = report(build_bump_sphere(0.1, alpha));
    EXPECT_GT(r.area, 4.0 * kPi);
    EXPECT_TRUE(r.confined);
    EXPECT_GT(r.willmore, r.area);
    // the excess integrand is evaluated without cancellation; the full
    // surface quadrature agrees with it
    EXPECT_NEAR(r.area - 4.0 * kPi, area_excess(0.1, alpha), 1e-8);
}

TEST(BumpSphere, AsymptoticExcessRatio) {
    const BumpConstants c = compute_bump_constants();
    const double alpha = 2.0 * c.alpha_star;
    const double ratio = area_excess(0.02, alpha) / c.asymptotic_excess(0.02, alpha);
    EXPECT_NEAR(ratio, 1.0, 0.1);
}

TEST(BumpSphere, RejectsBadParameters) {
    EXPECT_THROW((void)build_bump_sphere(0.5, 1.0), DomainError);
    EXPECT_THROW((void)build_bump_sphere(0.2, 1e3), AmplitudeError);
    EXPECT_THROW((void)eta_by_name("nope"), DomainError);
}

TEST(BumpSweep, MonotoneExcessAndSquareRootSlope) {
    const double alpha = 2.0 * compute_alpha_star();
    const BumpSweep sw = sweep_bump(log_spaced(0.02, 0.2, 8), alpha);
    ASSERT_EQ(sw.rows.size(), 8u);
    for (std::size_t i = 0; i < sw.rows.size(); ++i) {
        const auto& row = sw.rows[i];
        EXPECT_GT(row.area_excess, 0.0);
        EXPECT_GE(row.willmore, row.area);
        EXPECT_GE(row.willmore, 4.0 * kPi);
        EXPECT_NEAR(row.willmore_excess, row.report.tracefree_integral, 1e-6);
        if (i) EXPECT_GT(row.area_excess, sw.rows[i - 1].area_excess);
    }
    EXPECT_NEAR(sw.fit.slope, 0.5, 0.05);
    EXPECT_GE(sw.fit.r_squared, 0.99);
}

TEST(BumpSweep, MeanCurvatureBoundedUniformly) {
    const double alpha = 2.0 * compute_alpha_star();
    double lo = 1e300, hi = 0.0, at_largest = 0.0;
    for (double s : {0.02, 0.05, 0.1, 0.2}) {
        const double h = max_abs_mean_curvature(build_bump_sphere(s, alpha));
        lo = std::min(lo, h);
        hi = std::max(hi, h);
        at_largest = h;
    }
    EXPECT_LE(hi, 1.05 * at_largest);
    EXPECT_LE((hi - lo) / hi, 0.05);
}

TEST(BumpForArea, HitsRequestedExcess) {
    const double alpha = 2.0 * compute_alpha_star();
    for (double excess : {1e-4, 1e-2, 0.3}) {
        const BumpForArea b = bump_for_excess(excess, alpha);
        EXPECT_NEAR(bump_area_excess_t(b.s, b.t), excess, 1e-9 * std::max(1.0, excess));
    }
    EXPECT_THROW((void)bump_for_excess(0.1 * 4.0 * kPi, alpha), RangeError);
}

TEST(LogLogFit, ExactPowerLaw) {
    const std::vector<double> x{1.0, 2.0, 4.0, 8.0};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::sqrt(v));
    const LogLogFit f = fit_log_log(x, y);
    EXPECT_NEAR(f.slope, 0.5, 1e-14);
    EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-13);
    EXPECT_NEAR(f.r_squared, 1.0, 1e-14);
    EXPECT_THROW((void)fit_log_log({1.0}, {1.0}), DomainError);
}
