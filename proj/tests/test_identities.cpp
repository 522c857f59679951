#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "cwillmore/cwillmore.hpp"

using namespace cwillmore;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<RevolutionSurface>& corpus() {
    static const std::vector<RevolutionSurface> all = [] {
        std::vector<RevolutionSurface> out = cwtest::construction_corpus();
        // short optimizer runs; only their geometry matters here
        ProbeConfig cfg;
        cfg.nodes = 120;
        cfg.max_iterations = 1200;
        std::vector<ProbeResult> probes;
        for (double a : {4.0 * kPi, 1.02 * 4.0 * kPi, 1.05 * 4.0 * kPi}) {
            probes.push_back(minimize(a, initial_profile(a, cfg.nodes), cfg));
        }
        for (auto& s : cwtest::probe_corpus(probes)) out.push_back(std::move(s));
        return out;
    }();
    return all;
}

}  // namespace

TEST(Identities, CorpusHasSeventeenSurfaces) { EXPECT_EQ(corpus().size(), 17u); }

TEST(Identities, UnitSphereExact) {
    const IdentityReport r = verify_all(make_sphere(1.0));
    EXPECT_LE(std::abs(r.residual_first_variation), 1e-9);
    EXPECT_LE(std::abs(r.residual_area_defect), 1e-9);
    EXPECT_LE(std::abs(r.residual_gauss_bonnet), 1e-9);
    EXPECT_LE(std::abs(r.residual_tracefree), 1e-9);
    EXPECT_NEAR(r.willmore_area_gap, 0.0, 1e-9);
}

TEST(Identities, HalfSphereByHand) {
    const RevolutionSurface s = make_sphere(0.5);
    // area - 4 pi = -(1 - rho^2) 4 pi
    EXPECT_NEAR(surface_integrals(s).area_defect_rhs, -3.0 * kPi, 1e-9);
    EXPECT_NEAR(willmore_area_gap(s), 3.0 * kPi, 1e-9);
    EXPECT_LE(std::abs(verify_area_defect(s)), 1e-9);
    EXPECT_LE(std::abs(verify_first_variation(s)), 1e-9);
}

TEST(Identities, GapRefusesUnconfinedSurface) {
    EXPECT_THROW((void)willmore_area_gap(make_sphere(0.5, 0.7)), NotConfined);
    // the divergence identity itself does not need confinement
    EXPECT_LE(std::abs(verify_first_variation(make_sphere(0.5, 0.7))), 1e-8);
}

TEST(Identities, OpenSurfaceRejected) {
    EXPECT_THROW((void)verify_all(build_sigma_plus(solve_neck(0.95))), DomainError);
}

TEST(Identities, BumpHasNegativeCurvatureRegion) {
    const RevolutionSurface s = build_bump_sphere(0.1, 2.0 * compute_alpha_star());
    EXPECT_GT(report(s).area - 4.0 * kPi, 0.0);
    double min_k = 1e300;
    for (double r = 0.001; r < 0.1; r += 0.001) min_k = std::min(min_k, s.frame(2, r).gauss);
    EXPECT_LT(min_k, 0.0);
    EXPECT_GT(willmore_area_gap(s), 0.0);
}

TEST(IdentitiesProperty, ResidualsOnCorpus) {
    for (const auto& s : corpus()) {
        const IdentityReport r = verify_all(s);
        EXPECT_LE(std::abs(r.residual_first_variation), 1e-6) << s.label();
        EXPECT_LE(std::abs(r.residual_area_defect), 1e-6) << s.label();
        EXPECT_LE(std::abs(r.residual_gauss_bonnet), 1e-6) << s.label();
        EXPECT_LE(std::abs(r.residual_tracefree), 1e-6) << s.label();
        EXPECT_LE(max_tracefree_pointwise_violation(s), 1e-12) << s.label();
    }
}

TEST(IdentitiesProperty, LowerBoundOnConfinedCorpus) {
    int confined = 0;
    for (const auto& s : corpus()) {
        const SurfaceReport rep = report(s);
        if (!rep.confined) continue;
        ++confined;
        const double gap = rep.willmore - rep.area;
        EXPECT_GE(gap, -1e-6) << s.label();
        const bool special = std::abs(rep.area - 4.0 * kPi) < 1e-3 || std::abs(rep.area - 8.0 * kPi) < 1e-3;
        if (!special) EXPECT_GE(gap, 1e-4) << s.label();
    }
    EXPECT_GE(confined, 14);
}

TEST(Identities, DilatedBump) {
    const RevolutionSurface s = build_bump_sphere(0.1, 2.0 * compute_alpha_star());
    const RevolutionSurface d = dilate(s, 0.9);
    const IdentityReport r = verify_all(d);
    EXPECT_LE(std::abs(r.residual_first_variation), 1e-6);
    EXPECT_LE(std::abs(r.residual_area_defect), 1e-6);
    EXPECT_NEAR(report(d).willmore, report(s).willmore, 1e-8);
}

TEST(Identities, ReportCarriesIdentities) {
    const SurfaceReport r = report_with_identities(make_sphere(0.9));
    ASSERT_TRUE(r.identities.has_value());
    EXPECT_TRUE(r.identities->confined);
    EXPECT_NEAR(r.identities->willmore_area_gap, 4.0 * kPi * (1.0 - 0.81), 1e-9);
}
