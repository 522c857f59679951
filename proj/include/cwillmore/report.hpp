#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "cwillmore/profile.hpp"
#include "cwillmore/quadrature.hpp"

namespace cwillmore {

/// All surface integrals the library needs, accumulated on one set of nodes.
struct SurfaceIntegrals {
    double area = 0.0;
    double willmore = 0.0;          // 1/4 int H^2
    double gauss = 0.0;             // int K
    double tracefree = 0.0;         // 1/2 int |A°|^2
    double normal_penalty = 0.0;    // 1/4 int |H_vec + 2 x_perp|^2
    double normal_deficit = 0.0;    // int (1 - |x_perp|^2)
    double area_defect_rhs = 0.0;   // -int (1 - (x.nu)^2 + |x_tan|^2 / 2) K
    double minkowski = 0.0;         // int H (x.nu)
};

inline SurfaceIntegrals surface_integrals(const RevolutionSurface& surface,
                                          const QuadTol& tol = {}) {
    auto f = [](const PointFrame& fr) {
        const double pn = fr.normal_projection;
        const double r2 = dot(fr.position, fr.position);
        // H_vec = -H nu and x_perp = (x.nu) nu, so |H_vec + 2 x_perp| = |2 x.nu - H|
        const double gap = 2.0 * pn - fr.mean;
        return std::array<double, 8>{
            1.0,
            0.25 * fr.mean * fr.mean,
            fr.gauss,
            0.5 * fr.tracefree_sq,
            0.25 * gap * gap,
            1.0 - pn * pn,
            -(1.0 - pn * pn + 0.5 * (r2 - pn * pn)) * fr.gauss,
            fr.mean * pn,
        };
    };
    const auto v = integrate<8>(surface, f, tol);
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

/// Residuals of the exact integral identities on one surface.
struct IdentityReport {
    double residual_first_variation = 0.0;
    double willmore_area_gap = 0.0;
    double residual_area_defect = 0.0;
    double residual_gauss_bonnet = 0.0;
    double residual_tracefree = 0.0;
    bool confined = false;
};

struct SurfaceReport {
    std::string label;
    double area = 0.0;
    double willmore = 0.0;
    double gauss_integral = 0.0;
    double tracefree_integral = 0.0;
    double max_radius = 0.0;
    bool confined = false;
    std::optional<IdentityReport> identities;
};

inline SurfaceReport make_report(const RevolutionSurface& surface, const SurfaceIntegrals& s) {
    SurfaceReport r;
    r.label = surface.label();
    r.area = s.area;
    r.willmore = s.willmore;
    r.gauss_integral = s.gauss;
    r.tracefree_integral = s.tracefree;
    r.max_radius = surface.max_radius();
    r.confined = r.max_radius <= 1.0 + kConfinementTol;
    return r;
}

inline SurfaceReport report(const RevolutionSurface& surface, const QuadTol& tol = {}) {
    return make_report(surface, surface_integrals(surface, tol));
}

}  // namespace cwillmore
