#pragma once

// Exact integral identities for closed surfaces of sphere type:
//   area = W - 1/4 int |H_vec + 2 x_perp|^2 - int (1 - |x_perp|^2)
//   area - 4 pi = -int (1 - (x.nu)^2 + |x_tan|^2 / 2) K
//   int K = 4 pi,  W - 4 pi = 1/2 int |A°|^2

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwillmore/errors.hpp"
#include "cwillmore/profile.hpp"
#include "cwillmore/quadrature.hpp"
#include "cwillmore/report.hpp"

namespace cwillmore {

namespace detail {

inline void require_closed(const RevolutionSurface& surface, const char* what) {
    if (!surface.is_closed()) {
        throw DomainError(std::string(what) + ": surface '" + surface.label() +
                          "' is not closed");
    }
}

inline IdentityReport identities_from(const SurfaceIntegrals& s, bool confined) {
    const double four_pi = 4.0 * std::numbers::pi;
    IdentityReport r;
    r.residual_first_variation = std::abs(s.area - (s.willmore - s.normal_penalty - s.normal_deficit));
    r.willmore_area_gap = s.willmore - s.area;
    r.residual_area_defect = std::abs((s.area - four_pi) - s.area_defect_rhs);
    r.residual_gauss_bonnet = s.gauss - four_pi;
    r.residual_tracefree = (s.willmore - four_pi) - s.tracefree;
    r.confined = confined;
    return r;
}

}  // namespace detail

inline double verify_first_variation(const RevolutionSurface& surface, const QuadTol& tol = {}) {
    detail::require_closed(surface, "verify_first_variation");
    return detail::identities_from(surface_integrals(surface, tol), false).residual_first_variation;
}

/// W - area; only meaningful (and only computed) for confined surfaces.
inline double willmore_area_gap(const RevolutionSurface& surface, const QuadTol& tol = {}) {
    detail::require_closed(surface, "willmore_area_gap");
    const double rmax = surface.max_radius();
    if (rmax > 1.0 + kConfinementTol) {
        throw NotConfined("willmore_area_gap: surface '" + surface.label() +
                          "' leaves the unit ball (max |p| = " + std::to_string(rmax) +
                          "); the bound W >= area is only claimed inside the ball");
    }
    const SurfaceIntegrals s = surface_integrals(surface, tol);
    return s.willmore - s.area;
}

inline double verify_area_defect(const RevolutionSurface& surface, const QuadTol& tol = {}) {
    detail::require_closed(surface, "verify_area_defect");
    return detail::identities_from(surface_integrals(surface, tol), false).residual_area_defect;
}

/// All identities from one quadrature pass. The gap is filled for unconfined
/// surfaces too; check `confined` before reading it as a bound.
inline IdentityReport verify_all(const RevolutionSurface& surface, const QuadTol& tol = {}) {
    detail::require_closed(surface, "verify_all");
    const bool confined = surface.max_radius() <= 1.0 + kConfinementTol;
    return detail::identities_from(surface_integrals(surface, tol), confined);
}

/// Report with the identity block filled in.
inline SurfaceReport report_with_identities(const RevolutionSurface& surface,
                                            const QuadTol& tol = {}) {
    const SurfaceIntegrals s = surface_integrals(surface, tol);
    SurfaceReport r = make_report(surface, s);
    if (surface.is_closed()) r.identities = detail::identities_from(s, r.confined);
    return r;
}

/// Largest relative violation of 2|A°|^2 = H^2 - 4K over `samples` points per
/// segment, scaled by max(1, k1^2 + k2^2).
inline double max_tracefree_pointwise_violation(const RevolutionSurface& surface,
                                                int samples = 200) {
    double worst = 0.0;
    for (std::size_t i = 0; i < surface.segments().size(); ++i) {
        const auto [a, b] = parameter_range(surface.segments()[i]);
        for (int k = 0; k <= samples; ++k) {
            const double t = a + (b - a) * k / samples;
            const PointFrame f = surface.frame(i, t, PoleMode::SymmetricLimit);
            const double lhs = 2.0 * f.tracefree_sq;
            const double rhs = f.mean * f.mean - 4.0 * f.gauss;
            const double scale = std::max(1.0, f.k1 * f.k1 + f.k2 * f.k2);
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    return worst;
}

}  // namespace cwillmore
