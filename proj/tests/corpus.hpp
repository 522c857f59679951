#pragma once

// Shared surface corpus for the identity tests and the acceptance run:
// four round spheres, five neck surfaces, five bump spheres and the spline
// fits of optimizer outputs supplied by the caller.

#include <string>
#include <vector>

#include "cwillmore/cwillmore.hpp"

namespace cwtest {

inline std::vector<cwillmore::RevolutionSurface> construction_corpus() {
    using namespace cwillmore;
    std::vector<RevolutionSurface> out;
    for (double rho : {0.3, 0.5, 0.9, 1.0}) {
        out.push_back(make_sphere(rho, 0.0, "sphere rho=" + std::to_string(rho)));
    }
    for (double r : {0.9, 0.95, 0.99}) {
        out.push_back(build_neck_shell(solve_neck(r)).relabeled("neck shell r=" + std::to_string(r)));
    }
    for (double r : {0.999, 0.9995}) out.push_back(build_double_sphere(r).surface);
    const double alpha = 2.0 * compute_alpha_star();
    for (double s : {0.03, 0.06, 0.1, 0.15, 0.2}) out.push_back(build_bump_sphere(s, alpha));
    return out;
}

inline std::vector<cwillmore::RevolutionSurface> probe_corpus(
    const std::vector<cwillmore::ProbeResult>& results) {
    std::vector<cwillmore::RevolutionSurface> out;
    for (const auto& r : results) {
        out.push_back(cwillmore::spline_surface(
            r.profile, "probe spline a=" + cwillmore::format_number(r.target_area)));
    }
    return out;
}

}  // namespace cwtest
