#pragma once

// Sphere - catenoid - sphere neck joining the unit sphere to a concentric
// sphere of radius r, and the closed surfaces of area 4 pi k built from it.
//
// Profile of the upper half (in chain order, starting at (1, 0)):
//   unit circle 0 -> beta, circle of radius r1 about (x1, y1) over a quarter
//   turn, catenary neck (both branches), circle of radius r from pi/2 - beta
//   down to (r, 0).

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cwillmore/bump.hpp"
#include "cwillmore/errors.hpp"
#include "cwillmore/polyline.hpp"
#include "cwillmore/profile.hpp"
#include "cwillmore/report.hpp"

namespace cwillmore {

inline constexpr double kNeckRadiusMin = 0.5;

struct NeckSolution {
    double r = 1.0;
    double r1 = 1.0;
    double beta = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;
    double x0 = 0.0;
    double y0 = 1.0;
    double lambda = 0.0;
    double residual = 0.0;
};

struct NeckEnergies {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    double area_plus = 0.0;
    double willmore_plus = 0.0;
};

namespace detail {

// sin^2(beta) * arccosh(1 / sin(beta)), continuous at beta = 0
inline double neck_log_term(double beta) {
    if (beta <= 1e-12) return 0.0;
    const double s = std::sin(beta);
    return s * s * std::acosh(1.0 / s);
}

}  // namespace detail

inline std::array<double, 2> eval_F(double r, double r1, double beta) {
    const double c = std::cos(beta), s = std::sin(beta);
    return {r * c + 2.0 * r * detail::neck_log_term(beta) - r1 * c - (1.0 - r1) * s,
            (r + r1) * s - (1.0 - r1) * c};
}

/// d F / d (r1, beta), row-major.
inline std::array<double, 4> neck_jacobian(double r, double r1, double beta) {
    const double c = std::cos(beta), s = std::sin(beta);
    // d/d beta [sin^2 arccosh(1/sin)] = 2 sin cos arccosh(1/sin) - sin
    const double dlog = beta <= 1e-12 ? 0.0 : 2.0 * s * c * std::acosh(1.0 / s) - s;
    return {-c + s, -r * s + 2.0 * r * dlog + r1 * s - (1.0 - r1) * c,
            s + c, (r + r1) * c + (1.0 - r1) * s};
}

inline NeckSolution complete_neck(double r, double r1, double beta) {
    NeckSolution sol;
    sol.r = r;
    sol.r1 = r1;
    sol.beta = beta;
    sol.x1 = (1.0 - r1) * std::cos(beta);
    sol.y1 = (1.0 - r1) * std::sin(beta);
    sol.x0 = r * std::sin(beta);
    sol.lambda = sol.x0 * std::sin(beta);
    sol.y0 = 0.5 * (sol.y1 + (r + r1) * std::cos(beta));
    const auto f = eval_F(r, r1, beta);
    sol.residual = std::hypot(f[0], f[1]);
    return sol;
}

namespace detail {

inline std::array<double, 2> newton_neck(double r, double r1, double beta) {
    constexpr int kMaxIter = 50;
    auto fnorm = [r](double a, double b) {
        const auto f = eval_F(r, a, b);
        return std::hypot(f[0], f[1]);
    };
    double res = fnorm(r1, beta);
    for (int it = 0; it < kMaxIter; ++it) {
        if (res <= 1e-14) return {r1, beta};
        const auto f = eval_F(r, r1, beta);
        const auto j = neck_jacobian(r, r1, beta);
        const double det = j[0] * j[3] - j[1] * j[2];
        if (det == 0.0) break;
        const double d1 = (j[3] * f[0] - j[1] * f[1]) / det;
        const double d2 = (-j[2] * f[0] + j[0] * f[1]) / det;
        double step = 1.0;
        double next = res;
        double a = r1, b = beta;
        for (int k = 0; k < 30; ++k) {
            a = r1 - step * d1;
            b = beta - step * d2;
            if (b > 0.0 && b < std::numbers::pi / 2.0) {
                next = fnorm(a, b);
                if (next < res || next <= 1e-14) break;
            }
            step *= 0.5;
        }
        const bool stalled = a == r1 && b == beta;
        r1 = a;
        beta = b;
        res = next;
        if (stalled) break;
    }
    if (res <= 1e-12) return {r1, beta};
    throw SolverError("neck Newton iteration did not converge at r = " + std::to_string(r) +
                      " (last iterate r1 = " + std::to_string(r1) +
                      ", beta = " + std::to_string(beta) + ", |F| = " + std::to_string(res) + ")");
}

}  // namespace detail

/// Solves F(r, r1, beta) = 0 for r in (0.5, 1) and fills the derived data.
inline NeckSolution solve_neck(double r) {
    if (!(r > kNeckRadiusMin && r < 1.0)) {
        throw DomainError("solve_neck: r must lie in (0.5, 1), got " + std::to_string(r));
    }
    std::array<double, 2> x{};
    if (r >= 0.99) {
        // linearization r1'(1) = 1, beta'(1) = -1/2
        x = detail::newton_neck(r, r, 0.5 * (1.0 - r));
    } else {
        double station = 0.999;
        x = detail::newton_neck(station, station, 0.5 * (1.0 - station));
        while (station > r) {
            const double next = std::max(r, station - 0.01);
            x = detail::newton_neck(next, x[0], x[1]);
            station = next;
        }
    }
    NeckSolution sol = complete_neck(r, x[0], x[1]);
    if (!(sol.r1 > 0.0 && sol.r1 < 1.0 && sol.beta > 0.0 && sol.beta < std::numbers::pi / 2.0)) {
        throw DomainError("solve_neck: solution leaves 0 < r1 < 1, 0 < beta < pi/2");
    }
    const auto j = neck_jacobian(r, sol.r1, sol.beta);
    if (j[0] * j[3] - j[1] * j[2] == 0.0) throw SolverError("solve_neck: singular Jacobian");
    return sol;
}

inline double neck_jacobian_determinant(const NeckSolution& sol) {
    const auto j = neck_jacobian(sol.r, sol.r1, sol.beta);
    return j[0] * j[3] - j[1] * j[2];
}

inline NeckEnergies closed_form_energies(const NeckSolution& sol) {
    const double pi = std::numbers::pi;
    const double r = sol.r, r1 = sol.r1;
    const double c = std::cos(sol.beta), s = std::sin(sol.beta);
    NeckEnergies e;
    e.a1 = 2.0 * pi * s;
    e.a2 = 2.0 * pi * (r1 * (1.0 - r1) * (pi / 2.0) * c + r1 * r1 * (c - s));
    e.a3 = 2.0 * pi * (r * r * s * s * c + r * r * s * s * detail::neck_log_term(sol.beta));
    e.a4 = 2.0 * pi * r * r * c;
    e.area_plus = e.a1 + e.a2 + e.a3 + e.a4;
    e.willmore_plus = pi * pi * ((1.0 - r1) / r1) * c + 4.0 * pi * c;
    return e;
}

/// Closed-form energies at the degenerate solution r = r1 = 1, beta = 0.
inline NeckEnergies closed_form_energies_at_one() {
    return closed_form_energies(complete_neck(1.0, 1.0, 0.0));
}

/// The five profile pieces of the upper half, from (1, 0) to (r, 0).
inline std::vector<ProfileSegment> sigma_plus_segments(const NeckSolution& sol) {
    const double pi = std::numbers::pi;
    const double u_top = std::acosh(sol.x0 / sol.lambda);
    std::vector<ProfileSegment> segs;
    segs.push_back(ArcSegment{{0.0, 0.0}, 1.0, 0.0, sol.beta});
    segs.push_back(ArcSegment{{sol.x1, sol.y1}, sol.r1, sol.beta, sol.beta + pi / 2.0});
    segs.push_back(CatenarySegment{sol.lambda, sol.y0, +1, u_top, 0.0});
    segs.push_back(CatenarySegment{sol.lambda, sol.y0, -1, 0.0, u_top});
    segs.push_back(ArcSegment{{0.0, 0.0}, sol.r, pi / 2.0 - sol.beta, 0.0});
    return segs;
}

/// Upper half of the construction; a surface with two boundary circles.
inline RevolutionSurface build_sigma_plus(const NeckSolution& sol) {
    return RevolutionSurface::open("sigma_plus r=" + std::to_string(sol.r),
                                   sigma_plus_segments(sol));
}

/// Sigma_+ closed by the lower unit hemisphere and the lower hemisphere of S_r
/// (no area tuning).
inline RevolutionSurface build_neck_shell(const NeckSolution& sol) {
    const double h = std::numbers::pi / 2.0;
    std::vector<ProfileSegment> segs;
    segs.push_back(ArcSegment{{0.0, 0.0}, 1.0, -h, 0.0});
    for (auto& s : sigma_plus_segments(sol)) segs.push_back(std::move(s));
    segs.push_back(ArcSegment{{0.0, 0.0}, sol.r, 0.0, -h});
    return RevolutionSurface::closed("neck_shell r=" + std::to_string(sol.r), std::move(segs));
}

namespace detail {

inline ProfileSegment reflect_vertically(const ProfileSegment& seg) {
    return std::visit(
        [](const auto& s) -> ProfileSegment {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ArcSegment>) {
                return ArcSegment{{s.center.x, -s.center.y}, s.radius, -s.theta_begin,
                                  -s.theta_end};
            } else if constexpr (std::is_same_v<T, CatenarySegment>) {
                return CatenarySegment{s.lambda, -s.y0, -s.branch, s.u_begin, s.u_end};
            } else if constexpr (std::is_same_v<T, GraphSegment>) {
                GraphSegment g = s;
                auto inner = s.height;
                g.height = [inner](double x) {
                    const Jet h = inner(x);
                    return Jet{-h.value, -h.d1, -h.d2};
                };
                if (g.bump) {
                    g.bump->sign = -g.bump->sign;
                    g.bump->y_offset = -g.bump->y_offset;
                }
                return g;
            } else {
                std::vector<Point2> pts;
                for (Point2 p : s.spline.points()) pts.push_back({p.x, -p.y});
                return SplineSegment{PeriodicSpline(pts), s.t_begin, s.t_end};
            }
        },
        seg);
}

}  // namespace detail

/// Result of an area-tuned nested construction.
struct NestedSurface {
    RevolutionSurface surface;
    NeckSolution neck;
    double bump_scale = 0.0;
    double bump_amplitude = 0.0;
    double untuned_area = 0.0;
    double target_area = 0.0;
};

namespace detail {

// Area of the inward bump of scale s and amplitude t on a sphere of radius R,
// over the cap it replaces.
inline double scaled_bump_excess(double R, double s, double t, const std::string& eta) {
    return R * R * bump_area_excess_t(s, t, eta);
}

// Chooses the bump scale so that the tuned amplitude ratio t / s^2 sits near
// 1.5 alpha*, where the Willmore cost per unit of added area is smallest at
// leading order.
inline double bump_scale_for_deficit(double R, double deficit, const std::string& eta) {
    const BumpConstants c = compute_bump_constants(eta);
    const double alpha = 1.5 * c.alpha_star;
    const double per_s4 = R * R * 2.0 * std::numbers::pi * alpha * c.bracket(alpha);
    const double s = std::pow(deficit / per_s4, 0.25);
    return std::clamp(s, 1e-3, kBumpScaleMax);
}

inline double tune_bump_amplitude(double R, double s, double deficit, const std::string& eta) {
    const double t_max = max_bump_amplitude(s, eta) * (1.0 - 1e-9);
    auto excess = [&](double t) { return scaled_bump_excess(R, s, t, eta) - deficit; };
    double hi = 2.0 * compute_alpha_star(eta) * s * s;
    while (excess(hi) < 0.0) {
        if (hi >= t_max) {
            throw RangeError("area target unreachable: bump of scale s = " + std::to_string(s) +
                             " cannot add area " + std::to_string(deficit) +
                             "; use a larger bump scale s or r closer to 1");
        }
        hi = std::min(2.0 * hi, t_max);
    }
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = excess(mid);
        if (std::abs(f) <= 1e-12 || hi - lo <= 1e-16) return mid;
        (f < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// k nested spheres of radii r^i joined by k - 1 necks (alternating north and
/// south poles), the innermost sphere carrying an inward bump at its free pole
/// whose amplitude is tuned so that the total area equals `target_area`.
inline NestedSurface nested_family(int k, double r, double target_area = -1.0,
                                   const std::string& eta = "std_bump") {
    if (k < 2 || k > 4) throw DomainError("nested_family: k must be 2, 3 or 4");
    if (target_area <= 0.0) target_area = 4.0 * std::numbers::pi * k;
    const NeckSolution sol = solve_neck(r);
    const double h = std::numbers::pi / 2.0;

    std::vector<ProfileSegment> segs;
    segs.push_back(ArcSegment{{0.0, 0.0}, 1.0, -h, 0.0});
    double R = 1.0;
    for (int i = 0; i + 1 < k; ++i) {
        for (const auto& s : sigma_plus_segments(sol)) {
            ProfileSegment scaled = dilate(s, R);
            segs.push_back(i % 2 == 0 ? scaled : detail::reflect_vertically(scaled));
        }
        R *= r;
    }
    const int free_pole = ((k - 2) % 2 == 0) ? -1 : +1;

    // area with the innermost hemisphere left round
    std::vector<ProfileSegment> untuned = segs;
    untuned.push_back(ArcSegment{{0.0, 0.0}, R, 0.0, free_pole * h});
    const RevolutionSurface base = RevolutionSurface::closed("untuned", untuned);
    const double base_area = report(base).area;
    const double deficit = target_area - base_area;
    if (!(deficit > 0.0)) {
        throw RangeError("nested_family: untuned area already exceeds the target");
    }
    const double s = detail::bump_scale_for_deficit(R, deficit, eta);
    const double t = detail::tune_bump_amplitude(R, s, deficit, eta);
    for (auto& seg : bumped_hemisphere(R, free_pole, s, t, eta)) segs.push_back(std::move(seg));

    std::string label = (k == 2 ? "double_sphere" : "nested k=" + std::to_string(k)) +
                        " r=" + std::to_string(r);
    NestedSurface out{RevolutionSurface::closed(label, std::move(segs)), sol, s, t, base_area,
                      target_area};
    if (polyline_self_intersects(sample_profile(out.surface, 64))) {
        throw ConstructionError("nested_family: necks interfere (profile self-intersects)");
    }
    return out;
}

/// Sigma_+ plus the lower unit hemisphere and the lower hemisphere of S_r with
/// an inward bump sized so that the total area is `target_area`.
inline NestedSurface build_double_sphere(double r, double target_area = 8.0 * std::numbers::pi,
                                         const std::string& eta = "std_bump") {
    return nested_family(2, r, target_area, eta);
}

}  // namespace cwillmore
