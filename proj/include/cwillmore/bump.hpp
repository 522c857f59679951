#pragma once

// Inward bump family on the unit sphere: the north cap over the disk of radius
// s is replaced by the graph of psi(r) = sqrt(1 - r^2) - t eta(r / s), with the
// amplitude tied to the support as t = alpha s^2.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "cwillmore/errors.hpp"
#include "cwillmore/profile.hpp"
#include "cwillmore/quadrature.hpp"
#include "cwillmore/report.hpp"

namespace cwillmore {

inline constexpr double kBumpScaleMax = 0.3;

/// exp(1 - 1/(1 - u^2)) on (-1, 1), zero outside; eta(0) = 1.
inline Jet eta_std(double u) {
    if (std::abs(u) >= 1.0) return {};
    const double q = 1.0 - u * u;
    const double e = std::exp(1.0 - 1.0 / q);
    if (e == 0.0) return {};
    // log eta = 1 - 1/q, (log eta)' = -2u/q^2, (log eta)'' = -2/q^2 - 8u^2/q^3
    const double g1 = -2.0 * u / (q * q);
    const double g2 = -2.0 / (q * q) - 8.0 * u * u / (q * q * q);
    return {e, e * g1, e * (g1 * g1 + g2)};
}

/// (1 - u^2)^4 on (-1, 1): C3 at the support edge.
inline Jet eta_poly4(double u) {
    if (std::abs(u) >= 1.0) return {};
    const double q = 1.0 - u * u;
    return {q * q * q * q, -8.0 * u * q * q * q, -8.0 * q * q * q + 48.0 * u * u * q * q};
}

inline std::function<Jet(double)> eta_by_name(const std::string& name) {
    if (name == "std_bump") return eta_std;
    if (name == "poly4") return eta_poly4;
    throw DomainError("unknown bump profile '" + name + "'");
}

/// eta-dependent constants of the leading-order area expansion.
struct BumpConstants {
    double first_moment = 0.0;    // int_0^1 rho^2 eta'(rho) d rho  (< 0)
    double gradient_term = 0.0;   // int_0^1 rho/2 eta'(rho)^2 d rho
    double alpha_star = 0.0;      // ratio where the leading area bracket vanishes

    /// Bracket int (rho^2 eta' + alpha rho/2 eta'^2); positive iff alpha > alpha_star.
    double bracket(double alpha) const { return first_moment + alpha * gradient_term; }
    /// a(s) - 4 pi ~ 2 pi alpha s^4 C(eta) with C(eta) = bracket(alpha).
    double asymptotic_excess(double s, double alpha) const {
        return 2.0 * std::numbers::pi * alpha * std::pow(s, 4) * bracket(alpha);
    }
};

inline BumpConstants compute_bump_constants(const std::string& eta_name = "std_bump") {
    const auto eta = eta_by_name(eta_name);
    QuadTol tol;
    tol.abs = tol.rel = 1e-13;
    BumpConstants c;
    c.first_moment = integrate_scalar([&](double u) { return u * u * eta(u).d1; }, 0.0, 1.0, tol);
    c.gradient_term = integrate_scalar(
        [&](double u) {
            const double d = eta(u).d1;
            return 0.5 * u * d * d;
        },
        0.0, 1.0, tol);
    c.alpha_star = -c.first_moment / c.gradient_term;
    return c;
}

inline double compute_alpha_star(const std::string& eta_name = "std_bump") {
    return compute_bump_constants(eta_name).alpha_star;
}

/// Jet of psi(r) = sqrt(1 - r^2) - t eta(r/s) on the unit sphere.
inline Jet bump_psi(double r, double s, double t, const std::function<Jet(double)>& eta) {
    const double q2 = 1.0 - r * r;
    const double q = std::sqrt(q2);
    const Jet e = eta(r / s);
    return {q - t * e.value, -r / q - t / s * e.d1, -1.0 / (q2 * q) - t / (s * s) * e.d2};
}

/// Largest amplitude t keeping psi > 0 on a fine grid of [0, s].
inline double max_bump_amplitude(double s, const std::string& eta_name = "std_bump") {
    const auto eta = eta_by_name(eta_name);
    double best = std::numeric_limits<double>::infinity();
    constexpr int kGrid = 4000;
    for (int i = 0; i <= kGrid; ++i) {
        const double r = s * i / kGrid;
        const double e = eta(r / s).value;
        if (e > 0.0) best = std::min(best, std::sqrt(1.0 - r * r) / e);
    }
    return best;
}

/// Graph segment y(x) = y_offset + sign * scale * psi(x / scale).
inline GraphSegment make_bump_graph(const BumpGraphParams& p, double x_begin, double x_end) {
    auto eta = eta_by_name(p.eta);
    GraphSegment g;
    const double s = p.s, t = p.t, R = p.scale, y0 = p.y_offset, sg = p.sign;
    g.height = [eta, s, t, R, y0, sg](double x) {
        const Jet psi = bump_psi(x / R, s, t, eta);
        return Jet{y0 + sg * R * psi.value, sg * psi.d1, sg * psi.d2 / R};
    };
    g.x_begin = x_begin;
    g.x_end = x_end;
    g.bump = p;
    return g;
}

inline void check_bump_parameters(double s, double t, const std::string& eta_name) {
    if (!(s > 0.0 && s <= kBumpScaleMax + 1e-15)) {
        throw DomainError("bump scale s must lie in (0, " + std::to_string(kBumpScaleMax) + "]");
    }
    if (!(t >= 0.0)) throw AmplitudeError("bump amplitude must be non-negative");
    if (t > 0.0 && !(t < max_bump_amplitude(s, eta_name))) {
        throw AmplitudeError("bump amplitude t = " + std::to_string(t) +
                             " makes psi non-positive (surface no longer embedded)");
    }
}

/// Chain pieces of a sphere of radius R (centred at the origin) from the
/// equator point (R, 0) to the pole carrying an inward bump. `pole` is +1 for
/// the north pole (counter-clockwise traversal) and -1 for the south pole
/// (clockwise traversal).
inline std::vector<ProfileSegment> bumped_hemisphere(double R, int pole, double s, double t,
                                                     const std::string& eta_name) {
    check_bump_parameters(s, t, eta_name);
    const double edge = std::acos(s);
    BumpGraphParams p;
    p.s = s;
    p.t = t;
    p.eta = eta_name;
    p.scale = R;
    p.y_offset = 0.0;
    p.sign = pole >= 0 ? +1 : -1;
    std::vector<ProfileSegment> out;
    out.push_back(ArcSegment{{0.0, 0.0}, R, 0.0, p.sign * edge});
    out.push_back(make_bump_graph(p, R * s, 0.0));
    return out;
}

/// Unit sphere with an inward bump of support s and amplitude t = alpha s^2.
inline RevolutionSurface build_bump_sphere(double s, double alpha,
                                           const std::string& eta_name = "std_bump") {
    const double t = alpha * s * s;
    std::vector<ProfileSegment> segs;
    segs.push_back(ArcSegment{{0.0, 0.0}, 1.0, -std::numbers::pi / 2.0, 0.0});
    for (auto& seg : bumped_hemisphere(1.0, +1, s, t, eta_name)) segs.push_back(std::move(seg));
    return RevolutionSurface::closed("bump s=" + std::to_string(s) + " alpha=" +
                                         std::to_string(alpha),
                                     std::move(segs));
}

/// Area gained by the bump over the spherical cap it replaces, for a sphere of
/// unit radius: 2 pi int_0^s r (g - 1/sqrt(1-r^2)) dr without cancellation.
inline double bump_area_excess_t(double s, double t, const std::string& eta_name = "std_bump",
                                 const QuadTol& tol = {}) {
    const auto eta = eta_by_name(eta_name);
    const double tau = t / s;
    auto f = [&](double r) {
        const double q = std::sqrt(1.0 - r * r);
        const double e = eta(r / s).d1;
        const double g = std::sqrt(1.0 + (r / q + tau * e) * (r / q + tau * e));
        const double diff = 2.0 * r / q * tau * e + tau * tau * e * e;  // g^2 - 1/q^2
        return 2.0 * std::numbers::pi * r * diff / (g + 1.0 / q);
    };
    QuadTol fine = tol;
    fine.abs = std::min(tol.abs, 1e-14);
    return integrate_scalar(f, 0.0, s, fine);
}

inline double area_excess(double s, double alpha, const std::string& eta_name = "std_bump") {
    return bump_area_excess_t(s, alpha * s * s, eta_name);
}

/// Bump parameters giving area 4 pi + excess. Searches s along t = alpha s^2;
/// past s_max the scale is pinned at s_max and t alone is tuned.
struct BumpForArea {
    double s = 0.0;
    double t = 0.0;
};

inline BumpForArea bump_for_excess(double excess, double alpha,
                                   const std::string& eta_name = "std_bump") {
    if (!(excess > 0.0)) throw DomainError("bump_for_excess: excess must be positive");
    auto bisect = [](auto f, double lo, double hi) {
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            (f(mid) < 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    const double s_max = kBumpScaleMax;
    if (area_excess(s_max, alpha, eta_name) >= excess) {
        const double s = bisect([&](double s) { return area_excess(s, alpha, eta_name) - excess; },
                                1e-4, s_max);
        return {s, alpha * s * s};
    }
    const double t_lo = alpha * s_max * s_max;
    const double t_hi = max_bump_amplitude(s_max, eta_name) * (1.0 - 1e-9);
    if (bump_area_excess_t(s_max, t_hi, eta_name) < excess) {
        throw RangeError("bump family cannot add area " + std::to_string(excess) +
                         " at s <= " + std::to_string(s_max));
    }
    const double t = bisect(
        [&](double t) { return bump_area_excess_t(s_max, t, eta_name) - excess; }, t_lo, t_hi);
    return {s_max, t};
}

/// Largest |H| sampled over all segments (pole limit on the axis).
inline double max_abs_mean_curvature(const RevolutionSurface& surface, int samples = 2000) {
    double best = 0.0;
    for (std::size_t i = 0; i < surface.segments().size(); ++i) {
        const auto [a, b] = parameter_range(surface.segments()[i]);
        for (int k = 0; k <= samples; ++k) {
            const double t = a + (b - a) * k / samples;
            best = std::max(best, std::abs(surface.frame(i, t, PoleMode::SymmetricLimit).mean));
        }
    }
    return best;
}

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Least-squares line through (log x, log y).
inline LogLogFit fit_log_log(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw DomainError("log-log fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0 && y[i] > 0.0)) throw DomainError("log-log fit needs positive data");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
    }
    const double dn = static_cast<double>(n);
    const double cov = sxy - sx * sy / dn;
    const double vx = sxx - sx * sx / dn;
    const double vy = syy - sy * sy / dn;
    LogLogFit fit;
    fit.slope = cov / vx;
    fit.intercept = (sy - fit.slope * sx) / dn;
    fit.r_squared = vy > 0.0 ? cov * cov / (vx * vy) : 1.0;
    return fit;
}

struct BumpSweepRow {
    double s = 0.0;
    double t = 0.0;
    double area = 0.0;
    double area_excess = 0.0;
    double willmore = 0.0;
    double willmore_excess = 0.0;
    double slope_partial = 0.0;  // local log-log slope to the neighbouring row
    SurfaceReport report;
};

struct BumpSweep {
    std::vector<BumpSweepRow> rows;
    LogLogFit fit;  // log(W - 4 pi) against log(a - 4 pi)
};

/// `count` log-spaced values in [lo, hi].
inline std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        out.push_back(lo * std::pow(hi / lo, f));
    }
    return out;
}

inline BumpSweep sweep_bump(const std::vector<double>& s_list, double alpha,
                            const std::string& eta_name = "std_bump") {
    BumpSweep out;
    std::vector<double> s_sorted = s_list;
    std::sort(s_sorted.begin(), s_sorted.end());
    for (double s : s_sorted) {
        const RevolutionSurface surf = build_bump_sphere(s, alpha, eta_name);
        BumpSweepRow row;
        row.s = s;
        row.t = alpha * s * s;
        row.report = report(surf);
        row.area = row.report.area;
        row.area_excess = area_excess(s, alpha, eta_name);
        row.willmore = row.report.willmore;
        // equal to W - 4 pi by Gauss-Bonnet, but free of cancellation
        row.willmore_excess = row.report.tracefree_integral;
        out.rows.push_back(std::move(row));
    }
    const std::size_t n = out.rows.size();
    for (std::size_t i = 0; i < n && n >= 2; ++i) {
        const std::size_t a = (i == 0) ? 0 : i - 1;
        const std::size_t b = (i == 0) ? 1 : i;
        const auto& ra = out.rows[a];
        const auto& rb = out.rows[b];
        if (ra.area_excess > 0 && rb.area_excess > 0 && ra.willmore_excess > 0 &&
            rb.willmore_excess > 0) {
            out.rows[i].slope_partial = std::log(rb.willmore_excess / ra.willmore_excess) /
                                        std::log(rb.area_excess / ra.area_excess);
        }
    }
    if (n >= 2) {
        std::vector<double> xs, ys;
        for (const auto& r : out.rows) {
            xs.push_back(r.area_excess);
            ys.push_back(r.willmore_excess);
        }
        out.fit = fit_log_log(xs, ys);
    }
    return out;
}

}  // namespace cwillmore
