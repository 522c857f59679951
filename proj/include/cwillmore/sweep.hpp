#pragma once

// Two-sided bounds on the least Willmore energy w(a) at area a in the unit ball:
// w(a) >= a, and upper bounds from explicit surfaces (bump spheres near 4 pi,
// dilated neck shells and tuned double spheres below 8 pi). w is
// nondecreasing in a (shrink a surface of larger area), so every upper bound
// also bounds w at smaller areas; the envelope takes that minimum.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cwillmore/bump.hpp"
#include "cwillmore/neck.hpp"
#include "cwillmore/report.hpp"

namespace cwillmore {

struct SweepRow {
    double a = 0.0;
    double lower_bound = 0.0;
    std::optional<double> upper_neck;
    std::optional<double> upper_bump;
    std::optional<double> w_probe;
    double upper_envelope = std::numeric_limits<double>::infinity();
    std::string source;  // construction attaining upper_envelope
};

struct SweepTable {
    std::vector<SweepRow> rows;
    // least squares of upper_bump - 4 pi against sqrt(a - 4 pi)
    double sqrt_fit_slope = std::numeric_limits<double>::quiet_NaN();
    double sqrt_fit_intercept = std::numeric_limits<double>::quiet_NaN();
    double sqrt_fit_r_squared = std::numeric_limits<double>::quiet_NaN();
};

/// Willmore energy of the bump sphere with area a (alpha = 2 alpha*, s pinned
/// at s_max when needed); empty when the family cannot reach a.
inline std::optional<double> upper_bump(double a, const std::string& eta = "std_bump") {
    const double four_pi = 4.0 * std::numbers::pi;
    if (a <= four_pi) return four_pi;
    try {
        const BumpForArea b = bump_for_excess(a - four_pi, 2.0 * compute_alpha_star(eta), eta);
        std::vector<ProfileSegment> segs{ArcSegment{{0.0, 0.0}, 1.0, -std::numbers::pi / 2.0, 0.0}};
        for (auto& seg : bumped_hemisphere(1.0, +1, b.s, b.t, eta)) segs.push_back(std::move(seg));
        return report(RevolutionSurface::closed("bump", std::move(segs))).willmore;
    } catch (const RangeError&) {
        return std::nullopt;
    }
}

struct NeckUpperTable {
    struct Entry {
        double area;
        double willmore;
        std::string label;
    };
    std::vector<Entry> entries;  // sorted by area
};

/// Neck shells at a ladder of radii plus tuned double spheres; each one
/// dilated down bounds w at every smaller area.
inline NeckUpperTable neck_upper_table() {
    NeckUpperTable t;
    for (double r : {0.9, 0.95, 0.99, 0.995, 0.999, 0.9995, 0.9999}) {
        const SurfaceReport rep = report(build_neck_shell(solve_neck(r)));
        t.entries.push_back({rep.area, rep.willmore, "neck shell r=" + std::to_string(r)});
    }
    for (double r : {0.999, 0.9995, 0.9999}) {
        try {
            const SurfaceReport rep = report(build_double_sphere(r).surface);
            t.entries.push_back({rep.area, rep.willmore, "double sphere r=" + std::to_string(r)});
        } catch (const Error&) {
        }
    }
    std::sort(t.entries.begin(), t.entries.end(),
              [](const auto& x, const auto& y) { return x.area < y.area; });
    return t;
}

inline std::optional<double> upper_neck(double a, const NeckUpperTable& table,
                                        std::string* label = nullptr) {
    std::optional<double> best;
    for (const auto& e : table.entries) {
        if (e.area + 1e-9 >= a && (!best || e.willmore < *best)) {
            best = e.willmore;
            if (label) *label = e.label;
        }
    }
    return best;
}

/// Bounds on w(a) over `steps` equally spaced areas in [a_min, a_max].
inline SweepTable sweep_bounds(double a_min, double a_max, int steps,
                               const std::string& eta = "std_bump") {
    if (!(a_min > 0.0 && a_max >= a_min && steps >= 1)) {
        throw DomainError("sweep_bounds: need 0 < a_min <= a_max and steps >= 1");
    }
    const NeckUpperTable necks = neck_upper_table();
    SweepTable table;
    for (int i = 0; i < steps; ++i) {
        SweepRow row;
        row.a = steps == 1 ? a_min : a_min + (a_max - a_min) * i / (steps - 1);
        row.lower_bound = row.a;
        std::string neck_label;
        row.upper_neck = upper_neck(row.a, necks, &neck_label);
        row.upper_bump = upper_bump(row.a, eta);
        if (row.upper_bump) {
            row.upper_envelope = *row.upper_bump;
            row.source = row.a <= 4.0 * std::numbers::pi ? "sphere" : "bump";
        }
        if (row.upper_neck && *row.upper_neck < row.upper_envelope) {
            row.upper_envelope = *row.upper_neck;
            row.source = neck_label;
        }
        table.rows.push_back(row);
    }
    // monotone envelope: w(a) <= w(a') for a <= a'
    for (std::size_t i = table.rows.size(); i-- > 1;) {
        SweepRow& lo = table.rows[i - 1];
        const SweepRow& hi = table.rows[i];
        if (hi.upper_envelope < lo.upper_envelope) {
            lo.upper_envelope = hi.upper_envelope;
            lo.source = hi.source + " (envelope)";
        }
    }

    std::vector<double> xs, ys;
    for (const SweepRow& r : table.rows) {
        if (r.upper_bump && r.a > 4.0 * std::numbers::pi) {
            xs.push_back(std::sqrt(r.a - 4.0 * std::numbers::pi));
            ys.push_back(*r.upper_bump - 4.0 * std::numbers::pi);
        }
    }
    if (xs.size() >= 2) {
        const double n = static_cast<double>(xs.size());
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i] / n;
            my += ys[i] / n;
        }
        double sxx = 0, sxy = 0, syy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
            syy += (ys[i] - my) * (ys[i] - my);
        }
        table.sqrt_fit_slope = sxy / sxx;
        table.sqrt_fit_intercept = my - table.sqrt_fit_slope * mx;
        table.sqrt_fit_r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    }
    return table;
}

/// Best construction bound at a: the bump sphere of area a, or a neck surface
/// of at least that area shrunk to a.
inline double construction_upper_bound(double a, const std::string& eta = "std_bump") {
    const NeckUpperTable necks = neck_upper_table();
    double best = std::numeric_limits<double>::infinity();
    if (auto b = upper_bump(a, eta)) best = *b;
    if (auto n = upper_neck(a, necks)) best = std::min(best, *n);
    return best;
}

}  // namespace cwillmore
