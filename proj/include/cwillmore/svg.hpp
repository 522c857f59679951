#pragma once

// Minimal SVG output: profile curves inside the unit disk and the w(a) bound
// plot. Coordinates are written with format_number, so files are
// byte-for-byte reproducible.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cwillmore/polyline.hpp"
#include "cwillmore/serialize.hpp"

namespace cwillmore {

namespace detail {

inline std::string svg_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Viewport {
    double x0, x1, y0, y1;  // data range
    double width = 640, height = 480, margin = 50;

    double px(double x) const { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); }
    double py(double y) const { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); }
};

inline std::string svg_polyline(const Viewport& v, const std::vector<Point2>& pts,
                                const std::string& style) {
    std::ostringstream os;
    os << "<polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << format_number(v.px(pts[i].x)) << ',' << format_number(v.py(pts[i].y));
    }
    os << "\"/>\n";
    return os.str();
}

inline std::string svg_open(const Viewport& v) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << v.width << "\" height=\""
       << v.height << "\" viewBox=\"0 0 " << v.width << ' ' << v.height << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return os.str();
}

inline std::string svg_text(double x, double y, const std::string& s, int size = 14) {
    std::ostringstream os;
    os << "<text x=\"" << format_number(x) << "\" y=\"" << format_number(y)
       << "\" font-family=\"sans-serif\" font-size=\"" << size << "\">" << svg_escape(s)
       << "</text>\n";
    return os.str();
}

}  // namespace detail

/// Profile points and their mirror image, with the unit circle for reference.
inline std::string profile_svg(const std::vector<Point2>& profile, const std::string& title) {
    detail::Viewport v{-1.1, 1.1, -1.1, 1.1, 560, 560, 30};
    std::ostringstream os;
    os << detail::svg_open(v);
    std::vector<Point2> circle;
    for (int k = 0; k <= 360; ++k) {
        const double th = 2.0 * std::numbers::pi * k / 360;
        circle.push_back({std::cos(th), std::sin(th)});
    }
    os << detail::svg_polyline(v, circle, "stroke=\"#999\" stroke-dasharray=\"4 3\"");
    os << detail::svg_polyline(v, {{0.0, -1.1}, {0.0, 1.1}}, "stroke=\"#ccc\"");
    std::vector<Point2> mirrored;
    for (Point2 p : profile) mirrored.push_back({-p.x, p.y});
    os << detail::svg_polyline(v, profile, "stroke=\"#1f4e9c\" stroke-width=\"1.5\"");
    os << detail::svg_polyline(v, mirrored, "stroke=\"#1f4e9c\" stroke-opacity=\"0.35\"");
    os << detail::svg_text(10, 20, title);
    os << "</svg>\n";
    return os.str();
}

inline std::string profile_svg(const RevolutionSurface& s) {
    return profile_svg(sample_profile(s, 400), s.label());
}

/// Lower bound W = a, construction bounds, probe values and the fitted
/// 4 pi + c0 + c1 sqrt(a - 4 pi) curve.
inline std::string sweep_svg(const SweepTable& t) {
    if (t.rows.empty()) return profile_svg(std::vector<Point2>{}, "empty sweep");
    const double four_pi = 4.0 * std::numbers::pi;
    double a0 = t.rows.front().a, a1 = t.rows.back().a;
    if (a1 <= a0) a1 = a0 + 1.0;
    double w0 = std::numeric_limits<double>::infinity(), w1 = -w0;
    auto see = [&](double w) {
        if (std::isfinite(w)) {
            w0 = std::min(w0, w);
            w1 = std::max(w1, w);
        }
    };
    for (const auto& r : t.rows) {
        see(r.lower_bound);
        see(r.upper_envelope);
        if (r.upper_bump) see(*r.upper_bump);
        if (r.upper_neck) see(*r.upper_neck);
        if (r.w_probe) see(*r.w_probe);
    }
    if (!(w1 > w0)) w1 = w0 + 1.0;
    const double pad = 0.05 * (w1 - w0);
    detail::Viewport v{a0, a1, w0 - pad, w1 + pad};
    std::ostringstream os;
    os << detail::svg_open(v);
    os << detail::svg_polyline(v, {{a0, w0 - pad}, {a1, w0 - pad}}, "stroke=\"black\"");
    os << detail::svg_polyline(v, {{a0, w0 - pad}, {a0, w1 + pad}}, "stroke=\"black\"");

    std::vector<Point2> lower, env, bump, neck;
    for (const auto& r : t.rows) {
        lower.push_back({r.a, r.lower_bound});
        if (std::isfinite(r.upper_envelope)) env.push_back({r.a, r.upper_envelope});
        if (r.upper_bump) bump.push_back({r.a, *r.upper_bump});
        if (r.upper_neck) neck.push_back({r.a, *r.upper_neck});
    }
    os << detail::svg_polyline(v, lower, "stroke=\"#2a7d2a\" stroke-width=\"1.5\"");
    os << detail::svg_polyline(v, bump, "stroke=\"#c0392b\" stroke-dasharray=\"5 3\"");
    os << detail::svg_polyline(v, neck, "stroke=\"#8e44ad\" stroke-dasharray=\"2 2\"");
    os << detail::svg_polyline(v, env, "stroke=\"#1f4e9c\" stroke-width=\"2\"");
    if (std::isfinite(t.sqrt_fit_slope)) {
        std::vector<Point2> fit;
        for (int k = 0; k <= 200; ++k) {
            const double a = a0 + (a1 - a0) * k / 200;
            if (a < four_pi) continue;
            fit.push_back({a, four_pi + t.sqrt_fit_intercept + t.sqrt_fit_slope * std::sqrt(a - four_pi)});
        }
        os << detail::svg_polyline(v, fit, "stroke=\"#e67e22\" stroke-opacity=\"0.7\"");
    }
    for (const auto& r : t.rows) {
        if (!r.w_probe) continue;
        os << "<circle cx=\"" << format_number(v.px(r.a)) << "\" cy=\""
           << format_number(v.py(*r.w_probe)) << "\" r=\"3\" fill=\"black\"/>\n";
    }
    os << detail::svg_text(60, 20, "W bounds against area a");
    os << detail::svg_text(60, 38, "green: W = a   blue: envelope   red: bump   purple: neck", 11);
    os << detail::svg_text(v.margin, v.height - 15, "a = " + format_number(a0), 11);
    os << detail::svg_text(v.width - v.margin - 80, v.height - 15, "a = " + format_number(a1), 11);
    os << "</svg>\n";
    return os.str();
}

}  // namespace cwillmore
