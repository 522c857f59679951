#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cwillmore/profile.hpp"

namespace cwillmore {

namespace detail {

// Proper crossing of segments ab and cd (touching does not count).
inline bool edges_cross(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace detail

/// True if two non-adjacent edges of the polyline cross. Edges are bucketed
/// by midpoint on a grid of the longest edge length.
inline bool polyline_self_intersects(const std::vector<Point2>& p) {
    if (p.size() < 4) return false;
    const std::size_t m = p.size() - 1;
    double h = 0.0;
    for (std::size_t e = 0; e < m; ++e) h = std::max(h, norm(p[e + 1] - p[e]));
    if (h == 0.0) return true;
    auto key = [h](Point2 q) {
        const auto ix = static_cast<std::int64_t>(std::floor(q.x / h));
        const auto iy = static_cast<std::int64_t>(std::floor(q.y / h));
        return (ix * 73856093) ^ (iy * 19349663);
    };
    std::unordered_map<std::int64_t, std::vector<std::size_t>> grid;
    grid.reserve(2 * m);
    for (std::size_t e = 0; e < m; ++e) grid[key(0.5 * (p[e] + p[e + 1]))].push_back(e);
    for (std::size_t e = 0; e < m; ++e) {
        const Point2 mid = 0.5 * (p[e] + p[e + 1]);
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                const Point2 probe{mid.x + dx * h, mid.y + dy * h};
                auto it = grid.find(key(probe));
                if (it == grid.end()) continue;
                for (std::size_t f : it->second) {
                    if (f <= e + 1) continue;
                    // hash collisions are harmless: the crossing test is exact
                    if (detail::edges_cross(p[e], p[e + 1], p[f], p[f + 1])) return true;
                }
            }
        }
    }
    return false;
}

/// Points along the profile, `per_segment` intervals per segment.
inline std::vector<Point2> sample_profile(const RevolutionSurface& surface, int per_segment) {
    std::vector<Point2> pts;
    for (const auto& seg : surface.segments()) {
        const auto [a, b] = parameter_range(seg);
        for (int k = pts.empty() ? 0 : 1; k <= per_segment; ++k) {
            pts.push_back(position(seg, a + (b - a) * k / per_segment));
        }
    }
    return pts;
}

}  // namespace cwillmore
