#pragma once

// Piecewise generating curves in the (x, y) half-plane and the surfaces of
// revolution they sweep out about the y-axis.
//
// Every segment is traversed from its `begin` to its `end` parameter. The
// outward normal is the right-hand normal of the traversal direction, so a
// chain running counter-clockwise around the enclosed region (unit circle from
// the south pole to the north pole, say) has the outward normal and H = +2 on
// the unit sphere. Principal curvatures are eigenvalues of d(nu).

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cwillmore/errors.hpp"
#include "cwillmore/spline.hpp"

namespace cwillmore {

inline constexpr double kPositionTol = 1e-10;
inline constexpr double kTangentTol = 1e-8;
inline constexpr double kConfinementTol = 1e-9;

/// Circle arc: center + radius * (cos theta, sin theta).
struct ArcSegment {
    Point2 center;
    double radius = 1.0;
    double theta_begin = 0.0;
    double theta_end = 0.0;
};

/// Catenary (lambda cosh u, y0 + branch * lambda * u).
struct CatenarySegment {
    double lambda = 1.0;
    double y0 = 0.0;
    int branch = +1;
    double u_begin = 0.0;
    double u_end = 0.0;
};

/// Serializable description of a graph segment built from the bump family:
/// y(x) = y_offset + sign * scale * psi(x / scale) with
/// psi(r) = sqrt(1 - r^2) - t * eta(r / s).
struct BumpGraphParams {
    double s = 0.1;
    double t = 0.0;
    std::string eta = "std_bump";
    double scale = 1.0;
    double y_offset = 0.0;
    int sign = +1;
};

/// Height field y = height(x) revolved about the axis.
struct GraphSegment {
    std::function<Jet(double)> height;
    double x_begin = 0.0;
    double x_end = 0.0;
    std::optional<BumpGraphParams> bump;
};

/// A stretch of a closed periodic spline; used to fit discrete profiles.
struct SplineSegment {
    PeriodicSpline spline;
    double t_begin = 0.0;
    double t_end = 0.0;
};

using ProfileSegment = std::variant<ArcSegment, CatenarySegment, GraphSegment, SplineSegment>;

/// Full local geometry at one point of the revolved surface.
struct PointFrame {
    Point2 position;
    Point2 tangent;
    Point2 normal;
    double k1 = 0.0;  // meridian
    double k2 = 0.0;  // parallel
    double mean = 0.0;
    double gauss = 0.0;
    double tracefree_sq = 0.0;  // |A°|^2 = (k1 - k2)^2 / 2
    double area_factor = 0.0;   // 2 pi x
    double normal_projection = 0.0;  // p . nu

    void flip() {
        normal = -1.0 * normal;
        k1 = -k1;
        k2 = -k2;
        mean = -mean;
        normal_projection = -normal_projection;
    }
};

enum class PoleMode { Throw, SymmetricLimit };

inline std::pair<double, double> parameter_range(const ProfileSegment& seg) {
    return std::visit(
        [](const auto& s) -> std::pair<double, double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ArcSegment>) return {s.theta_begin, s.theta_end};
            else if constexpr (std::is_same_v<T, CatenarySegment>) return {s.u_begin, s.u_end};
            else if constexpr (std::is_same_v<T, GraphSegment>) return {s.x_begin, s.x_end};
            else return {s.t_begin, s.t_end};
        },
        seg);
}

/// Position and raw parameter derivatives (independent of traversal direction).
inline CurveJet curve_jet(const ProfileSegment& seg, double t) {
    return std::visit(
        [t](const auto& s) -> CurveJet {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ArcSegment>) {
                const double c = std::cos(t), sn = std::sin(t);
                return {{s.center.x + s.radius * c, s.center.y + s.radius * sn},
                        {-s.radius * sn, s.radius * c},
                        {-s.radius * c, -s.radius * sn}};
            } else if constexpr (std::is_same_v<T, CatenarySegment>) {
                const double ch = std::cosh(t), sh = std::sinh(t);
                const double b = static_cast<double>(s.branch);
                return {{s.lambda * ch, s.y0 + b * s.lambda * t},
                        {s.lambda * sh, b * s.lambda},
                        {s.lambda * ch, 0.0}};
            } else if constexpr (std::is_same_v<T, GraphSegment>) {
                const Jet h = s.height(t);
                return {{t, h.value}, {1.0, h.d1}, {0.0, h.d2}};
            } else {
                return s.spline.evaluate(t);
            }
        },
        seg);
}

inline Point2 position(const ProfileSegment& seg, double t) { return curve_jet(seg, t).p; }

inline Point2 begin_point(const ProfileSegment& seg) {
    return position(seg, parameter_range(seg).first);
}
inline Point2 end_point(const ProfileSegment& seg) {
    return position(seg, parameter_range(seg).second);
}

/// Geometric length scale used to decide whether a point lies on the axis.
inline double axis_threshold(Point2 p) { return 1e-15 * std::max(1.0, norm(p)); }

inline PointFrame frame_at(const ProfileSegment& seg, double t,
                           PoleMode pole = PoleMode::Throw) {
    const auto [a, b] = parameter_range(seg);
    const double lo = std::min(a, b), hi = std::max(a, b);
    const double slack = 1e-12 * std::max(1.0, hi - lo);
    if (!(t >= lo - slack && t <= hi + slack)) {
        throw ParameterOutOfRange("frame_at: parameter " + std::to_string(t) +
                                  " outside segment range");
    }
    const double dir = (b >= a) ? 1.0 : -1.0;
    const CurveJet j = curve_jet(seg, t);
    const double speed = norm(j.dp);
    if (!(speed > 0.0)) throw ConstructionError("frame_at: degenerate parametrization");

    PointFrame f;
    f.position = j.p;
    f.tangent = (dir / speed) * j.dp;
    f.normal = {f.tangent.y, -f.tangent.x};
    f.k1 = dir * cross(j.dp, j.ddp) / (speed * speed * speed);
    if (j.p.x <= axis_threshold(j.p)) {
        if (pole == PoleMode::Throw) {
            throw AxisSingularity("frame_at: parallel curvature undefined on the axis");
        }
        f.k2 = f.k1;
    } else {
        f.k2 = f.normal.x / j.p.x;
    }
    f.mean = f.k1 + f.k2;
    f.gauss = f.k1 * f.k2;
    f.tracefree_sq = 0.5 * (f.k1 - f.k2) * (f.k1 - f.k2);
    f.area_factor = 2.0 * std::numbers::pi * std::max(j.p.x, 0.0);
    f.normal_projection = dot(j.p, f.normal);
    return f;
}

/// |d position / d parameter|; the arclength density of the native parameter.
inline double speed(const ProfileSegment& seg, double t) { return norm(curve_jet(seg, t).dp); }

/// Parameter values where the segment's integrand may lose smoothness.
inline std::vector<double> breakpoints(const ProfileSegment& seg) {
    const auto [a, b] = parameter_range(seg);
    std::vector<double> out{a};
    if (const auto* sp = std::get_if<SplineSegment>(&seg)) {
        const double lo = std::min(a, b), hi = std::max(a, b);
        std::vector<double> inner;
        for (double k : sp->spline.knots()) {
            if (k > lo + 1e-14 && k < hi - 1e-14) inner.push_back(k);
        }
        if (b < a) std::reverse(inner.begin(), inner.end());
        out.insert(out.end(), inner.begin(), inner.end());
    }
    out.push_back(b);
    return out;
}

inline double max_radius(const ProfileSegment& seg) {
    return std::visit(
        [&seg](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            const auto [a, b] = parameter_range(seg);
            double best = std::max(norm(position(seg, a)), norm(position(seg, b)));
            if constexpr (std::is_same_v<T, ArcSegment>) {
                // farthest point of the full circle from the origin
                const double cn = norm(s.center);
                if (cn == 0.0) return s.radius;
                double phi = std::atan2(s.center.y, s.center.x);
                const double lo = std::min(a, b), hi = std::max(a, b);
                for (int k = -3; k <= 3; ++k) {
                    const double th = phi + 2.0 * std::numbers::pi * k;
                    if (th >= lo && th <= hi) best = std::max(best, cn + s.radius);
                }
                return best;
            } else if constexpr (std::is_same_v<T, CatenarySegment>) {
                return best;  // |p|^2 is convex in u
            } else {
                std::vector<double> cuts = breakpoints(seg);
                for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
                    constexpr int kSamples = std::is_same_v<T, GraphSegment> ? 2000 : 16;
                    for (int k = 1; k < kSamples; ++k) {
                        const double t = cuts[i] + (cuts[i + 1] - cuts[i]) * k / kSamples;
                        best = std::max(best, norm(position(seg, t)));
                    }
                }
                return best;
            }
        },
        seg);
}

/// Scale all geometry of one segment by `factor`.
inline ProfileSegment dilate(const ProfileSegment& seg, double factor) {
    return std::visit(
        [factor](const auto& s) -> ProfileSegment {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ArcSegment>) {
                return ArcSegment{factor * s.center, factor * s.radius, s.theta_begin, s.theta_end};
            } else if constexpr (std::is_same_v<T, CatenarySegment>) {
                return CatenarySegment{factor * s.lambda, factor * s.y0, s.branch, s.u_begin,
                                       s.u_end};
            } else if constexpr (std::is_same_v<T, GraphSegment>) {
                GraphSegment g;
                auto inner = s.height;
                g.height = [inner, factor](double x) {
                    const Jet h = inner(x / factor);
                    return Jet{factor * h.value, h.d1, h.d2 / factor};
                };
                g.x_begin = factor * s.x_begin;
                g.x_end = factor * s.x_end;
                if (s.bump) {
                    g.bump = *s.bump;
                    g.bump->scale *= factor;
                    g.bump->y_offset *= factor;
                }
                return g;
            } else {
                std::vector<Point2> pts;
                pts.reserve(s.spline.points().size());
                for (Point2 p : s.spline.points()) pts.push_back(factor * p);
                return SplineSegment{PeriodicSpline(pts), factor * s.t_begin, factor * s.t_end};
            }
        },
        seg);
}

/// Ordered C1 chain of segments revolved about the y-axis.
class RevolutionSurface {
public:
    /// Sphere-type surface: the chain starts and ends on the axis.
    static RevolutionSurface closed(std::string label, std::vector<ProfileSegment> segments,
                                    int orientation = +1) {
        RevolutionSurface s(std::move(label), std::move(segments), orientation, true);
        s.validate();
        return s;
    }

    /// Surface with boundary circles (e.g. a half of a construction).
    static RevolutionSurface open(std::string label, std::vector<ProfileSegment> segments,
                                  int orientation = +1) {
        RevolutionSurface s(std::move(label), std::move(segments), orientation, false);
        s.validate();
        return s;
    }

    const std::string& label() const { return label_; }
    const std::vector<ProfileSegment>& segments() const { return segments_; }
    int orientation() const { return orientation_; }
    bool is_closed() const { return closed_; }

    PointFrame frame(std::size_t index, double t, PoleMode pole = PoleMode::Throw) const {
        PointFrame f = frame_at(segments_.at(index), t, pole);
        if (orientation_ < 0) f.flip();
        return f;
    }

    double max_radius() const {
        double best = 0.0;
        for (const auto& seg : segments_) best = std::max(best, cwillmore::max_radius(seg));
        return best;
    }

    RevolutionSurface dilated(double factor) const {
        if (!(factor > 0.0)) throw DomainError("dilate: factor must be positive");
        std::vector<ProfileSegment> out;
        out.reserve(segments_.size());
        for (const auto& seg : segments_) out.push_back(cwillmore::dilate(seg, factor));
        RevolutionSurface s(label_, std::move(out), orientation_, closed_);
        return s;
    }

    RevolutionSurface relabeled(std::string label) const {
        RevolutionSurface s = *this;
        s.label_ = std::move(label);
        return s;
    }

    /// Largest position gap and tangent gap over interior junctions.
    std::pair<double, double> junction_gaps() const {
        double pos = 0.0, tan = 0.0;
        for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
            const auto& a = segments_[i];
            const auto& b = segments_[i + 1];
            const double ta = parameter_range(a).second;
            const double tb = parameter_range(b).first;
            pos = std::max(pos, norm(position(a, ta) - position(b, tb)));
            const PointFrame fa = frame_at(a, ta, PoleMode::SymmetricLimit);
            const PointFrame fb = frame_at(b, tb, PoleMode::SymmetricLimit);
            tan = std::max(tan, norm(fa.tangent - fb.tangent));
        }
        return {pos, tan};
    }

private:
    RevolutionSurface(std::string label, std::vector<ProfileSegment> segments, int orientation,
                      bool closed)
        : label_(std::move(label)),
          segments_(std::move(segments)),
          orientation_(orientation >= 0 ? +1 : -1),
          closed_(closed) {}

    void validate() const {
        if (segments_.empty()) throw ConstructionError("surface has no segments");
        for (const auto& seg : segments_) {
            if (const auto* arc = std::get_if<ArcSegment>(&seg); arc && !(arc->radius > 0.0)) {
                throw ConstructionError("arc radius must be positive");
            }
            if (const auto* cat = std::get_if<CatenarySegment>(&seg); cat && !(cat->lambda > 0.0)) {
                throw ConstructionError("catenary waist must be positive");
            }
            if (const auto* g = std::get_if<GraphSegment>(&seg); g && !g->height) {
                throw ConstructionError("graph segment without height function");
            }
            const auto [a, b] = parameter_range(seg);
            if (a == b) throw ConstructionError("segment with empty parameter range");
        }
        const auto [pos, tan] = junction_gaps();
        if (pos > kPositionTol) {
            throw ConstructionError("segment endpoints do not coincide (gap " +
                                    std::to_string(pos) + ")");
        }
        if (tan > kTangentTol) {
            throw ConstructionError("chain is not C1 at a junction (tangent gap " +
                                    std::to_string(tan) + ")");
        }
        if (closed_) {
            const Point2 first = begin_point(segments_.front());
            const Point2 last = end_point(segments_.back());
            if (std::abs(first.x) > kPositionTol || std::abs(last.x) > kPositionTol) {
                throw ConstructionError("closed surface must start and end on the axis");
            }
        }
    }

    std::string label_;
    std::vector<ProfileSegment> segments_;
    int orientation_ = +1;
    bool closed_ = true;
};

inline RevolutionSurface dilate(const RevolutionSurface& surface, double factor) {
    return surface.dilated(factor);
}

/// Round sphere of the given radius centred at (0, center_y).
inline RevolutionSurface make_sphere(double radius, double center_y = 0.0,
                                     std::string label = "sphere") {
    const double h = std::numbers::pi / 2.0;
    return RevolutionSurface::closed(std::move(label),
                                     {ArcSegment{{0.0, center_y}, radius, -h, h}});
}

}  // namespace cwillmore
