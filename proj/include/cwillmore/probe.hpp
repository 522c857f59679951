#pragma once

// Penalized descent over discretized profile curves, estimating the least
// Willmore energy at prescribed area inside the unit ball.
//
// A profile is a polyline p_0 .. p_N from the south pole to the north pole
// (x_0 = x_N = 0). Curvatures are nodal: k1 from the circle through three
// consecutive nodes, k2 = nu_x / x with nu from the central chord; the poles
// use the mirror image of their neighbour. Each node carries the area of its
// dual cell (two half-frustums).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwillmore/bump.hpp"
#include "cwillmore/errors.hpp"
#include "cwillmore/polyline.hpp"
#include "cwillmore/profile.hpp"
#include "cwillmore/report.hpp"
#include "cwillmore/spline.hpp"

namespace cwillmore {

struct DiscreteProfile {
    std::vector<Point2> nodes;

    std::size_t segments() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

struct DiscreteEnergy {
    double area = 0.0;
    double willmore = 0.0;
};

struct ProbeConfig {
    int nodes = 400;
    std::vector<double> penalties{1e2, 1e3, 1e4, 1e5};
    int max_iterations = 20000;
    int redistribute_every = 50;
    double gradient_tol = 1e-6;
    double fd_step = 1e-6;
    double armijo = 1e-4;
    int memory = 8;               // L-BFGS history length
    double curvature_weight = 0;  // node density ~ 1 + w |k1| on redistribution
};

struct ProbeResult {
    DiscreteProfile profile;
    double target_area = 0.0;
    double willmore = 0.0;          // discrete energy of the final profile
    double area = 0.0;
    double spline_willmore = std::numeric_limits<double>::quiet_NaN();
    double spline_area = std::numeric_limits<double>::quiet_NaN();
    double area_error = 0.0;
    double confinement_violation = 0.0;  // max |p| - 1
    double min_branch_distance = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

namespace detail {

// Nodal curvature data; index i in [0, N].
struct NodeGeometry {
    double k1 = 0.0;
    double k2 = 0.0;
};

inline double circle_curvature(Point2 a, Point2 b, Point2 c) {
    const double la = norm(b - a), lb = norm(c - b), lc = norm(c - a);
    if (la == 0.0 || lb == 0.0 || lc == 0.0) {
        throw DomainError("discrete profile has coincident nodes");
    }
    const double cr = cross(b - a, c - b);
    if (std::abs(cr) <= 1e-14 * la * lb) return 0.0;
    return 2.0 * cr / (la * lb * lc);
}

inline Point2 mirror(Point2 p) { return {-p.x, p.y}; }

inline NodeGeometry node_geometry(const std::vector<Point2>& p, std::size_t i) {
    const std::size_t n = p.size() - 1;
    if (i == 0) {
        const double k = circle_curvature(mirror(p[1]), p[0], p[1]);
        return {k, k};
    }
    if (i == n) {
        const double k = circle_curvature(p[n - 1], p[n], mirror(p[n - 1]));
        return {k, k};
    }
    const double k1 = circle_curvature(p[i - 1], p[i], p[i + 1]);
    const Point2 chord = p[i + 1] - p[i - 1];
    const double k2 = (chord.y / norm(chord)) / p[i].x;
    return {k1, k2};
}

// Dual-cell area of node i.
inline double node_area(const std::vector<Point2>& p, std::size_t i) {
    const double pi = std::numbers::pi;
    double a = 0.0;
    if (i > 0) {
        const double l = norm(p[i] - p[i - 1]);
        a += pi * (p[i].x + 0.5 * (p[i].x + p[i - 1].x)) * 0.5 * l;
    }
    if (i + 1 < p.size()) {
        const double l = norm(p[i + 1] - p[i]);
        a += pi * (p[i].x + 0.5 * (p[i].x + p[i + 1].x)) * 0.5 * l;
    }
    return a;
}

inline double node_willmore(const std::vector<Point2>& p, std::size_t i) {
    const NodeGeometry g = node_geometry(p, i);
    const double h = g.k1 + g.k2;
    return 0.25 * h * h * node_area(p, i);
}

inline double edge_area(const std::vector<Point2>& p, std::size_t e) {
    return std::numbers::pi * (p[e].x + p[e + 1].x) * norm(p[e + 1] - p[e]);
}

inline double dual_length(const std::vector<Point2>& p, std::size_t i) {
    double l = 0.0;
    if (i > 0) l += 0.5 * norm(p[i] - p[i - 1]);
    if (i + 1 < p.size()) l += 0.5 * norm(p[i + 1] - p[i]);
    return l;
}

inline double node_confinement(const std::vector<Point2>& p, std::size_t i) {
    const double over = std::max(0.0, norm(p[i]) - 1.0);
    return over * over * dual_length(p, i);
}

}  // namespace detail

inline DiscreteEnergy discrete_energy(const DiscreteProfile& profile) {
    const auto& p = profile.nodes;
    if (p.size() < 3) throw DomainError("discrete profile needs at least 3 nodes");
    DiscreteEnergy e;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) e.area += detail::edge_area(p, i);
    for (std::size_t i = 0; i < p.size(); ++i) e.willmore += detail::node_willmore(p, i);
    return e;
}

/// Nodes uniformly spaced in angle on a sphere of the given radius.
inline DiscreteProfile sphere_profile(double radius, int n = 400) {
    DiscreteProfile out;
    for (int i = 0; i <= n; ++i) {
        const double th = -std::numbers::pi / 2.0 + std::numbers::pi * i / n;
        out.nodes.push_back({radius * std::cos(th), radius * std::sin(th)});
    }
    out.nodes.front().x = 0.0;
    out.nodes.back().x = 0.0;
    return out;
}

namespace detail {

// Places n + 1 points at equal steps of the weighted length along a densely
// sampled curve (positions and local curvature magnitudes).
inline std::vector<Point2> equidistribute(const std::vector<Point2>& dense,
                                          const std::vector<double>& curvature, int n,
                                          double weight) {
    std::vector<double> cum(dense.size(), 0.0);
    for (std::size_t k = 1; k < dense.size(); ++k) {
        const double w = 1.0 + weight * 0.5 * (curvature[k] + curvature[k - 1]);
        cum[k] = cum[k - 1] + w * norm(dense[k] - dense[k - 1]);
    }
    std::vector<Point2> out;
    out.reserve(n + 1);
    std::size_t k = 1;
    for (int i = 0; i <= n; ++i) {
        const double target = cum.back() * i / n;
        while (k + 1 < dense.size() && cum[k] < target) ++k;
        const double span = cum[k] - cum[k - 1];
        const double f = span > 0.0 ? std::clamp((target - cum[k - 1]) / span, 0.0, 1.0) : 0.0;
        out.push_back(dense[k - 1] + f * (dense[k] - dense[k - 1]));
    }
    out.front() = dense.front();
    out.back() = dense.back();
    out.front().x = 0.0;
    out.back().x = 0.0;
    return out;
}

}  // namespace detail

/// Samples a closed surface of revolution at n + 1 nodes, equally spaced in
/// (curvature-weighted) arclength, oriented from the chain's first axis point.
inline DiscreteProfile resample(const RevolutionSurface& surface, int n = 400,
                                double curvature_weight = 0.0) {
    if (!surface.is_closed()) throw DomainError("resample: surface must be closed");
    constexpr int kDense = 4000;
    std::vector<Point2> dense;
    std::vector<double> curv;
    for (std::size_t i = 0; i < surface.segments().size(); ++i) {
        const auto [a, b] = parameter_range(surface.segments()[i]);
        for (int k = (i == 0 ? 0 : 1); k <= kDense; ++k) {
            const double t = a + (b - a) * k / kDense;
            const PointFrame f = surface.frame(i, t, PoleMode::SymmetricLimit);
            dense.push_back(f.position);
            curv.push_back(std::abs(f.k1));
        }
    }
    DiscreteProfile out;
    out.nodes = detail::equidistribute(dense, curv, n, curvature_weight);
    // the chain may run north to south; the probe works south to north
    if (out.nodes.front().y > out.nodes.back().y) {
        std::reverse(out.nodes.begin(), out.nodes.end());
    }
    return out;
}

/// Unit sphere and the sphere of radius r, joined at the north pole through a
/// single node placed so that its nodal mean curvature is about zero (a one-node
/// stand-in for the catenoid neck, which no uniform grid resolves).
inline DiscreteProfile double_sphere_profile(double r, int n = 400) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("double_sphere_profile: r must lie in (0, 1)");
    const double pi = std::numbers::pi;
    DiscreteProfile out;
    const int outer = n / 2;
    const int inner = n - outer;
    const double d_out = pi / (outer - 0.5);
    const double d_in = pi / (inner - 0.5);
    for (int k = 0; k < outer; ++k) {
        const double th = -pi / 2.0 + k * d_out;
        out.nodes.push_back({std::cos(th), std::sin(th)});
    }
    out.nodes.push_back({d_out / 6.0, 0.5 * (1.0 + r)});
    for (int k = inner - 1; k >= 0; --k) {
        const double th = -pi / 2.0 + k * d_in;
        out.nodes.push_back({r * std::cos(th), r * std::sin(th)});
    }
    out.nodes.front().x = 0.0;
    out.nodes.back().x = 0.0;
    return out;
}

/// Default starting profile for a target area: the unit sphere at 4 pi, a bump
/// sphere of that area (or the largest bump) up to 8 pi, and the discrete
/// double sphere at r = 0.999 from 8 pi on.
inline DiscreteProfile initial_profile(double target_area, int n = 400) {
    const double four_pi = 4.0 * std::numbers::pi;
    const double excess = target_area - four_pi;
    if (excess <= 1e-9 * four_pi) return sphere_profile(std::min(1.0, std::sqrt(target_area / four_pi)), n);
    if (target_area < 2.0 * four_pi - 1e-9) {
        double s = kBumpScaleMax;
        double t = 0.95 * max_bump_amplitude(s);
        try {
            const BumpForArea b = bump_for_excess(excess, 2.0 * compute_alpha_star());
            s = b.s;
            t = b.t;
        } catch (const RangeError&) {
        }
        std::vector<ProfileSegment> segs{ArcSegment{{0.0, 0.0}, 1.0, -std::numbers::pi / 2.0, 0.0}};
        for (auto& seg : bumped_hemisphere(1.0, +1, s, t, "std_bump")) segs.push_back(std::move(seg));
        return resample(RevolutionSurface::closed("bump init", std::move(segs)), n);
    }
    return double_sphere_profile(0.999, n);
}

/// Closed loop formed by the profile and its mirror image x -> -x; the spline
/// through it has horizontal tangents at both poles by symmetry.
inline PeriodicSpline mirrored_spline(const DiscreteProfile& profile) {
    const auto& p = profile.nodes;
    std::vector<Point2> loop(p.begin(), p.end());
    for (std::size_t i = p.size() - 2; i >= 1; --i) loop.push_back(detail::mirror(p[i]));
    return PeriodicSpline(loop);
}

/// Smooth surface through the nodes, for evaluation by quadrature.
inline RevolutionSurface spline_surface(const DiscreteProfile& profile,
                                        const std::string& label = "probe spline") {
    PeriodicSpline spline = mirrored_spline(profile);
    const double t_end = spline.knots()[profile.nodes.size() - 1];
    return RevolutionSurface::closed(label, {SplineSegment{std::move(spline), 0.0, t_end}});
}

/// Redistributes nodes along the mirrored spline through the current nodes.
inline DiscreteProfile redistribute(const DiscreteProfile& profile, double curvature_weight = 0.0) {
    const int n = static_cast<int>(profile.segments());
    const PeriodicSpline spline = mirrored_spline(profile);
    const double t_end = spline.knots()[n];
    constexpr int kPerInterval = 16;
    const int dense_n = n * kPerInterval;
    std::vector<Point2> dense;
    std::vector<double> curv;
    dense.reserve(dense_n + 1);
    for (int k = 0; k <= dense_n; ++k) {
        const CurveJet j = spline.evaluate(t_end * k / dense_n);
        dense.push_back(j.p);
        const double sp = norm(j.dp);
        curv.push_back(std::abs(cross(j.dp, j.ddp)) / (sp * sp * sp));
    }
    DiscreteProfile out;
    out.nodes = detail::equidistribute(dense, curv, n, curvature_weight);
    return out;
}

/// Smallest distance between nodes that are close in space but far apart
/// along the curve (curve length between them at least three times their
/// distance and at least four edge lengths).
inline double min_branch_distance(const DiscreteProfile& profile) {
    const auto& p = profile.nodes;
    std::vector<double> s(p.size(), 0.0);
    double hmax = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const double l = norm(p[i] - p[i - 1]);
        s[i] = s[i - 1] + l;
        hmax = std::max(hmax, l);
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const double along = s[j] - s[i];
            if (along < 4.0 * hmax) continue;
            const double d = norm(p[j] - p[i]);
            if (along >= 3.0 * d) best = std::min(best, d);
        }
    }
    return best;
}

namespace detail {

// Optimization variables: y_0, (x_i, y_i) for 0 < i < N, y_N.
inline std::vector<double> pack(const std::vector<Point2>& p) {
    std::vector<double> v;
    v.reserve(2 * p.size() - 2);
    v.push_back(p.front().y);
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        v.push_back(p[i].x);
        v.push_back(p[i].y);
    }
    v.push_back(p.back().y);
    return v;
}

inline void unpack(const std::vector<double>& v, std::vector<Point2>& p) {
    p.front() = {0.0, v.front()};
    for (std::size_t i = 1; i + 1 < p.size(); ++i) p[i] = {v[2 * i - 1], v[2 * i]};
    p.back() = {0.0, v.back()};
}

// Node index and coordinate (0 = x, 1 = y) of variable k.
inline std::pair<std::size_t, int> variable_slot(std::size_t k, std::size_t n) {
    if (k == 0) return {0, 1};
    if (k == 2 * n - 1) return {n, 1};
    return {(k + 1) / 2, (k % 2 == 1) ? 0 : 1};
}

class PenalizedObjective {
public:
    PenalizedObjective(double target, double mu_area, double mu_conf)
        : target_(target), mu_area_(mu_area), mu_conf_(mu_conf) {}

    struct Parts {
        double willmore = 0.0;
        double area = 0.0;
        double confinement = 0.0;
    };

    Parts parts(const std::vector<Point2>& p) const {
        Parts out;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) out.area += edge_area(p, i);
        for (std::size_t i = 0; i < p.size(); ++i) {
            out.willmore += node_willmore(p, i);
            out.confinement += node_confinement(p, i);
        }
        return out;
    }

    double value(const Parts& q) const {
        const double da = q.area - target_;
        return q.willmore + mu_area_ * da * da + mu_conf_ * q.confinement;
    }

    double value(const std::vector<Point2>& p) const { return value(parts(p)); }

    // Central differences, evaluated on the terms that node i touches only.
    std::vector<double> gradient(std::vector<Point2>& p, double step) const {
        const std::size_t n = p.size() - 1;
        const double area = parts(p).area;
        std::vector<double> g(2 * n, 0.0);
        for (std::size_t k = 0; k < g.size(); ++k) {
            const auto [i, c] = variable_slot(k, n);
            double& coord = c == 0 ? p[i].x : p[i].y;
            const double saved = coord;
            coord = saved + step;
            const auto plus = local(p, i);
            coord = saved - step;
            const auto minus = local(p, i);
            coord = saved;
            const double d_area = plus[1] - minus[1];
            // (A + dA+)^2 - (A + dA-)^2 with the shared A kept exact
            const double area_term =
                mu_area_ * d_area * (2.0 * (area - target_) + plus[1] + minus[1] - 2.0 * base_area(p, i));
            g[k] = (plus[0] - minus[0] + area_term) / (2.0 * step);
        }
        return g;
    }

private:
    // {willmore + confinement terms, area of the adjacent edges} around node i
    std::array<double, 2> local(const std::vector<Point2>& p, std::size_t i) const {
        const std::size_t n = p.size() - 1;
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = std::min(n, i + 1);
        double w = 0.0;
        for (std::size_t j = lo; j <= hi; ++j) {
            w += node_willmore(p, j) + mu_conf_ * node_confinement(p, j);
        }
        double a = 0.0;
        if (i > 0) a += edge_area(p, i - 1);
        if (i < n) a += edge_area(p, i);
        return {w, a};
    }

    double base_area(const std::vector<Point2>& p, std::size_t i) const {
        const std::size_t n = p.size() - 1;
        double a = 0.0;
        if (i > 0) a += edge_area(p, i - 1);
        if (i < n) a += edge_area(p, i);
        return a;
    }

    double target_;
    double mu_area_;
    double mu_conf_;
};

inline bool admissible(const std::vector<Point2>& p) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (!(p[i].x > 0.0) || !std::isfinite(p[i].y)) return false;
    }
    return !polyline_self_intersects(p);
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Two-loop recursion; returns the descent direction -H g.
inline std::vector<double> lbfgs_direction(const std::vector<double>& g,
                                           const std::vector<std::vector<double>>& s_hist,
                                           const std::vector<std::vector<double>>& y_hist) {
    std::vector<double> q = g;
    const std::size_t m = s_hist.size();
    std::vector<double> alpha(m), rho(m);
    for (std::size_t k = m; k-- > 0;) {
        rho[k] = 1.0 / dot(y_hist[k], s_hist[k]);
        alpha[k] = rho[k] * dot(s_hist[k], q);
        for (std::size_t j = 0; j < q.size(); ++j) q[j] -= alpha[k] * y_hist[k][j];
    }
    if (m > 0) {
        const double gamma = dot(s_hist[m - 1], y_hist[m - 1]) / dot(y_hist[m - 1], y_hist[m - 1]);
        for (auto& v : q) v *= gamma;
    }
    for (std::size_t k = 0; k < m; ++k) {
        const double beta = rho[k] * dot(y_hist[k], q);
        for (std::size_t j = 0; j < q.size(); ++j) q[j] += s_hist[k][j] * (alpha[k] - beta);
    }
    for (auto& v : q) v = -v;
    return q;
}

}  // namespace detail

/// Penalty-continuation descent from `init` towards the least Willmore energy
/// at area `target_area` inside the unit ball.
inline ProbeResult minimize(double target_area, const DiscreteProfile& init,
                            const ProbeConfig& config = {}) {
    const double four_pi = 4.0 * std::numbers::pi;
    if (!(target_area >= four_pi - 1e-12 && target_area <= 4.0 * four_pi + 1e-12)) {
        throw DomainError("minimize: target area must lie in [4 pi, 16 pi]");
    }
    if (init.nodes.size() < 5 || init.nodes.front().x != 0.0 || init.nodes.back().x != 0.0) {
        throw DomainError("minimize: initial profile must start and end on the axis");
    }
    std::vector<Point2> p = init.nodes;
    if (!detail::admissible(p)) throw DomainError("minimize: initial profile is not embedded");

    ProbeResult result;
    result.target_area = target_area;
    const int per_stage =
        std::max(1, config.max_iterations / static_cast<int>(config.penalties.size()));
    int total = 0;
    bool stationary = false;

    for (double mu : config.penalties) {
        const detail::PenalizedObjective obj(target_area, mu, mu);
        std::vector<std::vector<double>> s_hist, y_hist;
        double f = obj.value(p);
        std::vector<double> g = obj.gradient(p, config.fd_step);
        double window_start = f;
        stationary = false;
        for (int it = 0; it < per_stage; ++it, ++total) {
            if (std::sqrt(detail::dot(g, g)) <= config.gradient_tol) {
                stationary = true;
                break;
            }
            if (it > 0 && it % config.redistribute_every == 0) {
                // stop the stage once a whole window brings no relative progress
                if (window_start - f <= 1e-10 * std::abs(f)) {
                    stationary = true;
                    break;
                }
                window_start = f;
                DiscreteProfile moved = redistribute({p}, config.curvature_weight);
                if (detail::admissible(moved.nodes)) {
                    p = std::move(moved.nodes);
                    f = obj.value(p);
                    g = obj.gradient(p, config.fd_step);
                    s_hist.clear();
                    y_hist.clear();
                }
            }
            std::vector<double> d = detail::lbfgs_direction(g, s_hist, y_hist);
            double slope = detail::dot(g, d);
            if (!(slope < 0.0)) {
                s_hist.clear();
                y_hist.clear();
                d = g;
                for (auto& v : d) v = -v;
                slope = -detail::dot(g, g);
            }
            const std::vector<double> x0 = detail::pack(p);
            std::vector<double> x1 = x0;
            std::vector<Point2> trial = p;
            double step = 1.0;
            if (s_hist.empty()) {
                // first step of a stage: move no node further than ~1e-3
                double dmax = 0.0;
                for (double v : d) dmax = std::max(dmax, std::abs(v));
                step = std::min(1.0, 1e-3 / dmax);
            }
            bool accepted = false;
            double f1 = f;
            for (int ls = 0; ls < 60; ++ls) {
                for (std::size_t k = 0; k < x1.size(); ++k) x1[k] = x0[k] + step * d[k];
                detail::unpack(x1, trial);
                if (detail::admissible(trial)) {
                    f1 = obj.value(trial);
                    if (std::isfinite(f1) && f1 <= f + config.armijo * step * slope) {
                        accepted = true;
                        break;
                    }
                }
                step *= 0.5;
            }
            if (!accepted) {
                if (!s_hist.empty()) {
                    s_hist.clear();
                    y_hist.clear();
                    continue;
                }
                stationary = true;
                break;
            }
            p = trial;
            std::vector<double> g1 = obj.gradient(p, config.fd_step);
            std::vector<double> sk(x1.size()), yk(x1.size());
            for (std::size_t k = 0; k < x1.size(); ++k) {
                sk[k] = x1[k] - x0[k];
                yk[k] = g1[k] - g[k];
            }
            if (detail::dot(sk, yk) > 1e-16 * std::sqrt(detail::dot(sk, sk) * detail::dot(yk, yk))) {
                s_hist.push_back(std::move(sk));
                y_hist.push_back(std::move(yk));
                if (static_cast<int>(s_hist.size()) > config.memory) {
                    s_hist.erase(s_hist.begin());
                    y_hist.erase(y_hist.begin());
                }
            }
            f = f1;
            g = std::move(g1);
        }
    }

    result.profile.nodes = p;
    const DiscreteEnergy e = discrete_energy(result.profile);
    result.willmore = e.willmore;
    result.area = e.area;
    result.area_error = e.area - target_area;
    double rmax = 0.0;
    for (const Point2& q : p) rmax = std::max(rmax, norm(q));
    result.confinement_violation = rmax - 1.0;
    result.min_branch_distance = min_branch_distance(result.profile);
    result.iterations = total;
    result.converged = stationary;
    try {
        const SurfaceReport rep = report(spline_surface(result.profile));
        result.spline_willmore = rep.willmore;
        result.spline_area = rep.area;
    } catch (const QuadratureFailure&) {
        // left as NaN; the discrete value stands alone
    }
    return result;
}

struct SandwichCheck {
    bool pass = false;
    double lower = 0.0;
    double upper = 0.0;
    double lower_margin = 0.0;  // W_est - (a - tol_lower)
    double upper_margin = 0.0;  // (upper + tol_upper) - W_est
    std::string detail;
};

/// a - tol_lower <= W_est <= upper + tol_upper, with
/// tol_lower = max(1e-3 a, discretization_error).
inline SandwichCheck sandwich_check(double a, const ProbeResult& result, double upper,
                                    double discretization_error = 0.0) {
    SandwichCheck c;
    const double tol_lower = std::max(1e-3 * a, discretization_error);
    constexpr double tol_upper = 1e-6;
    c.lower = a;
    c.upper = upper;
    c.lower_margin = result.willmore - (a - tol_lower);
    c.upper_margin = (upper + tol_upper) - result.willmore;
    c.pass = c.lower_margin >= 0.0 && c.upper_margin >= 0.0;
    c.detail = "a = " + std::to_string(a) + ", W_est = " + std::to_string(result.willmore) +
               ", upper = " + std::to_string(upper) + ", lower margin " +
               std::to_string(c.lower_margin) + ", upper margin " + std::to_string(c.upper_margin) +
               (result.converged ? "" : " (not converged)");
    return c;
}

}  // namespace cwillmore
