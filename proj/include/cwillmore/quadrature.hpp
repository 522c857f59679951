#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <numbers>
#include <string>

#include "cwillmore/errors.hpp"
#include "cwillmore/profile.hpp"

namespace cwillmore {

struct QuadTol {
    double abs = 1e-9;
    double rel = 1e-9;
    int max_depth = 20;

    /// Defaults, with both tolerances overridden by CW_QUAD_TOL when set.
    static QuadTol from_environment() {
        QuadTol tol;
        if (const char* env = std::getenv("CW_QUAD_TOL")) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end != env && v > 0.0) tol.abs = tol.rel = v;
        }
        return tol;
    }
};

namespace detail {

struct GaussLegendre16 {
    std::array<double, 16> nodes{};
    std::array<double, 16> weights{};

    GaussLegendre16() {
        constexpr int n = 16;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = pk;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

inline const GaussLegendre16& gauss_legendre16() {
    static const GaussLegendre16 rule;
    return rule;
}

template <std::size_t M, class F>
std::array<double, M> gl16(F& f, double a, double b) {
    const auto& rule = gauss_legendre16();
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    std::array<double, M> sum{};
    for (int i = 0; i < 16; ++i) {
        const std::array<double, M> v = f(mid + half * rule.nodes[i]);
        for (std::size_t c = 0; c < M; ++c) sum[c] += rule.weights[i] * v[c];
    }
    for (auto& s : sum) s *= half;
    return sum;
}

template <std::size_t M, class F>
std::array<double, M> adaptive(F& f, double a, double b, const std::array<double, M>& whole,
                               double abs_tol, const QuadTol& tol, int depth) {
    const double mid = 0.5 * (a + b);
    const std::array<double, M> left = gl16<M>(f, a, mid);
    const std::array<double, M> right = gl16<M>(f, mid, b);
    std::array<double, M> both{};
    bool ok = true;
    for (std::size_t c = 0; c < M; ++c) {
        both[c] = left[c] + right[c];
        const double err = std::abs(both[c] - whole[c]);
        if (!(err <= std::max(abs_tol, tol.rel * std::abs(both[c])))) ok = false;
    }
    if (ok) return both;
    if (depth >= tol.max_depth) {
        throw QuadratureFailure("adaptive Gauss-Legendre did not converge at depth " +
                                    std::to_string(depth),
                                both[0]);
    }
    const std::array<double, M> l = adaptive<M>(f, a, mid, left, 0.5 * abs_tol, tol, depth + 1);
    const std::array<double, M> r = adaptive<M>(f, mid, b, right, 0.5 * abs_tol, tol, depth + 1);
    std::array<double, M> out{};
    for (std::size_t c = 0; c < M; ++c) out[c] = l[c] + r[c];
    return out;
}

}  // namespace detail

/// Adaptive order-16 Gauss-Legendre quadrature of a vector-valued function
/// over [a, b] (a > b allowed; the sign follows the orientation).
template <std::size_t M, class F>
std::array<double, M> integrate_interval(F f, double a, double b, const QuadTol& tol = {}) {
    if (a == b) return {};
    const std::array<double, M> whole = detail::gl16<M>(f, a, b);
    return detail::adaptive<M>(f, a, b, whole, tol.abs, tol, 0);
}

template <class F>
double integrate_scalar(F f, double a, double b, const QuadTol& tol = {}) {
    auto g = [&f](double t) { return std::array<double, 1>{f(t)}; };
    return integrate_interval<1>(g, a, b, tol)[0];
}

/// Surface integral of a vector of pointwise quantities:
/// sum over segments of int f(frame) * 2 pi x * |curve speed| dt.
template <std::size_t M, class F>
std::array<double, M> integrate(const RevolutionSurface& surface, F integrand,
                                const QuadTol& tol = {}) {
    std::array<double, M> total{};
    for (std::size_t i = 0; i < surface.segments().size(); ++i) {
        const ProfileSegment& seg = surface.segments()[i];
        auto f = [&](double t) {
            const PointFrame fr = surface.frame(i, t, PoleMode::SymmetricLimit);
            const double w = fr.area_factor * speed(seg, t);
            std::array<double, M> v = integrand(fr);
            for (auto& c : v) c *= w;
            return v;
        };
        const std::vector<double> cuts = breakpoints(seg);
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            // parameter direction is irrelevant for a measure: integrate low to high
            const double lo = std::min(cuts[k], cuts[k + 1]);
            const double hi = std::max(cuts[k], cuts[k + 1]);
            const std::array<double, M> part = integrate_interval<M>(f, lo, hi, tol);
            for (std::size_t c = 0; c < M; ++c) total[c] += part[c];
        }
    }
    return total;
}

template <class F>
double integrate(const RevolutionSurface& surface, F integrand, const QuadTol& tol = {}) {
    auto g = [&integrand](const PointFrame& fr) { return std::array<double, 1>{integrand(fr)}; };
    return integrate<1>(surface, g, tol)[0];
}

}  // namespace cwillmore
