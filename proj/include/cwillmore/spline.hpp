#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "cwillmore/errors.hpp"

namespace cwillmore {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

/// Value, first and second derivative of a scalar function.
struct Jet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// Position and its first two parameter derivatives.
struct CurveJet {
    Point2 p;
    Point2 dp;
    Point2 ddp;
};

namespace detail {

// Solves the cyclic tridiagonal system
//   lower[i] z[i-1] + diag[i] z[i] + upper[i] z[i+1] = rhs[i]   (indices mod n)
// by Sherman-Morrison on top of the Thomas algorithm.
inline std::vector<double> solve_cyclic_tridiagonal(std::vector<double> lower,
                                                    std::vector<double> diag,
                                                    std::vector<double> upper,
                                                    std::vector<double> rhs) {
    const std::size_t n = diag.size();
    if (n < 3) throw ConstructionError("cyclic spline needs at least 3 points");
    const double corner_lo = lower[0];      // couples row 0 to z[n-1]
    const double corner_hi = upper[n - 1];  // couples row n-1 to z[0]
    const double gamma = -diag[0];
    diag[0] -= gamma;
    diag[n - 1] -= corner_lo * corner_hi / gamma;

    auto thomas = [&](std::vector<double> d) {
        std::vector<double> c(n), x(n);
        double denom = diag[0];
        c[0] = upper[0] / denom;
        d[0] /= denom;
        for (std::size_t i = 1; i < n; ++i) {
            denom = diag[i] - lower[i] * c[i - 1];
            c[i] = (i + 1 < n) ? upper[i] / denom : 0.0;
            d[i] = (d[i] - lower[i] * d[i - 1]) / denom;
        }
        x[n - 1] = d[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
        return x;
    };

    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = corner_hi;
    const std::vector<double> x = thomas(std::move(rhs));
    const std::vector<double> z = thomas(u);
    const double vx = x[0] + corner_lo / gamma * x[n - 1];
    const double vz = z[0] + corner_lo / gamma * z[n - 1];
    const double factor = vx / (1.0 + vz);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - factor * z[i];
    return out;
}

}  // namespace detail

/// Periodic C2 cubic spline through a closed polygon, chord-length parametrized.
class PeriodicSpline {
public:
    PeriodicSpline() = default;

    explicit PeriodicSpline(std::span<const Point2> loop) : points_(loop.begin(), loop.end()) {
        const std::size_t n = points_.size();
        if (n < 3) throw ConstructionError("periodic spline needs at least 3 points");
        knots_.resize(n + 1);
        knots_[0] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double h = norm(points_[(i + 1) % n] - points_[i]);
            if (!(h > 0.0)) throw ConstructionError("periodic spline has coincident points");
            knots_[i + 1] = knots_[i] + h;
        }
        mx_ = second_derivatives([](Point2 p) { return p.x; });
        my_ = second_derivatives([](Point2 p) { return p.y; });
    }

    double period() const { return knots_.back(); }
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<Point2>& points() const { return points_; }

    CurveJet evaluate(double t) const {
        const std::size_t n = points_.size();
        t = std::clamp(t, 0.0, period());
        auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
        std::size_t j = static_cast<std::size_t>(std::distance(knots_.begin(), it));
        j = (j == 0) ? 0 : j - 1;
        if (j >= n) j = n - 1;
        const std::size_t k = (j + 1) % n;
        const double h = knots_[j + 1] - knots_[j];
        const double a = t - knots_[j];
        const double b = knots_[j + 1] - t;
        auto eval = [&](double y0, double y1, double m0, double m1) {
            const double c0 = y0 / h - m0 * h / 6.0;
            const double c1 = y1 / h - m1 * h / 6.0;
            Jet out;
            out.value = m0 * b * b * b / (6.0 * h) + m1 * a * a * a / (6.0 * h) + c0 * b + c1 * a;
            out.d1 = -m0 * b * b / (2.0 * h) + m1 * a * a / (2.0 * h) - c0 + c1;
            out.d2 = m0 * b / h + m1 * a / h;
            return out;
        };
        const Jet jx = eval(points_[j].x, points_[k].x, mx_[j], mx_[k]);
        const Jet jy = eval(points_[j].y, points_[k].y, my_[j], my_[k]);
        return {{jx.value, jy.value}, {jx.d1, jy.d1}, {jx.d2, jy.d2}};
    }

private:
    template <class Coord>
    std::vector<double> second_derivatives(Coord coord) const {
        const std::size_t n = points_.size();
        std::vector<double> lower(n), diag(n), upper(n), rhs(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t prev = (i + n - 1) % n;
            const std::size_t next = (i + 1) % n;
            const double hp = knots_[prev + 1] - knots_[prev];
            const double hn = knots_[i + 1] - knots_[i];
            lower[i] = hp;
            diag[i] = 2.0 * (hp + hn);
            upper[i] = hn;
            rhs[i] = 6.0 * ((coord(points_[next]) - coord(points_[i])) / hn -
                            (coord(points_[i]) - coord(points_[prev])) / hp);
        }
        return detail::solve_cyclic_tridiagonal(std::move(lower), std::move(diag),
                                                std::move(upper), std::move(rhs));
    }

    std::vector<Point2> points_;
    std::vector<double> knots_;
    std::vector<double> mx_;
    std::vector<double> my_;
};

}  // namespace cwillmore
