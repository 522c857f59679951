#pragma once

// JSON and CSV forms of surfaces, solutions and reports.
//
// Surface schema:
//   {"label": "...", "orientation": 1,
//    "segments": [
//      {"type": "arc", "center": [x, y], "radius": r, "theta": [t0, t1]},
//      {"type": "catenary", "lambda": l, "y0": y0, "branch": "+", "u": [u0, u1]},
//      {"type": "graph_bump", "s": s, "t": t, "eta": "std_bump",
//       "scale": 1, "y_offset": 0, "sign": 1, "x": [x0, x1]},
//      {"type": "spline", "points": [[x, y], ...], "t": [t0, t1]}]}
// "orientation", and the graph_bump keys after "eta", are optional; a bare
// graph_bump is the bump cap of the unit sphere, traversed from x = s to the
// pole.

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "cwillmore/bump.hpp"
#include "cwillmore/errors.hpp"
#include "cwillmore/neck.hpp"
#include "cwillmore/probe.hpp"
#include "cwillmore/profile.hpp"
#include "cwillmore/report.hpp"
#include "cwillmore/sweep.hpp"

namespace cwillmore {

using json = nlohmann::json;

namespace detail {

inline json pair_json(double a, double b) { return json::array({a, b}); }

inline double number_at(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw SchemaError(std::string("missing or non-numeric field '") + key + "'");
    }
    return j.at(key).get<double>();
}

inline std::pair<double, double> pair_at(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 2 ||
        !j.at(key)[0].is_number() || !j.at(key)[1].is_number()) {
        throw SchemaError(std::string("field '") + key + "' must be a pair of numbers");
    }
    return {j.at(key)[0].get<double>(), j.at(key)[1].get<double>()};
}

inline json optional_number(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

}  // namespace detail

inline json segment_to_json(const ProfileSegment& seg) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ArcSegment>) {
                return {{"type", "arc"},
                        {"center", detail::pair_json(s.center.x, s.center.y)},
                        {"radius", s.radius},
                        {"theta", detail::pair_json(s.theta_begin, s.theta_end)}};
            } else if constexpr (std::is_same_v<T, CatenarySegment>) {
                return {{"type", "catenary"},
                        {"lambda", s.lambda},
                        {"y0", s.y0},
                        {"branch", s.branch >= 0 ? "+" : "-"},
                        {"u", detail::pair_json(s.u_begin, s.u_end)}};
            } else if constexpr (std::is_same_v<T, GraphSegment>) {
                if (!s.bump) throw SchemaError("only bump graph segments can be serialized");
                const BumpGraphParams& b = *s.bump;
                return {{"type", "graph_bump"}, {"s", b.s},
                        {"t", b.t},             {"eta", b.eta},
                        {"scale", b.scale},     {"y_offset", b.y_offset},
                        {"sign", b.sign},       {"x", detail::pair_json(s.x_begin, s.x_end)}};
            } else {
                json pts = json::array();
                for (Point2 p : s.spline.points()) pts.push_back(detail::pair_json(p.x, p.y));
                return {{"type", "spline"},
                        {"points", pts},
                        {"t", detail::pair_json(s.t_begin, s.t_end)}};
            }
        },
        seg);
}

inline ProfileSegment segment_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        throw SchemaError("segment must be an object with a string 'type'");
    }
    const std::string type = j.at("type").get<std::string>();
    if (type == "arc") {
        const auto [cx, cy] = detail::pair_at(j, "center");
        const auto [t0, t1] = detail::pair_at(j, "theta");
        return ArcSegment{{cx, cy}, detail::number_at(j, "radius"), t0, t1};
    }
    if (type == "catenary") {
        const auto [u0, u1] = detail::pair_at(j, "u");
        if (!j.contains("branch") || !j.at("branch").is_string()) {
            throw SchemaError("catenary needs 'branch' of \"+\" or \"-\"");
        }
        const std::string br = j.at("branch").get<std::string>();
        if (br != "+" && br != "-") throw SchemaError("catenary branch must be \"+\" or \"-\"");
        return CatenarySegment{detail::number_at(j, "lambda"), detail::number_at(j, "y0"),
                               br == "+" ? +1 : -1, u0, u1};
    }
    if (type == "graph_bump") {
        BumpGraphParams p;
        p.s = detail::number_at(j, "s");
        p.t = detail::number_at(j, "t");
        p.eta = j.value("eta", std::string("std_bump"));
        if (j.contains("scale")) p.scale = detail::number_at(j, "scale");
        if (j.contains("y_offset")) p.y_offset = detail::number_at(j, "y_offset");
        if (j.contains("sign")) p.sign = detail::number_at(j, "sign") >= 0 ? +1 : -1;
        double x0 = p.scale * p.s, x1 = 0.0;
        if (j.contains("x")) std::tie(x0, x1) = detail::pair_at(j, "x");
        try {
            eta_by_name(p.eta);
            check_bump_parameters(p.s, p.t, p.eta);
        } catch (const Error& e) {
            throw SchemaError(std::string("graph_bump: ") + e.what());
        }
        return make_bump_graph(p, x0, x1);
    }
    if (type == "spline") {
        if (!j.contains("points") || !j.at("points").is_array()) {
            throw SchemaError("spline needs a 'points' array");
        }
        std::vector<Point2> pts;
        for (const json& q : j.at("points")) {
            if (!q.is_array() || q.size() != 2 || !q[0].is_number() || !q[1].is_number()) {
                throw SchemaError("spline points must be pairs of numbers");
            }
            pts.push_back({q[0].get<double>(), q[1].get<double>()});
        }
        const auto [t0, t1] = detail::pair_at(j, "t");
        try {
            return SplineSegment{PeriodicSpline(pts), t0, t1};
        } catch (const Error& e) {
            throw SchemaError(std::string("spline: ") + e.what());
        }
    }
    throw SchemaError("unknown segment type '" + type + "'");
}

inline json surface_to_json(const RevolutionSurface& s) {
    json segs = json::array();
    for (const auto& seg : s.segments()) segs.push_back(segment_to_json(seg));
    return {{"label", s.label()}, {"orientation", s.orientation()}, {"closed", s.is_closed()},
            {"segments", segs}};
}

inline RevolutionSurface surface_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("surface must be a JSON object");
    if (!j.contains("segments") || !j.at("segments").is_array() || j.at("segments").empty()) {
        throw SchemaError("surface needs a non-empty 'segments' array");
    }
    std::vector<ProfileSegment> segs;
    std::string label;
    bool closed = true;
    try {
        for (const json& s : j.at("segments")) segs.push_back(segment_from_json(s));
        label = j.value("label", std::string("surface"));
        closed = j.value("closed", true);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("surface: ") + e.what());
    }
    int orientation = +1;
    if (j.contains("orientation")) orientation = detail::number_at(j, "orientation") >= 0 ? +1 : -1;
    try {
        return closed ? RevolutionSurface::closed(label, std::move(segs), orientation)
                      : RevolutionSurface::open(label, std::move(segs), orientation);
    } catch (const ConstructionError& e) {
        throw SchemaError(std::string("invalid surface: ") + e.what());
    }
}

inline RevolutionSurface parse_surface(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return surface_from_json(j);
}

inline json to_json(const NeckSolution& s) {
    return {{"r", s.r},   {"r1", s.r1}, {"beta", s.beta},     {"x0", s.x0},          {"y0", s.y0},
            {"x1", s.x1}, {"y1", s.y1}, {"lambda", s.lambda}, {"residual", s.residual}};
}

inline json to_json(const NeckEnergies& e) {
    return {{"A1", e.a1}, {"A2", e.a2}, {"A3", e.a3}, {"A4", e.a4},
            {"A_plus", e.area_plus}, {"W_plus", e.willmore_plus}};
}

inline json to_json(const IdentityReport& r) {
    return {{"residual_first_variation", r.residual_first_variation},
            {"willmore_area_gap", r.willmore_area_gap},
            {"residual_area_defect", r.residual_area_defect},
            {"residual_gauss_bonnet", r.residual_gauss_bonnet},
            {"residual_tracefree", r.residual_tracefree},
            {"confined", r.confined}};
}

inline json to_json(const SurfaceReport& r) {
    json j = {{"label", r.label},
              {"area", r.area},
              {"willmore", r.willmore},
              {"gauss_integral", r.gauss_integral},
              {"tracefree_integral", r.tracefree_integral},
              {"max_radius", r.max_radius},
              {"confined", r.confined}};
    if (r.identities) j["identities"] = to_json(*r.identities);
    return j;
}

inline json to_json(const ProbeResult& r) {
    json nodes = json::array();
    for (Point2 p : r.profile.nodes) nodes.push_back(detail::pair_json(p.x, p.y));
    return {{"target_area", r.target_area},
            {"willmore", r.willmore},
            {"area", r.area},
            {"spline_willmore", detail::optional_number(r.spline_willmore)},
            {"spline_area", detail::optional_number(r.spline_area)},
            {"area_error", r.area_error},
            {"confinement_violation", r.confinement_violation},
            {"min_branch_distance", detail::optional_number(r.min_branch_distance)},
            {"iterations", r.iterations},
            {"converged", r.converged},
            {"nodes", nodes}};
}

// ---- CSV ----

/// Locale-independent shortest form with at most 15 significant digits.
inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& cols) { row_strings(cols); }

    void row(const std::vector<double>& values) {
        std::vector<std::string> s;
        s.reserve(values.size());
        for (double v : values) s.push_back(format_number(v));
        row_strings(s);
    }

    void row_strings(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
};

inline std::string bump_sweep_csv(const BumpSweep& sweep) {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"s", "t", "area", "area_excess", "willmore", "willmore_excess", "slope_partial"});
    for (const auto& r : sweep.rows) {
        w.row({r.s, r.t, r.area, r.area_excess, r.willmore, r.willmore_excess, r.slope_partial});
    }
    return os.str();
}

inline std::string sweep_table_csv(const SweepTable& t) {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"a", "lower_bound", "upper_neck", "upper_bump", "w_probe", "upper_envelope",
              "source"});
    auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    for (const auto& r : t.rows) {
        w.row_strings({format_number(r.a), format_number(r.lower_bound), opt(r.upper_neck),
                       opt(r.upper_bump), opt(r.w_probe), format_number(r.upper_envelope),
                       r.source});
    }
    return os.str();
}

inline std::string neck_csv(const NeckSolution& s, const NeckEnergies& e) {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"r", "r1", "beta", "x0", "y0", "x1", "y1", "lambda", "residual", "A1", "A2", "A3",
              "A4", "A_plus", "W_plus"});
    w.row({s.r, s.r1, s.beta, s.x0, s.y0, s.x1, s.y1, s.lambda, s.residual, e.a1, e.a2, e.a3, e.a4,
           e.area_plus, e.willmore_plus});
    return os.str();
}

inline std::string report_csv(const SurfaceReport& r) {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"label", "area", "willmore", "gauss_integral", "tracefree_integral", "max_radius",
              "confined"});
    w.row_strings({r.label, format_number(r.area), format_number(r.willmore),
                   format_number(r.gauss_integral), format_number(r.tracefree_integral),
                   format_number(r.max_radius), r.confined ? "true" : "false"});
    return os.str();
}

inline std::string profile_csv(const DiscreteProfile& p) {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"x", "y"});
    for (Point2 q : p.nodes) w.row({q.x, q.y});
    return os.str();
}

}  // namespace cwillmore
