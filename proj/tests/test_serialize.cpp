#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "cwillmore/cwillmore.hpp"

using namespace cwillmore;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_round_trip(const RevolutionSurface& s) {
    const std::string text = surface_to_json(s).dump();
    const RevolutionSurface back = parse_surface(text);
    EXPECT_EQ(back.segments().size(), s.segments().size());
    EXPECT_EQ(back.label(), s.label());
    const SurfaceReport a = report(s), b = report(back);
    EXPECT_NEAR(b.area, a.area, 1e-12 * a.area) << s.label();
    EXPECT_NEAR(b.willmore, a.willmore, 1e-12 * a.willmore) << s.label();
    // emitting twice gives identical text
    EXPECT_EQ(surface_to_json(back).dump(), text);
}

}  // namespace

TEST(Json, RoundTripEverySegmentKind) {
    expect_round_trip(make_sphere(0.7));
    expect_round_trip(build_sigma_plus(solve_neck(0.95)));
    expect_round_trip(build_bump_sphere(0.1, 2.0 * compute_alpha_star()));
    expect_round_trip(build_double_sphere(0.999).surface);
    expect_round_trip(spline_surface(sphere_profile(0.9, 30)));
}

TEST(Json, MinimalSchema) {
    const RevolutionSurface s = parse_surface(R"({"label":"u","segments":[
        {"type":"arc","center":[0,0],"radius":1,"theta":[-1.5707963267948966,1.5707963267948966]}]})");
    EXPECT_NEAR(report(s).area, 4.0 * kPi, 1e-9);
}

TEST(Json, SchemaViolations) {
    EXPECT_THROW((void)parse_surface("{not json"), SchemaError);
    EXPECT_THROW((void)parse_surface("[]"), SchemaError);
    EXPECT_THROW((void)parse_surface(R"({"segments":[]})"), SchemaError);
    EXPECT_THROW((void)parse_surface(R"({"segments":[{"type":"ellipse"}]})"), SchemaError);
    EXPECT_THROW((void)parse_surface(R"({"segments":[{"type":"arc","center":[0],"radius":1,"theta":[0,1]}]})"),
                 SchemaError);
    EXPECT_THROW((void)parse_surface(R"({"segments":[{"type":"catenary","lambda":0.1,"y0":0,"branch":"x","u":[0,1]}]})"),
                 SchemaError);
    EXPECT_THROW((void)parse_surface(R"({"segments":[{"type":"graph_bump","s":0.1,"t":0.01,"eta":"nope"}]})"),
                 SchemaError);
    // a chain that does not close on the axis
    EXPECT_THROW((void)parse_surface(R"({"segments":[{"type":"arc","center":[0,0],"radius":1,"theta":[-1,1]}]})"),
                 SchemaError);
}

TEST(Json, ProbeResultKeepsNodesAndNullsNonFinite) {
    ProbeResult r;
    r.profile = sphere_profile(1.0, 4);
    r.willmore = 1.0;
    const json j = to_json(r);
    EXPECT_EQ(j.at("nodes").size(), 5u);
    EXPECT_TRUE(j.at("spline_willmore").is_null());
    EXPECT_TRUE(j.at("min_branch_distance").is_null());
}

TEST(Json, NeckSolutionFields) {
    const json j = to_json(solve_neck(0.9));
    for (const char* k : {"r", "r1", "beta", "x0", "y0", "x1", "y1", "lambda", "residual"}) {
        EXPECT_TRUE(j.contains(k)) << k;
    }
}

TEST(Format, FifteenSignificantDigits) {
    EXPECT_EQ(format_number(kPi), "3.14159265358979");
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(-1e-20), "-1e-20");
    EXPECT_EQ(format_number(std::nan("")), "nan");
}

TEST(Csv, HeaderAndLineEndings) {
    const std::string csv = bump_sweep_csv(sweep_bump({0.05, 0.1}, 2.0 * compute_alpha_star()));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "s,t,area,area_excess,willmore,willmore_excess,slope_partial");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
    }
    EXPECT_EQ(rows, 2);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    EXPECT_EQ(csv.back(), '\n');
}

TEST(Svg, DeterministicProfile) {
    const RevolutionSurface s = build_sigma_plus(solve_neck(0.9));
    const std::string a = profile_svg(s), b = profile_svg(s);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rfind("<svg", 0), 0u);
    EXPECT_NE(a.find("</svg>"), std::string::npos);
    EXPECT_NE(a.find("polyline"), std::string::npos);
}

TEST(Svg, EscapesTitle) {
    const std::string a = profile_svg(std::vector<Point2>{{0, 0}, {1, 0}}, "a < b & c");
    EXPECT_NE(a.find("a &lt; b &amp; c"), std::string::npos);
}
