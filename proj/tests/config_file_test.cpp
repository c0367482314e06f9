#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cubiccolor/config_file.hpp"
#include "cubiccolor/group_model.hpp"
#include "cubiccolor/svg.hpp"

using namespace cubiccolor;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "cubiccolor_config_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

ConfigurationFile sixteen() {
    ConfigurationFile f;
    f.config = generate_counterexample(16);
    f.coloring = thirds_coloring(16);
    return f;
}

}  // namespace

TEST(ConfigFile, RoundTripKeepsPointsAndColoring) {
    for (long n : {2L, 16L, 77L}) {
        ConfigurationFile f;
        f.config = generate_counterexample(n);
        f.coloring = thirds_coloring(n);
        const auto path = scratch("round_trip.json");
        write_configuration(f, path);
        const auto back = read_configuration(path);
        ASSERT_EQ(back.config.size(), f.config.size());
        EXPECT_EQ(back.config.provenance, n);
        EXPECT_EQ(back.config.precision, f.config.precision);
        EXPECT_EQ(back.coloring, f.coloring);
        EXPECT_EQ(back.color_names, (std::vector<std::string>{"red", "green", "blue"}));
        const Real tol = default_tolerance(f.config.precision);
        for (std::size_t i = 0; i < f.config.size(); ++i) {
            EXPECT_TRUE(back.config.points[i].approx_equal(f.config.points[i], tol)) << n << " " << i;
        }
    }
}

TEST(ConfigFile, NumbersAreDecimalStrings) {
    const auto j = to_json(sixteen());
    EXPECT_EQ(j["format_version"], 1);
    EXPECT_EQ(j["precision"], 128);
    EXPECT_EQ(j["n"], 16);
    EXPECT_EQ(j["points"][0], nlohmann::json::array({"0", "1", "0"}));
    EXPECT_EQ(j["points"][4], nlohmann::json::array({"2", "2", "1"}));
    EXPECT_TRUE(j["points"][1][0].is_string());
    EXPECT_EQ(j["coloring"][0], 0);
}

TEST(ConfigFile, RejectsMalformedInput) {
    auto expect_parse_error = [](const nlohmann::json& j) { EXPECT_THROW(from_json(j), ParseError) << j.dump(); };
    expect_parse_error(nlohmann::json::array());
    expect_parse_error({{"format_version", 2}, {"points", nlohmann::json::array()}});
    expect_parse_error({{"precision", 128}});
    expect_parse_error({{"points", {{"1", "2"}}}});
    expect_parse_error({{"points", {{"1", "x", "1"}}}});
    expect_parse_error({{"points", {{"0", "0", "0"}}}});
    expect_parse_error({{"points", {{1, 2, 3}}}});
    expect_parse_error({{"precision", 10}, {"points", nlohmann::json::array()}});
    expect_parse_error({{"points", {{"1", "2", "1"}}}, {"coloring", {0, 1}}});
    expect_parse_error({{"points", {{"1", "2", "1"}}}, {"coloring", {-1}}});
    EXPECT_THROW(read_configuration(scratch("does_not_exist.json")), ParseError);
    const auto bad = scratch("bad.json");
    std::ofstream(bad) << "{ not json";
    EXPECT_THROW(read_configuration(bad), ParseError);
}

TEST(ConfigFile, PrecisionEnvironmentOverride) {
    ::setenv(kPrecisionEnvVar, "64", 1);
    EXPECT_EQ(default_precision().digits, 64);
    const auto f = from_json({{"points", {{"1", "2", "1"}}}});
    EXPECT_EQ(f.config.precision.digits, 64);
    ::setenv(kPrecisionEnvVar, "12", 1);
    EXPECT_THROW(default_precision(), InvalidArgument);
    ::setenv(kPrecisionEnvVar, "abc", 1);
    EXPECT_THROW(default_precision(), InvalidArgument);
    ::unsetenv(kPrecisionEnvVar);
    EXPECT_EQ(default_precision().digits, 128);
}

TEST(Svg, FullViewHasAllMarkersAndFrame) {
    const auto svg = render_svg(sixteen());
    std::size_t circles = 0;
    for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
    EXPECT_EQ(circles, 16u);  // 15 finite + infinity marker
    EXPECT_NE(svg.find("class=\"infinity\""), std::string::npos);
    EXPECT_NE(svg.find("O (at infinity)"), std::string::npos);
    EXPECT_NE(svg.find("class=\"frame\""), std::string::npos);
    EXPECT_NE(svg.find("class=\"curve\""), std::string::npos);
    // the point at infinity is red
    const auto inf = svg.find("data-index=\"0\"");
    ASSERT_NE(inf, std::string::npos);
    EXPECT_NE(svg.substr(inf, 120).find("fill=\"red\""), std::string::npos);
    EXPECT_EQ(svg, render_svg(sixteen()));
}

TEST(Svg, ZoomWindowShowsSubset) {
    PlotOptions opts;
    opts.window = parse_window("0,8,-18,18");
    const auto svg = render_svg(sixteen(), opts);
    std::size_t circles = 0;
    for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
    EXPECT_EQ(circles, 13u);  // phi(i/16) for i = 2..14
    EXPECT_EQ(svg.find("class=\"infinity\""), std::string::npos);
    EXPECT_EQ(svg.find("class=\"frame\""), std::string::npos);
}

TEST(Svg, EmptyWindowIsValidAxesOnly) {
    PlotOptions opts;
    opts.window = parse_window("-5,-4,100,200");
    const auto svg = render_svg(sixteen(), opts);
    EXPECT_EQ(svg.find("<circle"), std::string::npos);
    EXPECT_NE(svg.find("class=\"axes\""), std::string::npos);
    EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(Svg, WindowParsing) {
    EXPECT_THROW(parse_window("1,2,3"), ParseError);
    EXPECT_THROW(parse_window("2,1,0,1"), ParseError);
    EXPECT_THROW(parse_window("0,1,0,1,5"), ParseError);
    const auto w = parse_window("-1.5,2,3,4.25");
    EXPECT_DOUBLE_EQ(w.x_min, -1.5);
    EXPECT_DOUBLE_EQ(w.y_max, 4.25);
}
