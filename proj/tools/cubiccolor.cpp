#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cubiccolor/commands.hpp"

using namespace cubiccolor;

int main(int argc, char** argv) {
    CLI::App app{"Colorings of point sets on the cubic y^2 = x^3 - x^2 with no monochromatic line"};
    app.require_subcommand(1);

    Precision precision;
    try {
        precision = default_precision();
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    long n = 0;
    int digits = precision.digits;
    std::string out;
    auto* generate = app.add_subcommand("generate", "write the n-point curve configuration with its thirds coloring");
    generate->add_option("--n", n, "number of points (>= 2)")->required();
    generate->add_option("--precision", digits, "working precision in decimal digits");
    generate->add_option("--out", out, "output JSON file")->required();

    std::string in;
    std::optional<std::string> tol;
    bool json = false;
    auto* lines = app.add_subcommand("lines", "list every maximal collinear subset");
    lines->add_option("input", in, "configuration file")->required();
    lines->add_option("--tol", tol, "collinearity threshold (decimal)");
    lines->add_flag("--json", json, "print JSON instead of text");

    auto* verify = app.add_subcommand("verify", "check the stored coloring has no monochromatic line");
    verify->add_option("input", in, "configuration file")->required();
    verify->add_option("--tol", tol, "collinearity threshold (decimal)");

    std::uint64_t seed = kDefaultLineSeed;
    auto* transform = app.add_subcommand("transform", "move the configuration into the affine plane");
    transform->add_option("input", in, "configuration file")->required();
    transform->add_option("--out", out, "output JSON file")->required();
    transform->add_option("--tol", tol, "collinearity threshold (decimal)");
    transform->add_option("--seed", seed, "seed for the random-line fallback");

    int k = 3;
    std::uint64_t budget = kDefaultNodeBudget;
    std::optional<std::string> witness_out;
    auto* search = app.add_subcommand("search", "decide whether a k-coloring with no monochromatic line exists");
    search->add_option("input", in, "configuration file")->required();
    search->add_option("--k", k, "number of colors");
    search->add_option("--budget", budget, "search node limit");
    search->add_option("--tol", tol, "collinearity threshold (decimal)");
    search->add_option("--out", witness_out, "write the configuration with the witness coloring here");

    std::optional<std::string> window;
    std::optional<std::string> frame;
    auto* plot = app.add_subcommand("plot", "render the colored configuration as SVG");
    plot->add_option("input", in, "configuration file")->required();
    plot->add_option("--out", out, "output SVG file")->required();
    plot->add_option("--window", window, "zoom to xmin,xmax,ymin,ymax");
    plot->add_option("--frame", frame, "rectangle xmin,xmax,ymin,ymax outlined on the full view");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (generate->parsed()) {
        return cmd_generate(n, Precision(digits), out);
    }
    if (lines->parsed()) {
        return cmd_lines(in, {tol, json});
    }
    if (verify->parsed()) {
        return cmd_verify(in, {tol});
    }
    if (transform->parsed()) {
        return cmd_transform(in, out, {tol, seed});
    }
    if (search->parsed()) {
        SearchOptions opts{k, budget, tol, std::nullopt};
        if (witness_out) opts.witness_out = *witness_out;
        return cmd_search(in, opts);
    }
    if (plot->parsed()) {
        PlotOptions opts;
        try {
            if (window) opts.window = parse_window(*window);
            if (frame) opts.frame = parse_window(*frame);
        } catch (const ParseError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitInputError;
        }
        return cmd_plot(in, out, opts);
    }
    return kExitInputError;
}
