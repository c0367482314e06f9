#pragma once

// SVG 1.1 scatter plot of a colored configuration over the cubic
// y^2 = x^3 - x^2. Output bytes depend only on the input and the options.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubiccolor/config_file.hpp"

namespace cubiccolor {

struct PlotWindow {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    bool contains(double x, double y) const { return x >= x_min && x <= x_max && y >= y_min && y <= y_max; }
    bool valid() const { return x_max > x_min && y_max > y_min; }
};

// Frame drawn on the full view when none is given: the part of the curve
// near the node, where most points of small configurations sit.
inline constexpr PlotWindow kDefaultFrame{0.0, 8.0, -18.0, 18.0};

struct PlotOptions {
    // Zoom: show only this region. Without it the view covers every finite point.
    std::optional<PlotWindow> window;
    // Rectangle outlined on the full view.
    std::optional<PlotWindow> frame = kDefaultFrame;
};

// Parses "xmin,xmax,ymin,ymax".
inline PlotWindow parse_window(const std::string& text) {
    PlotWindow w;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &w.x_min, &w.x_max, &w.y_min, &w.y_max, &tail) != 4 ||
        !w.valid()) {
        throw ParseError("window must be xmin,xmax,ymin,ymax with xmin < xmax and ymin < ymax: " + text);
    }
    return w;
}

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    return s == "-0.00" ? "0.00" : s;
}

inline std::string css_color(const std::string& name, int index) {
    static const char* palette[] = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    if (name == "red" || name == "green" || name == "blue") {
        return name;
    }
    return palette[index % 10];
}

}  // namespace detail

inline std::string render_svg(const ConfigurationFile& file, const PlotOptions& opts = {}) {
    constexpr double kWidth = 720, kHeight = 540, kPad = 40, kSide = 120;
    const double plot_w = kWidth - 2 * kPad - kSide;
    const double plot_h = kHeight - 2 * kPad;

    struct Marker {
        double x, y;
        std::size_t index;
        int color;
    };
    std::vector<Marker> finite;
    std::optional<Marker> infinite;
    for (std::size_t i = 0; i < file.config.size(); ++i) {
        const auto& p = file.config.points[i];
        const int c = file.coloring ? (*file.coloring)[i] : -1;
        if (p.is_at_infinity()) {
            infinite = Marker{0, 0, i, c};
        } else {
            finite.push_back({p.x().to_double(), p.y().to_double(), i, c});
        }
    }

    PlotWindow view;
    if (opts.window) {
        view = *opts.window;
    } else if (finite.empty()) {
        view = {-1, 1, -1, 1};
    } else {
        view = {finite[0].x, finite[0].x, finite[0].y, finite[0].y};
        for (const auto& m : finite) {
            view.x_min = std::min(view.x_min, m.x);
            view.x_max = std::max(view.x_max, m.x);
            view.y_min = std::min(view.y_min, m.y);
            view.y_max = std::max(view.y_max, m.y);
        }
        const double dx = std::max(view.x_max - view.x_min, 1.0) * 0.05;
        const double dy = std::max(view.y_max - view.y_min, 1.0) * 0.05;
        view = {view.x_min - dx, view.x_max + dx, view.y_min - dy, view.y_max + dy};
    }
    auto px = [&](double x) { return kPad + (x - view.x_min) / (view.x_max - view.x_min) * plot_w; };
    auto py = [&](double y) { return kPad + (view.y_max - y) / (view.y_max - view.y_min) * plot_h; };

    const auto names = file.coloring
                           ? (file.color_names.empty() ? default_color_names(file.coloring->k()) : file.color_names)
                           : std::vector<std::string>{};
    auto color_of = [&](int c) {
        if (c < 0) return std::string("black");
        const std::string name = c < static_cast<int>(names.size()) ? names[c] : "";
        return detail::css_color(name, c);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "<defs><clipPath id=\"plot\"><rect x=\"" << kPad << "\" y=\"" << kPad << "\" width=\""
        << detail::fmt(plot_w) << "\" height=\"" << detail::fmt(plot_h) << "\"/></clipPath></defs>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    svg << "<g class=\"axes\" stroke=\"#444\" fill=\"none\" stroke-width=\"1\">\n"
        << "<rect x=\"" << kPad << "\" y=\"" << kPad << "\" width=\"" << detail::fmt(plot_w) << "\" height=\""
        << detail::fmt(plot_h) << "\"/>\n";
    if (view.x_min <= 0 && view.x_max >= 0) {
        svg << "<line x1=\"" << detail::fmt(px(0)) << "\" y1=\"" << kPad << "\" x2=\"" << detail::fmt(px(0))
            << "\" y2=\"" << kPad + plot_h << "\" stroke=\"#bbb\"/>\n";
    }
    if (view.y_min <= 0 && view.y_max >= 0) {
        svg << "<line x1=\"" << kPad << "\" y1=\"" << detail::fmt(py(0)) << "\" x2=\"" << kPad + plot_w
            << "\" y2=\"" << detail::fmt(py(0)) << "\" stroke=\"#bbb\"/>\n";
    }
    svg << "</g>\n"
        << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n"
        << "<text x=\"" << kPad << "\" y=\"" << kPad + plot_h + 14 << "\">" << detail::fmt(view.x_min) << "</text>\n"
        << "<text x=\"" << kPad + plot_w << "\" y=\"" << kPad + plot_h + 14 << "\" text-anchor=\"end\">"
        << detail::fmt(view.x_max) << "</text>\n"
        << "<text x=\"" << kPad - 4 << "\" y=\"" << kPad + plot_h << "\" text-anchor=\"end\">"
        << detail::fmt(view.y_min) << "</text>\n"
        << "<text x=\"" << kPad - 4 << "\" y=\"" << kPad + 8 << "\" text-anchor=\"end\">"
        << detail::fmt(view.y_max) << "</text>\n"
        << "</g>\n";

    // both branches y = +-x sqrt(x - 1), x >= 1
    if (view.x_max > 1.0) {
        constexpr int kSamples = 400;
        const double x0 = std::max(1.0, view.x_min);
        for (int sign : {1, -1}) {
            svg << "<polyline class=\"curve\" clip-path=\"url(#plot)\" fill=\"none\" stroke=\"#999\" "
                   "stroke-width=\"1\" points=\"";
            for (int s = 0; s <= kSamples; ++s) {
                // denser near the node at x = 1 where the branches turn
                const double t = static_cast<double>(s) / kSamples;
                const double x = x0 + (view.x_max - x0) * t * t;
                const double y = sign * x * std::sqrt(std::max(0.0, x - 1.0));
                const double clamped = std::clamp(py(y), -10 * kHeight, 11 * kHeight);
                svg << (s ? " " : "") << detail::fmt(px(x)) << ',' << detail::fmt(clamped);
            }
            svg << "\"/>\n";
        }
    }

    if (!opts.window && opts.frame && opts.frame->valid()) {
        const auto& f = *opts.frame;
        svg << "<rect class=\"frame\" clip-path=\"url(#plot)\" x=\"" << detail::fmt(px(f.x_min)) << "\" y=\""
            << detail::fmt(py(f.y_max)) << "\" width=\"" << detail::fmt(px(f.x_max) - px(f.x_min))
            << "\" height=\"" << detail::fmt(py(f.y_min) - py(f.y_max))
            << "\" fill=\"none\" stroke=\"#333\" stroke-dasharray=\"4 3\"/>\n";
    }

    svg << "<g class=\"points\" stroke=\"black\" stroke-width=\"0.5\">\n";
    for (const auto& m : finite) {
        if (opts.window && !opts.window->contains(m.x, m.y)) {
            continue;
        }
        svg << "<circle data-index=\"" << m.index << "\" cx=\"" << detail::fmt(px(m.x)) << "\" cy=\""
            << detail::fmt(py(m.y)) << "\" r=\"4\" fill=\"" << color_of(m.color) << "\"/>\n";
    }
    svg << "</g>\n";

    if (infinite && !opts.window) {
        const double cx = kWidth - kPad - kSide / 2;
        svg << "<g class=\"infinity\" font-family=\"sans-serif\" font-size=\"11\">\n"
            << "<circle data-index=\"" << infinite->index << "\" cx=\"" << detail::fmt(cx) << "\" cy=\""
            << kPad + 10 << "\" r=\"5\" fill=\"" << color_of(infinite->color)
            << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n"
            << "<text x=\"" << detail::fmt(cx) << "\" y=\"" << kPad + 30
            << "\" text-anchor=\"middle\">O (at infinity)</text>\n"
            << "</g>\n";
    }

    if (file.config.provenance) {
        svg << "<text x=\"" << kPad << "\" y=\"" << kPad - 12
            << "\" font-family=\"sans-serif\" font-size=\"12\">n = " << *file.config.provenance << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cubiccolor
