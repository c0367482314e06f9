#pragma once

// Command implementations behind the cubiccolor tool. Each returns the process
// exit code: 0 success, 1 negative verification or search result, 2 input
// error, 3 search budget exhausted.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "cubiccolor/coloring_search.hpp"
#include "cubiccolor/config_file.hpp"
#include "cubiccolor/curve_embedding.hpp"
#include "cubiccolor/geometry.hpp"
#include "cubiccolor/group_model.hpp"
#include "cubiccolor/projective.hpp"
#include "cubiccolor/svg.hpp"

namespace cubiccolor {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitInputError = 2, kExitBudget = 3 };

struct CommandStreams {
    std::ostream& out = std::cout;
    std::ostream& err = std::cerr;
};

namespace detail {

// Maps input problems to exit code 2.
inline int guarded(CommandStreams io, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        io.err << "error: " << e.what() << '\n';
    } catch (const InvalidArgument& e) {
        io.err << "error: " << e.what() << '\n';
    } catch (const DegenerateInput& e) {
        io.err << "error: " << e.what() << '\n';
    } catch (const PrecisionTooLow& e) {
        io.err << "error: " << e.what() << '\n';
    } catch (const nlohmann::json::exception& e) {
        io.err << "error: " << e.what() << '\n';
    }
    return kExitInputError;
}

inline Real tolerance_for(const ConfigurationFile& file, const std::optional<std::string>& tol) {
    if (tol) {
        return Real::parse(*tol, file.config.precision);
    }
    return default_tolerance(file.config.precision);
}

inline std::string join(const Edge& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        s += (i ? " " : "") + std::to_string(e[i]);
    }
    return s;
}

}  // namespace detail

inline int cmd_generate(long n, Precision precision, const std::filesystem::path& out_path,
                        CommandStreams io = {}) {
    return detail::guarded(io, [&] {
        ConfigurationFile file;
        file.config = generate_counterexample(n, precision);
        file.coloring = thirds_coloring(n);
        file.color_names = default_color_names(3);
        write_configuration(file, out_path);
        io.out << "wrote " << n << " points to " << out_path.string() << '\n';
        return kExitOk;
    });
}

struct LinesOptions {
    std::optional<std::string> tol;
    bool json = false;
};

inline int cmd_lines(const std::filesystem::path& in_path, const LinesOptions& opts = {},
                     CommandStreams io = {}) {
    return detail::guarded(io, [&] {
        const auto file = read_configuration(in_path);
        const auto h = enumerate_lines(file.config, detail::tolerance_for(file, opts.tol));
        const auto counts = h.size_counts();
        if (opts.json) {
            nlohmann::json j;
            j["points"] = h.vertex_count;
            j["lines"] = h.edges;
            nlohmann::json c = nlohmann::json::object();
            for (const auto& [size, count] : counts) {
                c[std::to_string(size)] = count;
            }
            j["counts"] = std::move(c);
            io.out << j.dump() << '\n';
        } else {
            for (const auto& e : h.edges) {
                io.out << detail::join(e) << "  (size " << e.size() << ")\n";
            }
            io.out << "lines: " << h.edges.size();
            for (const auto& [size, count] : counts) {
                io.out << "  L" << size << "=" << count;
            }
            io.out << '\n';
        }
        return kExitOk;
    });
}

struct VerifyOptions {
    std::optional<std::string> tol;
    std::size_t max_line_size = 3;
};

inline int cmd_verify(const std::filesystem::path& in_path, const VerifyOptions& opts = {},
                      CommandStreams io = {}) {
    return detail::guarded(io, [&] {
        const auto file = read_configuration(in_path);
        if (!file.coloring) {
            throw ParseError("file has no coloring to verify");
        }
        const auto& coloring = *file.coloring;
        const auto h = enumerate_lines(file.config, detail::tolerance_for(file, opts.tol));
        bool pass = true;

        const std::size_t longest = h.max_edge_size();
        io.out << "points: " << h.vertex_count << ", lines: " << h.edges.size() << ", max line size: " << longest
               << '\n';
        if (file.config.provenance && longest > opts.max_line_size) {
            pass = false;
            io.out << "FAIL max-collinear: a line has " << longest << " points (limit " << opts.max_line_size
                   << ")\n";
            for (const auto& e : h.edges) {
                if (e.size() > opts.max_line_size) io.out << "  line: " << detail::join(e) << '\n';
            }
        }

        const auto geometric = verify_no_monochromatic(h, coloring);
        io.out << "geometric: " << (geometric.pass() ? "no monochromatic line" : "monochromatic lines found") << '\n';
        for (const auto& e : geometric.monochromatic) {
            io.out << "  monochromatic: " << detail::join(e) << '\n';
        }
        pass = pass && geometric.pass();

        if (file.config.provenance) {
            const long n = *file.config.provenance;
            if (n < 2 || static_cast<std::size_t>(n) != file.config.size()) {
                pass = false;
                io.out << "FAIL provenance: n = " << n << " but the file has " << file.config.size() << " points\n";
            } else {
                const auto group = verify_no_monochromatic_group(n, coloring);
                io.out << "group model: " << (group.pass() ? "no monochromatic line" : "monochromatic lines found")
                       << '\n';
                for (const auto& e : group.monochromatic) {
                    io.out << "  monochromatic: " << detail::join(e) << '\n';
                }
                pass = pass && group.pass();
                const bool same_lines = h == group_hypergraph(n);
                io.out << "group model lines match geometry: " << (same_lines ? "yes" : "no") << '\n';
                pass = pass && same_lines;
            }
        }
        io.out << (pass ? "PASS" : "FAIL") << '\n';
        return pass ? kExitOk : kExitNegative;
    });
}

struct TransformOptions {
    std::optional<std::string> tol;
    std::uint64_t seed = kDefaultLineSeed;
};

inline int cmd_transform(const std::filesystem::path& in_path, const std::filesystem::path& out_path,
                         const TransformOptions& opts = {}, CommandStreams io = {}) {
    return detail::guarded(io, [&] {
        const auto file = read_configuration(in_path);
        const Real tol = detail::tolerance_for(file, opts.tol);
        const Row line = find_missing_line(file.config, opts.seed);
        auto image = send_to_infinity(file.config, line);
        const auto before = enumerate_lines(file.config, tol);
        LineHypergraph after;
        try {
            after = enumerate_lines(image.config, tol);
        } catch (const DegenerateInput& e) {
            io.err << "error: transformed configuration lost resolution: " << e.what() << '\n';
            return kExitNegative;
        }
        if (!(before == after)) {
            io.err << "error: line structure changed under the transform; raise the precision\n";
            return kExitNegative;
        }
        ConfigurationFile out{std::move(image.config), file.coloring, file.color_names, image.map.matrix()};
        write_configuration(out, out_path);
        const int digits = file.config.precision.digits;
        io.out << "missing line: (" << line[0].to_string(digits) << " : " << line[1].to_string(digits) << " : "
               << line[2].to_string(digits) << ")\n"
               << "wrote " << out.config.size() << " affine points to " << out_path.string() << '\n';
        return kExitOk;
    });
}

struct SearchOptions {
    int k = 3;
    std::uint64_t budget = kDefaultNodeBudget;
    std::optional<std::string> tol;
    std::optional<std::filesystem::path> witness_out;
};

inline int cmd_search(const std::filesystem::path& in_path, const SearchOptions& opts = {},
                      CommandStreams io = {}) {
    return detail::guarded(io, [&] {
        const auto file = read_configuration(in_path);
        const auto h = enumerate_lines(file.config, detail::tolerance_for(file, opts.tol));
        const auto outcome = search_coloring(h, opts.k, opts.budget);
        io.out << to_string(outcome.status) << " (k=" << opts.k << ", nodes=" << outcome.nodes << ")\n";
        if (outcome.witness) {
            io.out << "witness:";
            for (int c : outcome.witness->colors()) io.out << ' ' << c;
            io.out << '\n';
            if (opts.witness_out) {
                ConfigurationFile out = file;
                out.coloring = Coloring(opts.k, outcome.witness->colors());
                out.color_names = default_color_names(opts.k);
                write_configuration(out, *opts.witness_out);
            }
        }
        switch (outcome.status) {
            case SearchStatus::kSatisfiable: return kExitOk;
            case SearchStatus::kUnsatisfiable: return kExitNegative;
            case SearchStatus::kBudgetExceeded: return kExitBudget;
        }
        return kExitNegative;
    });
}

inline int cmd_plot(const std::filesystem::path& in_path, const std::filesystem::path& out_svg,
                    const PlotOptions& opts = {}, CommandStreams io = {}) {
    return detail::guarded(io, [&] {
        const auto file = read_configuration(in_path);
        std::ofstream out(out_svg, std::ios::binary);
        if (!out) {
            throw ParseError("cannot write " + out_svg.string());
        }
        out << render_svg(file, opts);
        io.out << "wrote " << out_svg.string() << '\n';
        return kExitOk;
    });
}

}  // namespace cubiccolor
