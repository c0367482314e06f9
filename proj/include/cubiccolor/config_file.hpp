#pragma once

// On-disk configuration format (JSON).
//
//   {
//     "format_version": 1,
//     "precision": 128,                  // significant decimal digits
//     "n": 16,                           // optional: built as phi(i/n), i < n
//     "points": [["0", "1", "0"], ...],  // homogeneous (X, Y, Z) decimal strings
//     "coloring": [0, 0, 1, ...],        // optional, one color index per point
//     "color_names": ["red", ...],       // optional, one name per color
//     "map": [["1","0","0"], ...]        // optional 3x3 projective map
//   }

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubiccolor/curve_embedding.hpp"
#include "cubiccolor/errors.hpp"
#include "cubiccolor/hypergraph.hpp"
#include "cubiccolor/projective.hpp"

namespace cubiccolor {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kPrecisionEnvVar = "CUBICCOLOR_PRECISION";

// Default working precision, overridable through CUBICCOLOR_PRECISION.
inline Precision default_precision() {
    if (const char* env = std::getenv(kPrecisionEnvVar); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long digits = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || digits <= 0) {
            throw InvalidArgument(std::string(kPrecisionEnvVar) + " is not a positive integer: " + env);
        }
        Precision p(static_cast<int>(digits));
        p.require_valid();
        return p;
    }
    return Precision{};
}

inline std::vector<std::string> default_color_names(int k) {
    if (k == 3) {
        return {"red", "green", "blue"};
    }
    std::vector<std::string> names;
    for (int c = 0; c < k; ++c) {
        names.push_back("color" + std::to_string(c));
    }
    return names;
}

struct ConfigurationFile {
    PointConfiguration config;
    std::optional<Coloring> coloring;
    std::vector<std::string> color_names;
    std::optional<ProjectiveMap::Matrix> map;
};

namespace detail {

inline nlohmann::json encode_row(const Row& r, int digits) {
    return nlohmann::json::array({r[0].to_string(digits), r[1].to_string(digits), r[2].to_string(digits)});
}

inline Row decode_row(const nlohmann::json& j, Precision p, const std::string& what) {
    if (!j.is_array() || j.size() != 3) {
        throw ParseError(what + " must be an array of three decimal strings");
    }
    Row r;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_string()) {
            throw ParseError(what + " entries must be decimal strings");
        }
        r[i] = Real::parse(j[i].get<std::string>(), p);
    }
    return r;
}

}  // namespace detail

inline nlohmann::json to_json(const ConfigurationFile& file) {
    const int digits = file.config.precision.digits;
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["precision"] = digits;
    if (file.config.provenance) {
        j["n"] = *file.config.provenance;
    }
    auto points = nlohmann::json::array();
    for (const auto& p : file.config.points) {
        points.push_back(detail::encode_row(p.coords(), digits));
    }
    j["points"] = std::move(points);
    if (file.coloring) {
        j["coloring"] = file.coloring->colors();
        j["color_names"] = file.color_names.empty() ? default_color_names(file.coloring->k()) : file.color_names;
    }
    if (file.map) {
        auto rows = nlohmann::json::array();
        for (const auto& r : *file.map) {
            rows.push_back(detail::encode_row(r, digits));
        }
        j["map"] = std::move(rows);
    }
    return j;
}

inline ConfigurationFile from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ParseError("configuration must be a JSON object");
    }
    const int version = j.value("format_version", kFormatVersion);
    if (version != kFormatVersion) {
        throw ParseError("unsupported format_version " + std::to_string(version));
    }
    ConfigurationFile file;
    const Precision p(j.value("precision", default_precision().digits));
    try {
        p.require_valid();
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
    file.config.precision = p;
    if (j.contains("n")) {
        file.config.provenance = j.at("n").get<long>();
    }
    if (!j.contains("points") || !j.at("points").is_array()) {
        throw ParseError("missing \"points\" array");
    }
    for (const auto& row : j.at("points")) {
        Row r = detail::decode_row(row, p, "point");
        try {
            file.config.points.emplace_back(std::move(r[0]), std::move(r[1]), std::move(r[2]));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    }
    if (j.contains("color_names")) {
        file.color_names = j.at("color_names").get<std::vector<std::string>>();
    }
    if (j.contains("coloring")) {
        auto colors = j.at("coloring").get<std::vector<int>>();
        if (colors.size() != file.config.size()) {
            throw ParseError("coloring has " + std::to_string(colors.size()) + " entries for " +
                             std::to_string(file.config.size()) + " points");
        }
        int k = static_cast<int>(file.color_names.size());
        for (int c : colors) {
            k = std::max(k, c + 1);
        }
        try {
            file.coloring = Coloring(std::max(k, 1), std::move(colors));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    }
    if (j.contains("map")) {
        const auto& rows = j.at("map");
        if (!rows.is_array() || rows.size() != 3) {
            throw ParseError("map must have three rows");
        }
        file.map = ProjectiveMap::Matrix{detail::decode_row(rows[0], p, "map row"),
                                         detail::decode_row(rows[1], p, "map row"),
                                         detail::decode_row(rows[2], p, "map row")};
    }
    return file;
}

inline ConfigurationFile read_configuration(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        return from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

inline void write_configuration(const ConfigurationFile& file, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write " + path.string());
    }
    out << to_json(file).dump(2) << '\n';
}

}  // namespace cubiccolor
