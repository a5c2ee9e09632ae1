#pragma once

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "pmolp/core.hpp"
#include "pmolp/efftest.hpp"
#include "pmolp/enumerate.hpp"
#include "pmolp/error.hpp"
#include "pmolp/scalarize.hpp"

// Reading matrices and points, writing reports. Every index that crosses
// this boundary is 1-based.
namespace pmolp::io {

enum class MatrixFormat { Auto, Json, Csv };

/// 17 significant digits; negative zero prints as 0.
inline std::string format_number(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

/// A decimal literal or a fraction "p/q".
inline double parse_number(std::string_view token) {
    token = trim(token);
    if (token.empty()) throw InvalidInput("empty number");
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        const double den = parse_number(token.substr(slash + 1));
        if (den == 0.0) throw InvalidInput("zero denominator in '" + std::string(token) + "'");
        return parse_number(token.substr(0, slash)) / den;
    }
    const std::string s(token);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw InvalidInput("not a finite number: '" + s + "'");
    }
    return v;
}

inline std::vector<double> parse_list(std::string_view literal) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = literal.find(',', start);
        out.push_back(parse_number(literal.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline SimplexPoint parse_point(std::string_view literal, const Tolerances& tol = {}) {
    return SimplexPoint(parse_list(literal), tol);
}

inline WeightVector parse_weights(std::string_view literal) {
    return WeightVector(parse_list(literal));
}

/// {"k": K, "n": N, "C": [[...], ...]}; k and n are optional but must match C
/// when present.
inline CriteriaMatrix parse_matrix_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON matrix: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("C") || !doc["C"].is_array()) {
        throw InvalidInput("JSON matrix must be an object with an array field \"C\"");
    }
    std::vector<std::vector<double>> rows;
    for (const auto& r : doc["C"]) {
        if (!r.is_array()) throw InvalidInput("each row of \"C\" must be an array");
        auto& row = rows.emplace_back();
        for (const auto& v : r) {
            if (!v.is_number()) throw InvalidInput("matrix entries must be numbers");
            row.push_back(v.get<double>());
        }
    }
    auto c = CriteriaMatrix::from_rows(rows);
    auto expect = [&](const char* key, std::size_t actual) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_number_unsigned()) {
            throw InvalidInput(std::string("\"") + key + "\" must be a nonnegative integer");
        }
        if (doc[key].get<std::size_t>() != actual) {
            throw DimensionMismatch(std::string("declared ") + key + " = " +
                                    std::to_string(doc[key].get<std::size_t>()) +
                                    " but C has " + std::to_string(actual));
        }
    };
    expect("k", c.criteria());
    expect("n", c.columns());
    return c;
}

/// One criterion per line, comma separated, no header. Blank lines and lines
/// starting with '#' are skipped.
inline CriteriaMatrix parse_matrix_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        const auto line = trim(text.substr(start, nl - start));
        if (!line.empty() && line.front() != '#') rows.push_back(parse_list(line));
        start = nl + 1;
    }
    return CriteriaMatrix::from_rows(rows);
}

inline MatrixFormat sniff_format(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot != std::string::npos && path.substr(dot) == ".json") return MatrixFormat::Json;
    return MatrixFormat::Csv;
}

inline CriteriaMatrix load_matrix(const std::string& path, MatrixFormat fmt = MatrixFormat::Auto) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open matrix file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (fmt == MatrixFormat::Auto) fmt = sniff_format(path);
    return fmt == MatrixFormat::Json ? parse_matrix_json(ss.str()) : parse_matrix_csv(ss.str());
}

// ---------------------------------------------------------------------------
// Output

inline std::string json_numbers(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_number(v[i]);
    }
    return s + "]";
}

inline std::string json_indices(const std::vector<std::size_t>& zero_based) {
    std::string s = "[";
    for (std::size_t i = 0; i < zero_based.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(zero_based[i] + 1);
    }
    return s + "]";
}

inline std::string json_string(std::string_view v) {
    return nlohmann::json(std::string(v)).dump();
}

/// Single-line JSON object; key order is fixed.
inline std::string report_json(const EfficiencyReport& r) {
    std::string s = "{";
    s += "\"point\":" + json_numbers({r.point.coords().begin(), r.point.coords().end()});
    s += ",\"class\":" + json_string(to_string(r.point_class.kind));
    s += ",\"support\":" + json_indices(r.point_class.support.indices());
    s += ",\"verdict\":" + json_string(to_string(r.verdict));
    s += ",\"test\":" + json_string(to_string(r.test));
    s += ",\"value\":" + format_number(r.value);
    s += ",\"certificate\":" + (r.certificate ? json_numbers(r.certificate->values()) : "null");
    s += ",\"face\":";
    if (r.face) {
        s += "{\"kind\":" + json_string(to_string(r.face->kind)) +
             ",\"support\":" + json_indices(r.face->support.indices()) + "}";
    } else {
        s += "null";
    }
    s += ",\"clamped\":" + json_indices(r.near_zero);
    return s + "}";
}

inline std::string text_numbers(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += format_number(v[i]);
    }
    return s;
}

inline std::string text_indices(const std::vector<std::size_t>& zero_based) {
    std::string s = "{";
    for (std::size_t i = 0; i < zero_based.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(zero_based[i] + 1);
    }
    return s + "}";
}

inline std::string report_text(const EfficiencyReport& r) {
    std::string s;
    s += "point:       " + text_numbers({r.point.coords().begin(), r.point.coords().end()}) + "\n";
    s += std::string("class:       ") + to_string(r.point_class.kind) + " " +
         text_indices(r.point_class.support.indices()) + "\n";
    s += std::string("verdict:     ") + to_string(r.verdict) + "\n";
    s += std::string("test:        ") + to_string(r.test) + "\n";
    s += "value:       " + format_number(r.value) + "\n";
    s += "certificate: " + (r.certificate ? text_numbers(r.certificate->values()) : "none") + "\n";
    s += "face:        " +
         (r.face ? std::string(to_string(r.face->kind)) + " " + text_indices(r.face->support.indices())
                 : std::string("none")) +
         "\n";
    if (!r.near_zero.empty()) {
        s += "clamped:     " + text_indices(r.near_zero) + " treated as zero\n";
    }
    return s;
}

inline std::string structure_json(const EfficientStructure& e) {
    std::string s = "{";
    s += std::string("\"full\":") + (e.full ? "true" : "false");
    s += ",\"vertices\":" + json_indices(e.vertices);
    s += ",\"faces\":[";
    for (std::size_t i = 0; i < e.faces.size(); ++i) {
        if (i) s += ',';
        s += json_indices(e.faces[i].indices());
    }
    s += "]";
    s += std::string(",\"exhaustive\":") + (e.exhaustive ? "true" : "false");
    s += ",\"scanned_faces\":" + std::to_string(e.scanned_faces);
    s += ",\"warnings\":[";
    for (std::size_t i = 0; i < e.warnings.size(); ++i) {
        if (i) s += ',';
        s += json_string(e.warnings[i]);
    }
    return s + "]}";
}

inline std::string structure_text(const EfficientStructure& e) {
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(v[i] + 1);
        }
        return s + "]";
    };
    std::string s;
    s += std::string("full:       ") + (e.full ? "true" : "false") + "\n";
    s += "vertices:   " + list(e.vertices) + "\n";
    s += "faces:      [";
    for (std::size_t i = 0; i < e.faces.size(); ++i) {
        if (i) s += ", ";
        s += list(e.faces[i].indices());
    }
    s += "]\n";
    s += std::string("exhaustive: ") + (e.exhaustive ? "true" : "false") + "\n";
    for (const auto& w : e.warnings) s += "warning:    " + w + "\n";
    return s;
}

}  // namespace pmolp::io
