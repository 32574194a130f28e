// Copyright 2026 The gaussprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON map and state files.
//
// Map file:   {"format_version": 1, "n": 1, "K": [[..],[..]], "alpha": [[..],[..]], "y0": [..]}
// State file: {"format_version": 1, "n": 1, "mean": [..], "cov": [[..],[..]]}
//
// Matrices are row-major, either as a list of rows or as one flat list of
// (2n)² numbers. Quadratures are interleaved (Q1, P1, Q2, P2, ...).

#pragma once

#include "gaussprobe/gaussian.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gaussprobe::io {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Unreadable file, malformed JSON, or a document that does not match the schema.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json vector_to_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

/// [re₀, im₀, re₁, im₁, ...]
inline json complex_to_json(const CVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i).real());
        out.push_back(v(i).imag());
    }
    return out;
}

namespace detail {

inline double number(const json& j, const std::string& where) {
    if (!j.is_number()) throw SchemaError(where + ": expected a number");
    return j.get<double>();
}

}  // namespace detail

inline Vector json_to_vector(const json& j, Eigen::Index len, const std::string& name) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != len) {
        throw SchemaError(name + ": expected an array of length " + std::to_string(len));
    }
    Vector v(len);
    for (Eigen::Index i = 0; i < len; ++i) v(i) = detail::number(j[static_cast<std::size_t>(i)], name);
    return v;
}

inline Matrix json_to_matrix(const json& j, Eigen::Index dim, const std::string& name) {
    if (!j.is_array()) throw SchemaError(name + ": expected an array");
    Matrix m(dim, dim);
    const auto d = static_cast<std::size_t>(dim);
    if (j.size() == d * d && (d == 1 || !j.front().is_array())) {
        for (std::size_t k = 0; k < d * d; ++k) {
            m(static_cast<Eigen::Index>(k / d), static_cast<Eigen::Index>(k % d)) = detail::number(j[k], name);
        }
        return m;
    }
    if (j.size() != d) throw SchemaError(name + ": expected " + std::to_string(dim) + " rows");
    for (std::size_t i = 0; i < d; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != d) {
            throw SchemaError(name + ": row " + std::to_string(i) + " must have " + std::to_string(dim) +
                              " entries");
        }
        for (std::size_t k = 0; k < d; ++k) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = detail::number(row[k], name);
        }
    }
    return m;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

inline int read_modes(const json& doc) {
    if (!doc.is_object()) throw SchemaError("top level must be an object");
    if (doc.contains("format_version") && doc["format_version"] != kFormatVersion) {
        throw SchemaError("unsupported format_version");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() < 1) {
        throw SchemaError("n must be a positive integer");
    }
    return doc["n"].get<int>();
}

inline GaussianMap parse_map(const json& doc) {
    const int n = read_modes(doc);
    for (const char* key : {"K", "alpha", "y0"}) {
        if (!doc.contains(key)) throw SchemaError(std::string("missing field ") + key);
    }
    Matrix k = json_to_matrix(doc["K"], 2 * n, "K");
    Matrix a = json_to_matrix(doc["alpha"], 2 * n, "alpha");
    Vector y = json_to_vector(doc["y0"], 2 * n, "y0");
    if (!is_symmetric(a, 1e-9)) throw SchemaError("alpha is not symmetric");
    return GaussianMap(std::move(k), std::move(a), std::move(y));
}

/// State files may hold unphysical candidates, so they parse to raw moments.
inline Moments parse_state(const json& doc) {
    const int n = read_modes(doc);
    for (const char* key : {"mean", "cov"}) {
        if (!doc.contains(key)) throw SchemaError(std::string("missing field ") + key);
    }
    Moments mo{json_to_vector(doc["mean"], 2 * n, "mean"), json_to_matrix(doc["cov"], 2 * n, "cov")};
    if (!is_symmetric(mo.cov, 1e-9)) throw SchemaError("cov is not symmetric");
    return mo;
}

inline GaussianMap read_map_file(const std::string& path) { return parse_map(read_json_file(path)); }
inline Moments read_state_file(const std::string& path) { return parse_state(read_json_file(path)); }

inline json map_to_json(const GaussianMap& map) {
    return json{{"format_version", kFormatVersion},
                {"n", map.modes()},
                {"K", matrix_to_json(map.K())},
                {"alpha", matrix_to_json(map.alpha())},
                {"y0", vector_to_json(map.y0())}};
}

inline json state_to_json(const Moments& mo) {
    return json{{"format_version", kFormatVersion},
                {"n", mo.mean.size() / 2},
                {"mean", vector_to_json(mo.mean)},
                {"cov", matrix_to_json(mo.cov)}};
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << text;
    if (!out) throw SchemaError("error writing " + path);
}

/// 17 significant digits: round-trip exact for doubles.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace gaussprobe::io
