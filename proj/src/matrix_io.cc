// Copyright 2026 The antinorm Authors
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

#include "antinorm/matrix_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "antinorm/error.h"

namespace antinorm {

namespace {

using nlohmann::json;

Complex parse_entry(const json &pair) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw Error(ErrorKind::Parse, "entry must be a [re, im] pair of numbers, got " + pair.dump());
    }
    double re = pair[0].get<double>();
    double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw Error(ErrorKind::Parse, "entry is not finite: " + pair.dump());
    }
    return {re, im};
}

Eigen::Index read_count(const json &doc, const char *key) {
    if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 0) {
        throw Error(ErrorKind::Parse, std::string("missing or invalid \"") + key + "\"");
    }
    return static_cast<Eigen::Index>(doc[key].get<long long>());
}

}  // namespace

std::string format_double(double x) {
    if (x == 0.0 && std::signbit(x)) {
        // "-0" would read back as the integer 0.
        return "-0.0";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

MatrixFile parse_matrix_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorKind::Parse, "matrix document must be a JSON object");
    }
    const Eigen::Index rows = read_count(doc, "rows");
    const Eigen::Index cols = read_count(doc, "cols");
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw Error(ErrorKind::Parse, "missing \"entries\" array");
    }
    const json &entries = doc["entries"];

    MatrixFile out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw Error(ErrorKind::Parse, "\"name\" must be a string");
        }
        out.name = doc["name"].get<std::string>();
    }
    out.values.resize(rows, cols);

    // Nested rows when the first element is itself an array of pairs.
    bool nested = !entries.empty() && entries[0].is_array() && !entries[0].empty() && entries[0][0].is_array();
    if (rows * cols == 0) {
        nested = static_cast<Eigen::Index>(entries.size()) == rows && rows > 0;
    }
    if (nested) {
        if (static_cast<Eigen::Index>(entries.size()) != rows) {
            throw Error(ErrorKind::Parse, "expected " + std::to_string(rows) + " rows of entries, got " +
                                              std::to_string(entries.size()));
        }
        for (Eigen::Index i = 0; i < rows; ++i) {
            const json &row = entries[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
                throw Error(ErrorKind::Parse, "row " + std::to_string(i) + " must hold " + std::to_string(cols) +
                                                  " entries");
            }
            for (Eigen::Index j = 0; j < cols; ++j) {
                out.values(i, j) = parse_entry(row[static_cast<std::size_t>(j)]);
            }
        }
    } else {
        if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
            throw Error(ErrorKind::Parse, "expected rows*cols = " + std::to_string(rows * cols) + " entries, got " +
                                              std::to_string(entries.size()));
        }
        for (Eigen::Index i = 0; i < rows; ++i) {
            for (Eigen::Index j = 0; j < cols; ++j) {
                out.values(i, j) = parse_entry(entries[static_cast<std::size_t>(i * cols + j)]);
            }
        }
    }
    return out;
}

std::string serialize_matrix_json(const Matrix &m, const std::optional<std::string> &name) {
    if (!m.allFinite()) {
        throw Error(ErrorKind::NotFinite, "refusing to serialize a matrix with non-finite entries");
    }
    std::ostringstream os;
    os << "{\n";
    if (name) {
        os << "  \"name\": " << json(*name).dump() << ",\n";
    }
    os << "  \"rows\": " << m.rows() << ",\n";
    os << "  \"cols\": " << m.cols() << ",\n";
    os << "  \"entries\": [";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "\n    [" : ",\n    [");
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                os << ", ";
            }
            os << '[' << format_double(m(i, j).real()) << ", " << format_double(m(i, j).imag()) << ']';
        }
        os << ']';
    }
    os << (m.rows() > 0 ? "\n  ]\n" : "]\n");
    os << "}\n";
    return os.str();
}

MatrixFile read_matrix_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix_json(buf.str());
    } catch (const Error &e) {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.detail());
    }
}

void write_matrix_file(const std::filesystem::path &path, const Matrix &m, const std::optional<std::string> &name) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::Parse, "cannot write " + path.string());
    }
    out << serialize_matrix_json(m, name);
    if (!out) {
        throw Error(ErrorKind::Parse, "write failed for " + path.string());
    }
}

}  // namespace antinorm
