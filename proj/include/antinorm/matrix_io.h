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

#ifndef ANTINORM_MATRIX_IO_H
#define ANTINORM_MATRIX_IO_H

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "antinorm/linalg.h"

namespace antinorm {

/// On-disk matrix document:
///
///     {"name": "U", "rows": 2, "cols": 2,
///      "entries": [[[re, im], [re, im]],
///                  [[re, im], [re, im]]]}
///
/// `entries` is row-major, one array of [re, im] pairs per row; a flat array of rows*cols
/// pairs is also accepted on input. `name` is optional. Numbers are written with 17
/// significant digits, so write followed by read reproduces every double exactly.
struct MatrixFile {
    std::optional<std::string> name;
    Matrix values;
};

/// Throws Error(Parse) on malformed documents, wrong entry counts, or non-finite values.
MatrixFile parse_matrix_json(std::string_view text);
std::string serialize_matrix_json(const Matrix &m, const std::optional<std::string> &name = std::nullopt);

MatrixFile read_matrix_file(const std::filesystem::path &path);
void write_matrix_file(const std::filesystem::path &path, const Matrix &m,
                       const std::optional<std::string> &name = std::nullopt);

/// "%.17g" rendering of a double, as used in every emitted document.
std::string format_double(double x);

}  // namespace antinorm

#endif
