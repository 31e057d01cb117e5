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

#ifndef ANTINORM_CLI_H
#define ANTINORM_CLI_H

#include <ostream>

namespace antinorm::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
/// Bad input: unparsable file, non-unitary or wrong-parity operator, dimension mismatch,
/// a symmetry relation the input does not satisfy, or a usage error.
inline constexpr int kExitValidation = 1;
/// The computation ran but some reported residual exceeds --tol.
inline constexpr int kExitTolerance = 2;

/// Entry point of the `antinorm` tool. Data goes to files or `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace antinorm::cli

#endif
