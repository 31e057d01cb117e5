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

#ifndef ANTINORM_ERROR_H
#define ANTINORM_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace antinorm {

enum class ErrorKind {
    DimensionMismatch,
    NotSquare,
    NotFinite,
    NotUnitary,
    NotHermitian,
    NotInvolution,
    OutOfRange,
    NotEven,
    NotOdd,
    OddDimension,
    OddSectorDimension,
    NotCommuting,
    NotAnticommuting,
    UnbalancedGrading,
    IndefiniteParity,
    RelationViolated,
    InconsistentParameters,
    Parse,
    ToleranceFailure,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library. `kind()` lets callers (the CLI in particular)
/// separate bad input from numerical breakdown without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind), detail_(message) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

    /// The message without the kind prefix.
    const std::string &detail() const noexcept {
        return detail_;
    }

    /// True for precondition failures; false only for ToleranceFailure.
    bool is_validation() const noexcept {
        return kind_ != ErrorKind::ToleranceFailure;
    }

   private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace antinorm

#endif
