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

#include "antinorm/error.h"

namespace antinorm {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NotSquare:
            return "NotSquare";
        case ErrorKind::NotFinite:
            return "NotFinite";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NotInvolution:
            return "NotInvolution";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::NotEven:
            return "NotEven";
        case ErrorKind::NotOdd:
            return "NotOdd";
        case ErrorKind::OddDimension:
            return "OddDimension";
        case ErrorKind::OddSectorDimension:
            return "OddSectorDimension";
        case ErrorKind::NotCommuting:
            return "NotCommuting";
        case ErrorKind::NotAnticommuting:
            return "NotAnticommuting";
        case ErrorKind::UnbalancedGrading:
            return "UnbalancedGrading";
        case ErrorKind::IndefiniteParity:
            return "IndefiniteParity";
        case ErrorKind::RelationViolated:
            return "RelationViolated";
        case ErrorKind::InconsistentParameters:
            return "InconsistentParameters";
        case ErrorKind::Parse:
            return "Parse";
        case ErrorKind::ToleranceFailure:
            return "ToleranceFailure";
    }
    return "Unknown";
}

}  // namespace antinorm
