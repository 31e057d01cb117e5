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

#ifndef ANTINORM_CLASSIFY_H
#define ANTINORM_CLASSIFY_H

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antinorm/antilinear.h"
#include "antinorm/linalg.h"
#include "antinorm/normal_form.h"
#include "antinorm/observables.h"

namespace antinorm {

enum class SymmetryClass { A, AIII, AI, BDI, D, DIII, AII, CII, C, CI };

inline constexpr std::array<SymmetryClass, 10> kAllClasses = {
    SymmetryClass::A,   SymmetryClass::AIII, SymmetryClass::AI, SymmetryClass::BDI, SymmetryClass::D,
    SymmetryClass::DIII, SymmetryClass::AII, SymmetryClass::CII, SymmetryClass::C,  SymmetryClass::CI,
};

std::string_view class_name(SymmetryClass label);
std::optional<SymmetryClass> parse_class(std::string_view name);

/// Square of a symmetry: +1, -1, or no such symmetry.
enum class SquareSign { Absent, Plus, Minus };

struct SymmetrySignature {
    SquareSign t_sign = SquareSign::Absent;
    SquareSign c_sign = SquareSign::Absent;
    /// Only consulted when both antiunitaries are absent; implied when both are present.
    bool chiral = false;

    bool operator==(const SymmetrySignature &) const = default;
};

/// Named measured violations, in the order they were checked.
using NamedResiduals = std::vector<std::pair<std::string, double>>;

struct ClassReport {
    SymmetryClass label = SymmetryClass::A;
    SymmetrySignature signature;
    NamedResiduals residuals;
    /// Π = T∘C as a matrix (U_t conj(U_c)), present when both T and C were supplied.
    std::optional<Matrix> grading;
};

/// The tenfold table. A signature with both signs present is treated as chiral.
ClassReport classify(const SymmetrySignature &sig);

/// Signature whose classification is `label`.
SymmetrySignature signature_of(SymmetryClass label);

/// Symmetry data of a single-particle Hamiltonian. Convention: T commutes with H,
/// C and the chiral unitary S anticommute with H.
struct SymmetryData {
    Matrix h;
    std::optional<AntiunitaryOp> t;
    std::optional<AntiunitaryOp> c;
    /// Chiral unitary S (Hermitian involution) for class AIII; ignored when T or C present.
    std::optional<Matrix> chiral;
};

/// Measures every relation implied by the supplied operators and names the class.
/// Throws NotHermitian, IndefiniteParity (T or C squares to neither ±I), or
/// RelationViolated naming the first relation whose residual exceeds tol.
ClassReport detect(const SymmetryData &data, double tol = kPreconditionTolerance);

/// A change of basis putting all the symmetries of a class fixture into standard form at
/// once, together with the transformed Hamiltonian.
struct ClassNormalForm {
    ClassReport report;
    Matrix q;
    /// Target for the antiunitary that was normalized (T, or C for D, C and CI).
    std::optional<CanonicalTarget> target;
    Matrix h_q;
    NamedResiduals residuals;

    double max_residual() const;
};

/// Runs detect, then the matching normalization: even/odd for the single-symmetry classes,
/// the graded algorithms with Π = T∘C for BDI, CII, DIII, and CI (through C, its odd member),
/// and the chiral eigenspace split for AIII.
ClassNormalForm normalize_class(const SymmetryData &data, double tol = kPreconditionTolerance);

/// Residuals of a proposed Q for the fixture of the given class: the symmetry's defining
/// relations plus the standard-form checks on Q* H Q.
NamedResiduals class_normal_form_residuals(SymmetryClass label, const SymmetryData &data, const Matrix &q);

}  // namespace antinorm

#endif
