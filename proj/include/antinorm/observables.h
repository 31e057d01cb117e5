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

#ifndef ANTINORM_OBSERVABLES_H
#define ANTINORM_OBSERVABLES_H

#include <optional>
#include <string_view>

#include "antinorm/antilinear.h"
#include "antinorm/linalg.h"
#include "antinorm/normal_form.h"

namespace antinorm {

/// Whether M satisfies T∘M = +M∘T or T∘M = -M∘T.
enum class SymmetrySign { Commuting, Anticommuting };

std::string_view symmetry_sign_name(SymmetrySign sign);
std::optional<SymmetrySign> parse_symmetry_sign(std::string_view name);

/// Hermiticity slack, relative to ||M||_F.
inline constexpr double kHermitianRelTolerance = 1e-10;

/// ||U conj(M) U* ∓ M||_F. Throws NotHermitian (relative slack above) or DimensionMismatch.
double verify_symmetry(const Matrix &m, const AntiunitaryOp &t, SymmetrySign sign);

/// (M ± U conj(M) U*)/2: the part of M obeying the requested relation.
Matrix symmetrize(const Matrix &m, const AntiunitaryOp &t, SymmetrySign sign);

/// Q* M Q. Throws NotUnitary when ||Q*Q - I||_F > tol.
Matrix transform(const Matrix &m, const Matrix &q, double tol = kPreconditionTolerance);

struct StandardFormReport {
    /// ConjugationK: max |Im M| (commuting) or max |Re M| (anticommuting).
    std::optional<double> max_abs_offending_part;
    /// ConjugationK: ||M - M^T||_F (commuting) or ||M + M^T||_F (anticommuting).
    std::optional<double> transpose_residual;
    /// σ_y targets: ||U₀ conj(M) U₀* ∓ M||_F.
    std::optional<double> blocks_residual;

    double max() const;
};

/// Residuals of M against the real/imaginary standard picture of `kind`.
StandardFormReport check_standard_form(const Matrix &m, SymmetrySign sign, TargetKind kind);

/// Sorted eigenvalues of a Hermitian matrix grouped in adjacent pairs; returns the largest
/// gap inside a pair (infinite when the dimension is odd).
double kramers_pair_gap(const Matrix &m);

}  // namespace antinorm

#endif
