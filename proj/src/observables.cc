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

#include "antinorm/observables.h"

#include <algorithm>
#include <limits>

#include "antinorm/error.h"

namespace antinorm {

namespace {

double sign_value(SymmetrySign sign) {
    return sign == SymmetrySign::Commuting ? 1.0 : -1.0;
}

void require_observable(const Matrix &m, std::string_view what) {
    require_square(m, what);
    require_finite(m, what);
    double scale = std::max(1.0, m.norm());
    require_hermitian(m, kHermitianRelTolerance * scale, what);
}

}  // namespace

std::string_view symmetry_sign_name(SymmetrySign sign) {
    return sign == SymmetrySign::Commuting ? "commuting" : "anticommuting";
}

std::optional<SymmetrySign> parse_symmetry_sign(std::string_view name) {
    if (name == "commuting" || name == "commute" || name == "+") return SymmetrySign::Commuting;
    if (name == "anticommuting" || name == "anticommute" || name == "-") return SymmetrySign::Anticommuting;
    return std::nullopt;
}

double verify_symmetry(const Matrix &m, const AntiunitaryOp &t, SymmetrySign sign) {
    require_observable(m, "observable");
    require_same_dim(m, t.factor(), "observable against antiunitary");
    const Matrix &u = t.factor();
    return (u * m.conjugate() * u.adjoint() - sign_value(sign) * m).norm();
}

Matrix symmetrize(const Matrix &m, const AntiunitaryOp &t, SymmetrySign sign) {
    require_observable(m, "observable");
    require_same_dim(m, t.factor(), "observable against antiunitary");
    const Matrix &u = t.factor();
    Matrix h = (m + m.adjoint()) / 2.0;
    Matrix image = u * h.conjugate() * u.adjoint();
    Matrix out = (h + sign_value(sign) * image) / 2.0;
    return (out + out.adjoint()) / 2.0;
}

Matrix transform(const Matrix &m, const Matrix &q, double tol) {
    require_square(m, "observable");
    require_same_dim(m, q, "observable against Q");
    require_unitary(q, tol, "Q");
    return q.adjoint() * m * q;
}

double StandardFormReport::max() const {
    double r = 0.0;
    for (const auto &v : {max_abs_offending_part, transpose_residual, blocks_residual}) {
        if (v) {
            r = std::max(r, *v);
        }
    }
    return r;
}

StandardFormReport check_standard_form(const Matrix &m, SymmetrySign sign, TargetKind kind) {
    require_square(m, "observable");
    StandardFormReport report;
    if (target_is_even(kind)) {
        if (sign == SymmetrySign::Commuting) {
            report.max_abs_offending_part = max_abs_imag(m);
            report.transpose_residual = (m - m.transpose()).norm();
        } else {
            report.max_abs_offending_part = max_abs_real(m);
            report.transpose_residual = (m + m.transpose()).norm();
        }
    } else {
        Matrix u0 = sigma_y_blocks(m.rows());
        report.blocks_residual = (u0 * m.conjugate() * u0.adjoint() - sign_value(sign) * m).norm();
    }
    return report;
}

double kramers_pair_gap(const Matrix &m) {
    require_square(m, "observable");
    if (m.rows() % 2 != 0) {
        return std::numeric_limits<double>::infinity();
    }
    RealVector eig = hermitian_eigenvalues(m);
    double gap = 0.0;
    for (Eigen::Index k = 0; k + 1 < eig.size(); k += 2) {
        gap = std::max(gap, eig(k + 1) - eig(k));
    }
    return gap;
}

}  // namespace antinorm
