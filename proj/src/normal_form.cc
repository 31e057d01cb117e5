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

#include "antinorm/normal_form.h"

#include <algorithm>
#include <cmath>

#include "antinorm/error.h"

namespace antinorm {

namespace {

// A constructed column shorter than this (relative to its unit seed) means the input was
// not of the parity it claimed; exact arithmetic gives at least sqrt(2) for the even
// construction and exactly 1 for the odd one.
constexpr double kDegeneracyFloor = 0.5;

Vector unit_vector(Eigen::Index n, Eigen::Index j) {
    Vector e = Vector::Zero(n);
    e(j) = 1.0;
    return e;
}

// Seed for the next column: the coordinate vector with the largest residual against the
// columns already placed. `captured(j)` is the squared weight already in row j.
Vector next_seed(const Matrix &q, Eigen::Index placed, const RealVector &captured) {
    Eigen::Index j = 0;
    captured.minCoeff(&j);
    Vector phi = unit_vector(q.rows(), j);
    project_out(phi, q, placed);
    double norm = phi.norm();
    if (!(norm > 1e-8)) {
        throw Error(ErrorKind::ToleranceFailure, "seed vector collapsed after projection");
    }
    return phi / norm;
}

void place(Matrix &q, Eigen::Index k, Vector v, RealVector &captured, std::string_view what) {
    project_out(v, q, k);
    double norm = v.norm();
    if (!(norm > kDegeneracyFloor)) {
        throw Error(ErrorKind::ToleranceFailure,
                    std::string(what) + " degenerated (norm " + std::to_string(norm) + " at column " +
                        std::to_string(k) + ")");
    }
    v /= norm;
    q.col(k) = v;
    captured += v.cwiseAbs2();
}

// Orthonormal T-fixed basis for a factor u with u conj(u) = I.
Matrix even_columns(const Matrix &u) {
    const Eigen::Index n = u.rows();
    Matrix q = Matrix::Zero(n, n);
    RealVector captured = RealVector::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Vector phi = next_seed(q, k, captured);
        Vector t_phi = u * phi.conjugate();
        // Both candidates are T-fixed and their squared norms sum to 4.
        Vector plus = phi + t_phi;
        Vector minus = kI * (phi - t_phi);
        place(q, k, plus.squaredNorm() >= minus.squaredNorm() ? std::move(plus) : std::move(minus), captured,
              "T-fixed vector");
    }
    return q;
}

// Kramers pairs (φ, -T φ) for a factor u with u conj(u) = -I.
Matrix odd_columns(const Matrix &u) {
    const Eigen::Index n = u.rows();
    Matrix q = Matrix::Zero(n, n);
    RealVector captured = RealVector::Zero(n);
    for (Eigen::Index k = 0; k < n; k += 2) {
        Vector phi = next_seed(q, k, captured);
        place(q, k, phi, captured, "seed vector");
        Vector psi = -(u * q.col(k).conjugate());
        place(q, k + 1, std::move(psi), captured, "Kramers partner");
    }
    return q;
}

// The restriction of T to the span of the orthonormal columns of `basis`, which T is
// assumed to preserve: B* U conj(B).
Matrix restricted_factor(const AntiunitaryOp &t, const Matrix &basis) {
    return basis.adjoint() * t.factor() * basis.conjugate();
}

void require_parity(const AntiunitaryOp &t, Parity::Kind want, double tol) {
    Parity p = parity_of(t, tol);
    if (p.kind == want) {
        return;
    }
    if (want == Parity::Kind::Even) {
        throw Error(ErrorKind::NotEven,
                    "T∘T is not +I within " + std::to_string(tol) + " (classified " + p.str() +
                        ", ||U conj(U) - I||_F = " + std::to_string((t.factor() * t.factor().conjugate() -
                                                                     identity(t.dim()))
                                                                        .norm()) +
                        ")");
    }
    throw Error(ErrorKind::NotOdd,
                "T∘T is not -I within " + std::to_string(tol) + " (classified " + p.str() +
                    ", ||U conj(U) + I||_F = " +
                    std::to_string((t.factor() * t.factor().conjugate() + identity(t.dim())).norm()) + ")");
}

void require_same_space(const AntiunitaryOp &t, const GradingOp &g) {
    if (t.dim() != g.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "antiunitary has dimension " + std::to_string(t.dim()) +
                                                      ", grading has dimension " + std::to_string(g.dim()));
    }
}

void require_commuting(const AntiunitaryOp &t, const GradingOp &g, double tol) {
    double r = commutation_residual(t, g);
    if (!(r <= tol)) {
        throw Error(ErrorKind::NotCommuting, "||U conj(Π) - Π U||_F = " + std::to_string(r));
    }
}

NormalFormResult finish(Matrix q, const AntiunitaryOp &t, const GradingOp *g, TargetKind kind, Eigen::Index m) {
    NormalFormResult out;
    out.target = canonical_target(kind, t.dim(), m);
    out.residuals = measure_residuals(q, t, g, out.target);
    out.q = std::move(q);
    return out;
}

// Builds Q sector by sector: restrict T to H+ and H-, normalize each with `columns`.
template <typename Columns>
Matrix graded_columns(const AntiunitaryOp &t, const GradingOp &g, Columns columns) {
    const Eigen::Index n = t.dim();
    const Eigen::Index m = g.dim_plus();
    Matrix q(n, n);
    if (m > 0) {
        Matrix plus = g.plus_basis();
        q.leftCols(m) = plus * columns(restricted_factor(t, plus));
    }
    if (n - m > 0) {
        Matrix minus = g.minus_basis();
        q.rightCols(n - m) = minus * columns(restricted_factor(t, minus));
    }
    return q;
}

}  // namespace

GradingOp::GradingOp(Matrix pi, double tol) : pi_(std::move(pi)) {
    require_square(pi_, "grading");
    require_finite(pi_, "grading");
    double herm = hermiticity_residual(pi_);
    if (!(herm <= tol)) {
        throw Error(ErrorKind::NotHermitian, "grading is not Hermitian: ||Π - Π*||_F = " + std::to_string(herm));
    }
    double inv = (pi_ * pi_ - identity(dim())).norm();
    if (!(inv <= tol)) {
        throw Error(ErrorKind::NotInvolution, "grading is not an involution: ||Π² - I||_F = " + std::to_string(inv));
    }
    dim_plus_ = static_cast<Eigen::Index>(std::lround((pi_.trace().real() + static_cast<double>(dim())) / 2.0));
}

Matrix GradingOp::plus_basis() const {
    return pivoted_column_basis((identity(dim()) + pi_) / 2.0, dim_plus());
}

Matrix GradingOp::minus_basis() const {
    return pivoted_column_basis((identity(dim()) - pi_) / 2.0, dim_minus());
}

std::string_view target_kind_name(TargetKind kind) {
    switch (kind) {
        case TargetKind::ConjugationK:
            return "ConjugationK";
        case TargetKind::SigmaYBlocks:
            return "SigmaYBlocks";
        case TargetKind::GradedK:
            return "GradedK";
        case TargetKind::GradedSigmaY:
            return "GradedSigmaY";
        case TargetKind::AlternatingDIII:
            return "AlternatingDIII";
    }
    return "Unknown";
}

std::optional<TargetKind> parse_target_kind(std::string_view name) {
    for (TargetKind k : {TargetKind::ConjugationK, TargetKind::SigmaYBlocks, TargetKind::GradedK,
                         TargetKind::GradedSigmaY, TargetKind::AlternatingDIII}) {
        if (target_kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

bool target_is_even(TargetKind kind) {
    return kind == TargetKind::ConjugationK || kind == TargetKind::GradedK;
}

bool target_is_graded(TargetKind kind) {
    return kind == TargetKind::GradedK || kind == TargetKind::GradedSigmaY || kind == TargetKind::AlternatingDIII;
}

CanonicalTarget canonical_target(TargetKind kind, Eigen::Index n, Eigen::Index m) {
    CanonicalTarget t;
    t.kind = kind;
    t.m = m;
    t.u0 = target_is_even(kind) ? identity(n) : sigma_y_blocks(n);
    switch (kind) {
        case TargetKind::GradedK:
        case TargetKind::GradedSigmaY:
            t.pi0 = signed_identity(n, m);
            break;
        case TargetKind::AlternatingDIII:
            t.m = n / 2;
            t.pi0 = alternating_signs(n);
            break;
        default:
            break;
    }
    return t;
}

double Residuals::max() const {
    double r = std::max(unitarity, symmetry);
    if (factorization) {
        r = std::max(r, *factorization);
    }
    if (grading) {
        r = std::max(r, *grading);
    }
    return r;
}

Residuals measure_residuals(const Matrix &q, const AntiunitaryOp &t, const GradingOp *g,
                            const CanonicalTarget &target) {
    require_same_dim(q, t.factor(), "Q against antiunitary factor");
    require_same_dim(q, target.u0, "Q against canonical target");
    Residuals r;
    r.unitarity = unitarity_residual(q);
    r.symmetry = (q.adjoint() * t.factor() * q.conjugate() - target.u0).norm();
    if (target_is_even(target.kind)) {
        r.factorization = (q * q.transpose() - t.factor()).norm();
    }
    if (target.pi0) {
        if (g == nullptr) {
            throw Error(ErrorKind::InconsistentParameters,
                        std::string(target_kind_name(target.kind)) + " target needs a grading");
        }
        require_same_dim(q, g->matrix(), "Q against grading");
        r.grading = (q.adjoint() * g->matrix() * q - *target.pi0).norm();
    }
    return r;
}

double commutation_residual(const AntiunitaryOp &t, const GradingOp &g) {
    require_same_space(t, g);
    return (t.factor() * g.matrix().conjugate() - g.matrix() * t.factor()).norm();
}

double anticommutation_residual(const AntiunitaryOp &t, const GradingOp &g) {
    require_same_space(t, g);
    return (t.factor() * g.matrix().conjugate() + g.matrix() * t.factor()).norm();
}

NormalFormResult even_normal_basis(const AntiunitaryOp &t, double tol) {
    require_parity(t, Parity::Kind::Even, tol);
    return finish(even_columns(t.factor()), t, nullptr, TargetKind::ConjugationK, 0);
}

NormalFormResult odd_normal_basis(const AntiunitaryOp &t, double tol) {
    if (t.dim() % 2 != 0) {
        throw Error(ErrorKind::OddDimension,
                    "T∘T = -I requires even dimension, got " + std::to_string(t.dim()));
    }
    require_parity(t, Parity::Kind::Odd, tol);
    return finish(odd_columns(t.factor()), t, nullptr, TargetKind::SigmaYBlocks, 0);
}

NormalFormResult graded_even(const AntiunitaryOp &t, const GradingOp &g, double tol) {
    require_same_space(t, g);
    require_parity(t, Parity::Kind::Even, tol);
    require_commuting(t, g, tol);
    Matrix q = graded_columns(t, g, even_columns);
    return finish(std::move(q), t, &g, TargetKind::GradedK, g.dim_plus());
}

NormalFormResult graded_odd(const AntiunitaryOp &t, const GradingOp &g, double tol) {
    require_same_space(t, g);
    if (t.dim() % 2 != 0) {
        throw Error(ErrorKind::OddDimension,
                    "T∘T = -I requires even dimension, got " + std::to_string(t.dim()));
    }
    require_parity(t, Parity::Kind::Odd, tol);
    require_commuting(t, g, tol);
    if (g.dim_plus() % 2 != 0 || g.dim_minus() % 2 != 0) {
        throw Error(ErrorKind::OddSectorDimension, "grading eigenspaces have dimensions " +
                                                       std::to_string(g.dim_plus()) + " and " +
                                                       std::to_string(g.dim_minus()) + "; both must be even");
    }
    Matrix q = graded_columns(t, g, odd_columns);
    return finish(std::move(q), t, &g, TargetKind::GradedSigmaY, g.dim_plus());
}

NormalFormResult anticommuting_normal(const AntiunitaryOp &t, const GradingOp &g, double tol) {
    require_same_space(t, g);
    if (t.dim() % 2 != 0) {
        throw Error(ErrorKind::OddDimension,
                    "T∘T = -I requires even dimension, got " + std::to_string(t.dim()));
    }
    require_parity(t, Parity::Kind::Odd, tol);
    double r = anticommutation_residual(t, g);
    if (!(r <= tol)) {
        throw Error(ErrorKind::NotAnticommuting, "||U conj(Π) + Π U||_F = " + std::to_string(r));
    }
    if (2 * g.dim_plus() != g.dim()) {
        throw Error(ErrorKind::UnbalancedGrading, "grading eigenspaces have dimensions " +
                                                      std::to_string(g.dim_plus()) + " and " +
                                                      std::to_string(g.dim_minus()));
    }
    const Eigen::Index n = t.dim();
    const Eigen::Index m = g.dim_plus();
    // Any orthonormal basis of H+ works for the φ_j; T carries it onto one of H-.
    Matrix plus = g.plus_basis();
    Matrix q = Matrix::Zero(n, n);
    RealVector captured = RealVector::Zero(n);
    for (Eigen::Index j = 0; j < m; ++j) {
        place(q, 2 * j, plus.col(j), captured, "H+ basis vector");
        Vector psi = -(t.factor() * q.col(2 * j).conjugate());
        place(q, 2 * j + 1, std::move(psi), captured, "Kramers partner");
    }
    return finish(std::move(q), t, &g, TargetKind::AlternatingDIII, m);
}

std::optional<NormalizeMode> parse_normalize_mode(std::string_view name) {
    if (name == "auto") return NormalizeMode::Auto;
    if (name == "even") return NormalizeMode::Even;
    if (name == "odd") return NormalizeMode::Odd;
    if (name == "graded") return NormalizeMode::Graded;
    if (name == "anticommuting") return NormalizeMode::Anticommuting;
    return std::nullopt;
}

NormalFormResult normalize(const AntiunitaryOp &t, const GradingOp *g, NormalizeMode mode, double tol) {
    auto need_grading = [&]() -> const GradingOp & {
        if (g == nullptr) {
            throw Error(ErrorKind::InconsistentParameters, "mode requires a grading operator");
        }
        return *g;
    };
    switch (mode) {
        case NormalizeMode::Even:
            return even_normal_basis(t, tol);
        case NormalizeMode::Odd:
            return odd_normal_basis(t, tol);
        case NormalizeMode::Graded:
            return parity_of(t, tol).is_odd() ? graded_odd(t, need_grading(), tol)
                                              : graded_even(t, need_grading(), tol);
        case NormalizeMode::Anticommuting:
            return anticommuting_normal(t, need_grading(), tol);
        case NormalizeMode::Auto:
            break;
    }
    Parity p = parity_of(t, tol);
    if (!p.is_even() && !p.is_odd()) {
        throw Error(ErrorKind::IndefiniteParity,
                    "T∘T is neither +I nor -I (distance " + std::to_string(p.distance) + ")");
    }
    if (g == nullptr) {
        return p.is_even() ? even_normal_basis(t, tol) : odd_normal_basis(t, tol);
    }
    if (commutation_residual(t, *g) <= tol) {
        return p.is_even() ? graded_even(t, *g, tol) : graded_odd(t, *g, tol);
    }
    if (p.is_even()) {
        throw Error(ErrorKind::NotOdd,
                    "an even T anticommuting with Π has no normal form of its own; normalize the odd partner "
                    "T∘Π instead");
    }
    return anticommuting_normal(t, *g, tol);
}

}  // namespace antinorm
