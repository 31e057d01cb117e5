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

#ifndef ANTINORM_NORMAL_FORM_H
#define ANTINORM_NORMAL_FORM_H

#include <optional>
#include <string>
#include <string_view>

#include "antinorm/antilinear.h"
#include "antinorm/linalg.h"

namespace antinorm {

/// Default absolute Frobenius tolerance for every precondition check in this module.
inline constexpr double kPreconditionTolerance = 1e-8;

/// A grading: a Hermitian unitary involution Π splitting C^n into H+ and H-.
class GradingOp {
   public:
    /// Throws NotHermitian / NotInvolution when ||Π - Π*||_F or ||Π² - I||_F exceeds tol.
    explicit GradingOp(Matrix pi, double tol = kPreconditionTolerance);

    const Matrix &matrix() const {
        return pi_;
    }
    Eigen::Index dim() const {
        return pi_.rows();
    }
    Eigen::Index dim_plus() const {
        return dim_plus_;
    }
    Eigen::Index dim_minus() const {
        return dim() - dim_plus_;
    }

    /// Orthonormal basis (n x dim_plus) of the +1 eigenspace, by pivoted Gram-Schmidt on
    /// the columns of (I + Π)/2.
    Matrix plus_basis() const;
    Matrix minus_basis() const;

   private:
    Matrix pi_;
    Eigen::Index dim_plus_ = 0;
};

enum class TargetKind { ConjugationK, SigmaYBlocks, GradedK, GradedSigmaY, AlternatingDIII };

std::string_view target_kind_name(TargetKind kind);
std::optional<TargetKind> parse_target_kind(std::string_view name);

/// The canonical pair (U₀, Π₀) a normalization lands on.
///   ConjugationK     U₀ = I
///   SigmaYBlocks     U₀ = ⊕ [[0,1],[-1,0]]
///   GradedK(m)       U₀ = I,  Π₀ = diag(I_m, -I_{n-m})
///   GradedSigmaY(m)  U₀ = ⊕ [[0,1],[-1,0]],  Π₀ = diag(I_m, -I_{n-m})
///   AlternatingDIII  U₀ = ⊕ [[0,1],[-1,0]],  Π₀ = diag(1,-1,1,-1,...)
struct CanonicalTarget {
    TargetKind kind = TargetKind::ConjugationK;
    Eigen::Index m = 0;
    Matrix u0;
    std::optional<Matrix> pi0;
};

CanonicalTarget canonical_target(TargetKind kind, Eigen::Index n, Eigen::Index m = 0);

bool target_is_even(TargetKind kind);
bool target_is_graded(TargetKind kind);

struct Residuals {
    /// ||Q*Q - I||_F
    double unitarity = 0.0;
    /// ||Q* U conj(Q) - U₀||_F
    double symmetry = 0.0;
    /// ||Q Q^T - U||_F, even targets only.
    std::optional<double> factorization;
    /// ||Q* Π Q - Π₀||_F, graded targets only.
    std::optional<double> grading;

    double max() const;
};

struct NormalFormResult {
    Matrix q;
    CanonicalTarget target;
    Residuals residuals;
};

/// Defining-relation residuals of a candidate Q against a target.
Residuals measure_residuals(const Matrix &q, const AntiunitaryOp &t, const GradingOp *g,
                            const CanonicalTarget &target);

/// ||U conj(Π) - Π U||_F, zero iff T∘Π = Π∘T.
double commutation_residual(const AntiunitaryOp &t, const GradingOp &g);
/// ||U conj(Π) + Π U||_F, zero iff T∘Π = -Π∘T.
double anticommutation_residual(const AntiunitaryOp &t, const GradingOp &g);

/// T∘T = +I: columns ψ_j of Q are T-fixed, U conj(ψ_j) = ψ_j, i.e. Q Q^T = U.
/// Throws NotEven, or ToleranceFailure when no T-fixed direction survives projection.
NormalFormResult even_normal_basis(const AntiunitaryOp &t, double tol = kPreconditionTolerance);

/// T∘T = -I: columns (φ₁, ψ₁, φ₂, ψ₂, ...) with ψ_j = -T(φ_j), so Q* U conj(Q) = U₀.
/// Throws OddDimension, NotOdd.
NormalFormResult odd_normal_basis(const AntiunitaryOp &t, double tol = kPreconditionTolerance);

/// Even T commuting with Π: T-fixed columns, H+ first. Throws NotEven, NotCommuting.
NormalFormResult graded_even(const AntiunitaryOp &t, const GradingOp &g, double tol = kPreconditionTolerance);

/// Odd T commuting with Π: Kramers pairs from H+ first, then H-.
/// Throws NotOdd, NotCommuting, OddSectorDimension.
NormalFormResult graded_odd(const AntiunitaryOp &t, const GradingOp &g, double tol = kPreconditionTolerance);

/// Odd T anticommuting with Π: pairs φ_j ∈ H+, ψ_j = -T(φ_j) ∈ H-.
/// Throws NotOdd, NotAnticommuting, UnbalancedGrading.
NormalFormResult anticommuting_normal(const AntiunitaryOp &t, const GradingOp &g,
                                      double tol = kPreconditionTolerance);

enum class NormalizeMode { Auto, Even, Odd, Graded, Anticommuting };

std::optional<NormalizeMode> parse_normalize_mode(std::string_view name);

/// Dispatches on the requested mode. Auto picks from the parity of T and, when a grading
/// is given, from whichever of commutation/anticommutation holds.
NormalFormResult normalize(const AntiunitaryOp &t, const GradingOp *g, NormalizeMode mode,
                           double tol = kPreconditionTolerance);

}  // namespace antinorm

#endif
