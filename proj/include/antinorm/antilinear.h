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

#ifndef ANTINORM_ANTILINEAR_H
#define ANTINORM_ANTILINEAR_H

#include <string>

#include "antinorm/linalg.h"

namespace antinorm {

/// Default absolute Frobenius tolerance for deciding T∘T = ±I.
inline constexpr double kParityTolerance = 1e-8;

/// Per-dimension unitarity slack accepted when constructing an AntiunitaryOp.
inline constexpr double kUnitaryTolerance = 1e-10;

struct Parity {
    enum class Kind { Even, Odd, Other };

    Kind kind = Kind::Other;
    /// ||U conj(U) - s I||_F for the matched sign s, or the smaller of the two for Other.
    double distance = 0.0;

    bool is_even() const {
        return kind == Kind::Even;
    }
    bool is_odd() const {
        return kind == Kind::Odd;
    }
    std::string str() const;
};

/// An antiunitary operator T = U∘K, stored through its unitary factor U, so that
/// T(v) = U conj(v).
class AntiunitaryOp {
   public:
    /// Throws NotSquare/NotFinite/NotUnitary unless ||U*U - I||_F <= dim * unitary_tol.
    explicit AntiunitaryOp(Matrix factor, double unitary_tol = kUnitaryTolerance);

    /// Plain complex conjugation on C^n.
    static AntiunitaryOp conjugation(Eigen::Index n);

    const Matrix &factor() const {
        return factor_;
    }
    Eigen::Index dim() const {
        return factor_.rows();
    }

    /// Parity at kParityTolerance, computed once at construction.
    const Parity &parity() const {
        return parity_;
    }

   private:
    Matrix factor_;
    Parity parity_;
};

/// U conj(v).
Vector apply(const AntiunitaryOp &t, const Vector &v);

/// Column-wise action: U conj(M).
Matrix apply(const AntiunitaryOp &t, const Matrix &columns);

/// The linear operator T∘S, i.e. U_t conj(U_s).
Matrix compose(const AntiunitaryOp &t, const AntiunitaryOp &s);

/// T^{-1} = U^T∘K.
AntiunitaryOp inverse(const AntiunitaryOp &t);

Parity parity_of(const AntiunitaryOp &t, double tol = kParityTolerance);

enum class ZeroAngleBlock { OneByOne, TwoByTwo };

/// The block (a, b) -> (e^{iθ} conj(b), conj(a)), factor [[0, e^{iθ}], [1, 0]], for
/// 0 <= θ <= π. At θ = 0 the 1x1 conjugation block is returned unless `zero_block`
/// asks for the 2x2 form.
AntiunitaryOp w_theta(double theta, ZeroAngleBlock zero_block = ZeroAngleBlock::OneByOne);

/// The symmetric variant (a, b) -> (e^{iθ/2} conj(b), e^{-iθ/2} conj(a)).
AntiunitaryOp w_hat_theta(double theta);

/// Unitary Q with Q∘Ŵ_θ = W_θ∘Q, i.e. Q·factor(Ŵ_θ) = factor(W_θ)·conj(Q).
/// Equal to diag(1, e^{iθ/2}).
Matrix q_theta(double theta);

/// ||Q_θ·factor(Ŵ_θ) - factor(W_θ)·conj(Q_θ)||_F, using the 2x2 W_θ at every θ.
double intertwining_residual(double theta);

}  // namespace antinorm

#endif
