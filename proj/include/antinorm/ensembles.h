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

#ifndef ANTINORM_ENSEMBLES_H
#define ANTINORM_ENSEMBLES_H

#include <cstdint>
#include <utility>

#include "antinorm/antilinear.h"
#include "antinorm/classify.h"
#include "antinorm/linalg.h"
#include "antinorm/normal_form.h"
#include "antinorm/observables.h"

namespace antinorm {

/// Seeded inputs are bit-identical for identical (generator, parameters, seed).
using Seed = std::uint64_t;

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen because the whole stream is specified by
/// a few lines of integer arithmetic, so fixtures can be regenerated anywhere.
class SplitMix64 {
   public:
    explicit SplitMix64(Seed seed) : state_(seed) {
    }

    std::uint64_t next();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal variates by Box-Muller; both outputs of each transform are used.
    double gaussian();

    /// A standard complex Gaussian: independent N(0, 1/2) real and imaginary parts.
    Complex complex_gaussian();

    /// An independent stream seeded from this one.
    SplitMix64 split() {
        return SplitMix64(next());
    }

   private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// n x n Ginibre matrix, filled row-major.
Matrix complex_gaussian_matrix(Eigen::Index n, SplitMix64 &rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the R diagonal made real positive.
/// Throws OutOfRange for n = 0.
Matrix haar_unitary(Eigen::Index n, Seed seed);

/// U = V V^T for Haar V; T∘T = +I.
AntiunitaryOp random_even(Eigen::Index n, Seed seed);

/// U = V J V^T for Haar V and J = ⊕[[0,1],[-1,0]]; T∘T = -I. Throws OddDimension.
AntiunitaryOp random_odd(Eigen::Index n, Seed seed);

enum class GradingRelation { Commute, Anticommute };

/// The canonical (U₀, Π₀) for the requested parity and relation:
///   even & commute      (I,      diag(I_m, -I))
///   odd  & commute      (⊕iσ_y,  diag(I_m, -I)),  m even
///   odd  & anticommute  (⊕iσ_y,  diag(1,-1,...)), m = n/2
///   even & anticommute  (⊕σ_x,   diag(1,-1,...)), m = n/2
/// Throws InconsistentParameters otherwise.
std::pair<Matrix, Matrix> canonical_graded_pair(Eigen::Index n, Eigen::Index m, Parity::Kind parity,
                                                GradingRelation relation);

/// (V U₀ V^T, V Π₀ V*) for the canonical pair above.
std::pair<AntiunitaryOp, GradingOp> conjugated_graded_pair(const Matrix &v, Eigen::Index m, Parity::Kind parity,
                                                           GradingRelation relation);

std::pair<AntiunitaryOp, GradingOp> random_graded_pair(Eigen::Index n, Eigen::Index m, Parity::Kind parity,
                                                       GradingRelation relation, Seed seed);

/// (G + G*)/2 for a Ginibre G.
Matrix random_hermitian(Eigen::Index n, Seed seed);

/// symmetrize(random_hermitian, t, sign).
Matrix random_symmetric_observable(const AntiunitaryOp &t, SymmetrySign sign, Seed seed);

/// A random Hamiltonian with the symmetries of `label`, in a random basis. A, AIII, AI and
/// D accept any n; the rest need even n. The CII grading takes the largest even m <= n/2.
/// Throws InconsistentParameters.
SymmetryData random_class_fixture(SymmetryClass label, Eigen::Index n, Seed seed);

}  // namespace antinorm

#endif
