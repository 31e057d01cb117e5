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

#ifndef ANTINORM_TESTS_SUPPORT_ORACLES_H
#define ANTINORM_TESTS_SUPPORT_ORACLES_H

#include <array>
#include <optional>

#include "antinorm/linalg.h"

// Reference data and independent checks used by the unit and acceptance suites. Nothing
// here calls into the normalization code it is used to judge.
namespace antinorm::testing {

// The three worked examples, entry for entry.
Matrix example_even_u();       // (iσ_y)⊗(iσ_y)
Matrix example_even_q();       // reference Q, Q Q^T = U
Matrix example_odd_u();        // (1/√2)[[0,0,1,1],[0,0,1,-1],[-1,-1,0,0],[-1,1,0,0]]
Matrix example_odd_q();
Matrix example_diii_u();       // 4x4 factor of T
Matrix example_diii_pi();      // grading
Matrix example_diii_q_sign_slip();    // reference Q with a sign slip in entry (1,4)
Matrix example_diii_q();  // the slip fixed: ψ₂ = -U conj(φ₂)

// 4x4 integer matrix; the odd example is (1/√2) times it.
using IntMatrix4 = std::array<std::array<long long, 4>, 4>;
IntMatrix4 example_odd_u_scaled();
IntMatrix4 int_multiply(const IntMatrix4 &a, const IntMatrix4 &b);

// Takagi factorization of a symmetric unitary U by joint diagonalization of the
// commuting real symmetric matrices Re U and Im U: U = O diag(e^{iθ}) O^T, Q = O diag(e^{iθ/2}).
// Returns nullopt if the joint eigenbasis could not be separated.
std::optional<Matrix> takagi_symmetric_unitary(const Matrix &u);

// Eigenvalues through the general complex eigensolver, real parts sorted.
RealVector general_eigenvalues_sorted(const Matrix &m);

// Random complex vector with N(0,1) real and imaginary parts from std::mt19937_64.
Vector random_vector(Eigen::Index n, unsigned long long seed);

}  // namespace antinorm::testing

#endif
