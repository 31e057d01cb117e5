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

#ifndef ANTINORM_LINALG_H
#define ANTINORM_LINALG_H

#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

namespace antinorm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

Matrix identity(Eigen::Index n);
Matrix kron(const Matrix &a, const Matrix &b);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Direct sum of n/2 copies of [[0,1],[-1,0]] (that is, i*sigma_y).
Matrix sigma_y_blocks(Eigen::Index n);

/// diag(+1 x plus, -1 x (n - plus)).
Matrix signed_identity(Eigen::Index n, Eigen::Index plus);

/// diag(1,-1,1,-1,...).
Matrix alternating_signs(Eigen::Index n);

double frobenius(const Matrix &m);

/// ||M* M - I||_F.
double unitarity_residual(const Matrix &m);

/// ||M - M*||_F.
double hermiticity_residual(const Matrix &m);

double max_abs_real(const Matrix &m);
double max_abs_imag(const Matrix &m);

/// Conjugate-linear in the first argument.
inline Complex inner(const Vector &v, const Vector &w) {
    return v.dot(w);
}

bool all_finite(const Matrix &m);

// Throwing precondition helpers. `what` names the argument in the message.
void require_finite(const Matrix &m, std::string_view what);
void require_square(const Matrix &m, std::string_view what);
void require_same_dim(const Matrix &a, const Matrix &b, std::string_view what);
void require_unitary(const Matrix &m, double tol, std::string_view what);
void require_hermitian(const Matrix &m, double tol, std::string_view what);

/// Removes from `v` its components along the first `count` columns of `basis`,
/// two passes of modified Gram-Schmidt. The columns are assumed orthonormal.
void project_out(Vector &v, const Matrix &basis, Eigen::Index count);

/// Orthonormal basis for the column space of `spanning` of the given rank, built by
/// column-pivoted Gram-Schmidt: at every step the column with the largest residual is
/// taken. Deterministic; for a coordinate projector it returns coordinate vectors.
Matrix pivoted_column_basis(const Matrix &spanning, Eigen::Index rank);

/// Eigenvalues of a Hermitian matrix (after (M+M*)/2), ascending.
RealVector hermitian_eigenvalues(const Matrix &m);

}  // namespace antinorm

#endif
