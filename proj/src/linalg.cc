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

#include "antinorm/linalg.h"

#include <cmath>
#include <string>

#include "antinorm/error.h"

namespace antinorm {

Matrix identity(Eigen::Index n) {
    return Matrix::Identity(n, n);
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0.0, -kI, kI, 0.0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Matrix sigma_y_blocks(Eigen::Index n) {
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        m(k, k + 1) = 1.0;
        m(k + 1, k) = -1.0;
    }
    return m;
}

Matrix signed_identity(Eigen::Index n, Eigen::Index plus) {
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        m(k, k) = k < plus ? 1.0 : -1.0;
    }
    return m;
}

Matrix alternating_signs(Eigen::Index n) {
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        m(k, k) = k % 2 == 0 ? 1.0 : -1.0;
    }
    return m;
}

double frobenius(const Matrix &m) {
    return m.norm();
}

double unitarity_residual(const Matrix &m) {
    return (m.adjoint() * m - identity(m.cols())).norm();
}

double hermiticity_residual(const Matrix &m) {
    return (m - m.adjoint()).norm();
}

double max_abs_real(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.real().cwiseAbs().maxCoeff();
}

double max_abs_imag(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.imag().cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix &m) {
    return m.allFinite();
}

void require_finite(const Matrix &m, std::string_view what) {
    if (!m.allFinite()) {
        throw Error(ErrorKind::NotFinite, std::string(what) + " has a NaN or infinite entry");
    }
}

void require_square(const Matrix &m, std::string_view what) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NotSquare, std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + ", expected square");
    }
}

void require_same_dim(const Matrix &a, const Matrix &b, std::string_view what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                                      "x" + std::to_string(b.cols()));
    }
}

void require_unitary(const Matrix &m, double tol, std::string_view what) {
    require_square(m, what);
    require_finite(m, what);
    double r = unitarity_residual(m);
    if (!(r <= tol)) {
        throw Error(ErrorKind::NotUnitary,
                    std::string(what) + " is not unitary: ||M*M - I||_F = " + std::to_string(r));
    }
}

void require_hermitian(const Matrix &m, double tol, std::string_view what) {
    require_square(m, what);
    require_finite(m, what);
    double r = hermiticity_residual(m);
    if (!(r <= tol)) {
        throw Error(ErrorKind::NotHermitian,
                    std::string(what) + " is not Hermitian: ||M - M*||_F = " + std::to_string(r));
    }
}

void project_out(Vector &v, const Matrix &basis, Eigen::Index count) {
    for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = 0; j < count; ++j) {
            v -= basis.col(j) * basis.col(j).dot(v);
        }
    }
}

Matrix pivoted_column_basis(const Matrix &spanning, Eigen::Index rank) {
    const Eigen::Index n = spanning.rows();
    Matrix basis(n, rank);
    Matrix residual = spanning;
    for (Eigen::Index k = 0; k < rank; ++k) {
        Eigen::Index pivot = 0;
        residual.colwise().squaredNorm().maxCoeff(&pivot);
        Vector q = spanning.col(pivot);
        project_out(q, basis, k);
        double norm = q.norm();
        if (!(norm > 1e-8)) {
            throw Error(ErrorKind::ToleranceFailure,
                        "column space has rank below " + std::to_string(rank) + " (pivot residual " +
                            std::to_string(norm) + ")");
        }
        q /= norm;
        basis.col(k) = q;
        residual -= q * (q.adjoint() * residual);
    }
    return basis;
}

RealVector hermitian_eigenvalues(const Matrix &m) {
    Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

}  // namespace antinorm
