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

#include "antinorm/antilinear.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "antinorm/error.h"

namespace antinorm {

std::string Parity::str() const {
    switch (kind) {
        case Kind::Even:
            return "even";
        case Kind::Odd:
            return "odd";
        case Kind::Other:
            break;
    }
    return "other";
}

namespace {

Parity classify_square(const Matrix &u, double tol) {
    Matrix square = u * u.conjugate();
    Matrix id = identity(u.rows());
    double to_plus = (square - id).norm();
    double to_minus = (square + id).norm();
    if (to_plus <= tol && to_plus <= to_minus) {
        return {Parity::Kind::Even, to_plus};
    }
    if (to_minus <= tol) {
        return {Parity::Kind::Odd, to_minus};
    }
    return {Parity::Kind::Other, std::min(to_plus, to_minus)};
}

}  // namespace

AntiunitaryOp::AntiunitaryOp(Matrix factor, double unitary_tol) : factor_(std::move(factor)) {
    require_square(factor_, "antiunitary factor");
    if (factor_.rows() == 0) {
        throw Error(ErrorKind::OutOfRange, "antiunitary factor is empty");
    }
    require_unitary(factor_, static_cast<double>(factor_.rows()) * unitary_tol, "antiunitary factor");
    parity_ = classify_square(factor_, kParityTolerance);
}

AntiunitaryOp AntiunitaryOp::conjugation(Eigen::Index n) {
    return AntiunitaryOp(identity(n));
}

Vector apply(const AntiunitaryOp &t, const Vector &v) {
    if (v.size() != t.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                      " applied to antiunitary of dimension " +
                                                      std::to_string(t.dim()));
    }
    return t.factor() * v.conjugate();
}

Matrix apply(const AntiunitaryOp &t, const Matrix &columns) {
    if (columns.rows() != t.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "columns of length " + std::to_string(columns.rows()) +
                                                      " applied to antiunitary of dimension " +
                                                      std::to_string(t.dim()));
    }
    return t.factor() * columns.conjugate();
}

Matrix compose(const AntiunitaryOp &t, const AntiunitaryOp &s) {
    require_same_dim(t.factor(), s.factor(), "compose");
    return t.factor() * s.factor().conjugate();
}

AntiunitaryOp inverse(const AntiunitaryOp &t) {
    // U^T is unitary exactly when U is; skip the tolerance scaling of the input.
    return AntiunitaryOp(t.factor().transpose(), std::numeric_limits<double>::infinity());
}

Parity parity_of(const AntiunitaryOp &t, double tol) {
    return classify_square(t.factor(), tol);
}

AntiunitaryOp w_theta(double theta, ZeroAngleBlock zero_block) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw Error(ErrorKind::OutOfRange, "W_theta requires 0 <= theta <= pi, got " + std::to_string(theta));
    }
    if (theta == 0.0 && zero_block == ZeroAngleBlock::OneByOne) {
        return AntiunitaryOp::conjugation(1);
    }
    Matrix u(2, 2);
    u << 0.0, std::polar(1.0, theta), 1.0, 0.0;
    return AntiunitaryOp(std::move(u));
}

AntiunitaryOp w_hat_theta(double theta) {
    Matrix u(2, 2);
    u << 0.0, std::polar(1.0, theta / 2.0), std::polar(1.0, -theta / 2.0), 0.0;
    return AntiunitaryOp(std::move(u));
}

Matrix q_theta(double theta) {
    Matrix q = Matrix::Zero(2, 2);
    q(0, 0) = 1.0;
    q(1, 1) = std::polar(1.0, theta / 2.0);
    return q;
}

double intertwining_residual(double theta) {
    Matrix w(2, 2);
    w << 0.0, std::polar(1.0, theta), 1.0, 0.0;
    Matrix q = q_theta(theta);
    return (q * w_hat_theta(theta).factor() - w * q.conjugate()).norm();
}

}  // namespace antinorm
