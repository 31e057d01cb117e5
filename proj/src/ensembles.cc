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

#include "antinorm/ensembles.h"

#include <cmath>
#include <numbers>
#include <string>

#include "antinorm/error.h"

namespace antinorm {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1 - uniform() lies in (0, 1], keeping the logarithm finite.
    double radius = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex SplitMix64::complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return Complex(re, im) * std::numbers::sqrt2 / 2.0;
}

Matrix complex_gaussian_matrix(Eigen::Index n, SplitMix64 &rng) {
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = rng.complex_gaussian();
        }
    }
    return g;
}

Matrix haar_unitary(Eigen::Index n, Seed seed) {
    if (n <= 0) {
        throw Error(ErrorKind::OutOfRange, "haar_unitary needs n >= 1");
    }
    SplitMix64 rng(seed);
    Eigen::HouseholderQR<Matrix> qr(complex_gaussian_matrix(n, rng));
    Matrix q = qr.householderQ();
    const Matrix &r = qr.matrixQR();
    // Naive QR is not Haar; rotating each column by the phase of R_kk is.
    for (Eigen::Index k = 0; k < n; ++k) {
        double mag = std::abs(r(k, k));
        if (mag > 0.0) {
            q.col(k) *= r(k, k) / mag;
        }
    }
    return q;
}

AntiunitaryOp random_even(Eigen::Index n, Seed seed) {
    Matrix v = haar_unitary(n, seed);
    return AntiunitaryOp(v * v.transpose());
}

AntiunitaryOp random_odd(Eigen::Index n, Seed seed) {
    if (n % 2 != 0) {
        throw Error(ErrorKind::OddDimension, "odd antiunitary needs even n, got " + std::to_string(n));
    }
    Matrix v = haar_unitary(n, seed);
    return AntiunitaryOp(v * sigma_y_blocks(n) * v.transpose());
}

std::pair<Matrix, Matrix> canonical_graded_pair(Eigen::Index n, Eigen::Index m, Parity::Kind parity,
                                                GradingRelation relation) {
    auto inconsistent = [&](const std::string &why) {
        return Error(ErrorKind::InconsistentParameters,
                     why + " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    };
    if (n <= 0 || m < 0 || m > n) {
        throw inconsistent("grading sector out of range");
    }
    if (parity == Parity::Kind::Other) {
        throw inconsistent("parity must be even or odd");
    }
    const bool odd = parity == Parity::Kind::Odd;
    if (odd && n % 2 != 0) {
        throw inconsistent("odd antiunitary needs even n");
    }
    if (relation == GradingRelation::Commute) {
        if (odd && m % 2 != 0) {
            throw inconsistent("odd antiunitary commuting with a grading needs even sectors");
        }
        return {odd ? sigma_y_blocks(n) : identity(n), signed_identity(n, m)};
    }
    if (n % 2 != 0 || 2 * m != n) {
        throw inconsistent("anticommuting grading must be balanced");
    }
    Matrix u0 = odd ? sigma_y_blocks(n) : kron(identity(n / 2), pauli_x());
    return {u0, alternating_signs(n)};
}

std::pair<AntiunitaryOp, GradingOp> conjugated_graded_pair(const Matrix &v, Eigen::Index m, Parity::Kind parity,
                                                           GradingRelation relation) {
    auto [u0, pi0] = canonical_graded_pair(v.rows(), m, parity, relation);
    return {AntiunitaryOp(v * u0 * v.transpose()), GradingOp(v * pi0 * v.adjoint())};
}

std::pair<AntiunitaryOp, GradingOp> random_graded_pair(Eigen::Index n, Eigen::Index m, Parity::Kind parity,
                                                       GradingRelation relation, Seed seed) {
    // Validate before spending a QR.
    canonical_graded_pair(n, m, parity, relation);
    return conjugated_graded_pair(haar_unitary(n, seed), m, parity, relation);
}

Matrix random_hermitian(Eigen::Index n, Seed seed) {
    if (n <= 0) {
        throw Error(ErrorKind::OutOfRange, "random_hermitian needs n >= 1");
    }
    SplitMix64 rng(seed);
    Matrix g = complex_gaussian_matrix(n, rng);
    return (g + g.adjoint()) / 2.0;
}

Matrix random_symmetric_observable(const AntiunitaryOp &t, SymmetrySign sign, Seed seed) {
    return symmetrize(random_hermitian(t.dim(), seed), t, sign);
}

SymmetryData random_class_fixture(SymmetryClass label, Eigen::Index n, Seed seed) {
    SplitMix64 root(seed);
    const Seed basis_seed = root.next();
    const Seed h_seed = root.next();
    Matrix h0 = random_hermitian(n, h_seed);

    auto need_even_n = [&] {
        if (n % 2 != 0) {
            throw Error(ErrorKind::InconsistentParameters,
                        std::string("class ") + std::string(class_name(label)) + " fixture needs even n, got " +
                            std::to_string(n));
        }
    };
    // C = T^{-1}∘Π, so that T∘C = Π.
    auto partner = [](const AntiunitaryOp &t, const GradingOp &g) {
        return AntiunitaryOp(t.factor().transpose() * g.matrix().conjugate());
    };
    auto both = [&](Eigen::Index m, Parity::Kind parity, GradingRelation rel) {
        auto [t, g] = random_graded_pair(n, m, parity, rel, basis_seed);
        AntiunitaryOp c = partner(t, g);
        Matrix h = symmetrize(symmetrize(h0, t, SymmetrySign::Commuting), c, SymmetrySign::Anticommuting);
        return SymmetryData{std::move(h), std::move(t), std::move(c), std::nullopt};
    };

    switch (label) {
        case SymmetryClass::A:
            return SymmetryData{std::move(h0), std::nullopt, std::nullopt, std::nullopt};
        case SymmetryClass::AIII: {
            Matrix v = haar_unitary(n, basis_seed);
            Matrix s = v * signed_identity(n, n / 2) * v.adjoint();
            s = (s + s.adjoint()) / 2.0;
            Matrix h = (h0 - s * h0 * s) / 2.0;
            return SymmetryData{(h + h.adjoint()) / 2.0, std::nullopt, std::nullopt, std::move(s)};
        }
        case SymmetryClass::AI: {
            AntiunitaryOp t = random_even(n, basis_seed);
            Matrix h = symmetrize(h0, t, SymmetrySign::Commuting);
            return SymmetryData{std::move(h), std::move(t), std::nullopt, std::nullopt};
        }
        case SymmetryClass::AII: {
            need_even_n();
            AntiunitaryOp t = random_odd(n, basis_seed);
            Matrix h = symmetrize(h0, t, SymmetrySign::Commuting);
            return SymmetryData{std::move(h), std::move(t), std::nullopt, std::nullopt};
        }
        case SymmetryClass::D: {
            AntiunitaryOp c = random_even(n, basis_seed);
            Matrix h = symmetrize(h0, c, SymmetrySign::Anticommuting);
            return SymmetryData{std::move(h), std::nullopt, std::move(c), std::nullopt};
        }
        case SymmetryClass::C: {
            need_even_n();
            AntiunitaryOp c = random_odd(n, basis_seed);
            Matrix h = symmetrize(h0, c, SymmetrySign::Anticommuting);
            return SymmetryData{std::move(h), std::nullopt, std::move(c), std::nullopt};
        }
        case SymmetryClass::BDI:
            need_even_n();
            return both(n / 2, Parity::Kind::Even, GradingRelation::Commute);
        case SymmetryClass::CII:
            need_even_n();
            return both(n / 2 - (n / 2) % 2, Parity::Kind::Odd, GradingRelation::Commute);
        case SymmetryClass::DIII:
            need_even_n();
            return both(n / 2, Parity::Kind::Odd, GradingRelation::Anticommute);
        case SymmetryClass::CI:
            need_even_n();
            return both(n / 2, Parity::Kind::Even, GradingRelation::Anticommute);
    }
    throw Error(ErrorKind::InconsistentParameters, "unknown class");
}

}  // namespace antinorm
