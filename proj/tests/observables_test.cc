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

#include <cmath>
#include <limits>

#include "gtest/gtest.h"

#include "antinorm/ensembles.h"
#include "antinorm/error.h"
#include "support/oracles.h"

using namespace antinorm;
namespace fx = antinorm::testing;

TEST(verify_symmetry, examples) {
    AntiunitaryOp k = AntiunitaryOp::conjugation(2);
    EXPECT_EQ(verify_symmetry(identity(2), k, SymmetrySign::Commuting), 0.0);
    EXPECT_EQ(verify_symmetry(identity(4), AntiunitaryOp(fx::example_even_u()), SymmetrySign::Commuting), 0.0);
    EXPECT_EQ(verify_symmetry(pauli_z(), k, SymmetrySign::Commuting), 0.0);
    EXPECT_NEAR(verify_symmetry(pauli_z(), k, SymmetrySign::Anticommuting), 2.0 * std::sqrt(2.0), 1e-15);
    EXPECT_EQ(verify_symmetry(pauli_y(), k, SymmetrySign::Anticommuting), 0.0);
}

TEST(verify_symmetry, errors) {
    AntiunitaryOp k = AntiunitaryOp::conjugation(2);
    Matrix not_hermitian = pauli_x();
    not_hermitian(0, 1) = kI;
    EXPECT_THROW(verify_symmetry(not_hermitian, k, SymmetrySign::Commuting), Error);
    EXPECT_THROW(verify_symmetry(identity(3), k, SymmetrySign::Commuting), Error);
}

TEST(symmetrize, conjugation_splits_real_and_imaginary_parts) {
    AntiunitaryOp k = AntiunitaryOp::conjugation(5);
    Matrix m = random_hermitian(5, 3);
    Matrix re = symmetrize(m, k, SymmetrySign::Commuting);
    Matrix im = symmetrize(m, k, SymmetrySign::Anticommuting);
    EXPECT_LE((re - Matrix(m.real().cast<Complex>())).norm(), 1e-15);
    EXPECT_LE((im - Matrix(kI * m.imag().cast<Complex>())).norm(), 1e-15);
}

TEST(symmetrize, result_satisfies_the_relation) {
    AntiunitaryOp t(fx::example_even_u());
    Matrix m = symmetrize(random_hermitian(4, 13), t, SymmetrySign::Commuting);
    EXPECT_LE(verify_symmetry(m, t, SymmetrySign::Commuting), 1e-13);
    Matrix a = random_symmetric_observable(t, SymmetrySign::Anticommuting, 31);
    EXPECT_LE(verify_symmetry(a, t, SymmetrySign::Anticommuting), 1e-13);
}

TEST(transform, identity_is_a_no_op) {
    Matrix m = random_hermitian(6, 1);
    EXPECT_EQ(transform(m, identity(6)), m);
    EXPECT_THROW(transform(m, 2.0 * identity(6)), Error);
}

TEST(transform, preserves_spectrum) {
    for (Seed seed = 1; seed <= 5; ++seed) {
        Eigen::Index n = static_cast<Eigen::Index>(8 * seed);
        Matrix m = random_hermitian(n, seed);
        Matrix mq = transform(m, haar_unitary(n, seed + 100));
        EXPECT_LE((hermitian_eigenvalues(m) - hermitian_eigenvalues(mq)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(transform, even_commuting_becomes_real_symmetric) {
    AntiunitaryOp t(fx::example_even_u());
    Matrix q = even_normal_basis(t).q;
    Matrix mq = transform(random_symmetric_observable(t, SymmetrySign::Commuting, 5), q);
    EXPECT_LE(max_abs_imag(mq), 1e-10);
    EXPECT_LE((mq - mq.transpose()).norm(), 1e-10);
}

TEST(transform, even_anticommuting_becomes_imaginary_antisymmetric) {
    AntiunitaryOp t(fx::example_even_u());
    Matrix q = even_normal_basis(t).q;
    Matrix mq = transform(random_symmetric_observable(t, SymmetrySign::Anticommuting, 5), q);
    EXPECT_LE(max_abs_real(mq), 1e-10);
    EXPECT_LE((mq + mq.transpose()).norm(), 1e-10);
}

TEST(check_standard_form, examples) {
    Matrix real_symmetric(2, 2);
    real_symmetric << 1.5, -2.0, -2.0, 0.25;
    StandardFormReport r = check_standard_form(real_symmetric, SymmetrySign::Commuting, TargetKind::ConjugationK);
    EXPECT_EQ(r.max(), 0.0);
    EXPECT_EQ(*r.max_abs_offending_part, 0.0);
    EXPECT_EQ(*r.transpose_residual, 0.0);
    EXPECT_FALSE(r.blocks_residual.has_value());

    EXPECT_EQ(check_standard_form(pauli_y(), SymmetrySign::Anticommuting, TargetKind::ConjugationK).max(), 0.0);
    EXPECT_GT(check_standard_form(pauli_y(), SymmetrySign::Commuting, TargetKind::ConjugationK).max(), 1.0);
}

TEST(check_standard_form, odd_commuting_property) {
    for (Seed seed = 1; seed <= 20; ++seed) {
        AntiunitaryOp t = random_odd(8, seed);
        Matrix q = odd_normal_basis(t).q;
        Matrix m = random_symmetric_observable(t, SymmetrySign::Commuting, seed + 1000);
        StandardFormReport r =
            check_standard_form(transform(m, q), SymmetrySign::Commuting, TargetKind::SigmaYBlocks);
        ASSERT_TRUE(r.blocks_residual.has_value());
        EXPECT_LE(r.max(), 1e-10) << seed;
    }
}

TEST(check_standard_form, even_property_both_signs) {
    for (Seed seed = 1; seed <= 10; ++seed) {
        AntiunitaryOp t = random_even(6, seed);
        Matrix q = even_normal_basis(t).q;
        for (SymmetrySign sign : {SymmetrySign::Commuting, SymmetrySign::Anticommuting}) {
            Matrix m = random_symmetric_observable(t, sign, seed + 50);
            ASSERT_LE(verify_symmetry(m, t, sign), 1e-12);
            EXPECT_LE(check_standard_form(transform(m, q), sign, TargetKind::ConjugationK).max(), 1e-9);
        }
    }
}

TEST(check_standard_form, odd_anticommuting_property) {
    AntiunitaryOp t = random_odd(10, 77);
    Matrix q = odd_normal_basis(t).q;
    Matrix m = random_symmetric_observable(t, SymmetrySign::Anticommuting, 78);
    EXPECT_LE(check_standard_form(transform(m, q), SymmetrySign::Anticommuting, TargetKind::SigmaYBlocks).max(),
              1e-9);
}

TEST(kramers_pair_gap, odd_symmetry_forces_pairs) {
    for (Seed s = 1; s <= 5; ++s) {
        AntiunitaryOp t = random_odd(8, s);
        Matrix m = random_symmetric_observable(t, SymmetrySign::Commuting, s + 10);
        EXPECT_LE(kramers_pair_gap(m), 1e-9 * std::max(1.0, m.norm()));
    }
}

TEST(kramers_pair_gap, generic_and_odd_dimension) {
    EXPECT_GT(kramers_pair_gap(random_hermitian(8, 2)), 1e-3);
    EXPECT_EQ(kramers_pair_gap(identity(3)), std::numeric_limits<double>::infinity());
    EXPECT_EQ(kramers_pair_gap(identity(4)), 0.0);
}

TEST(symmetry_sign, parse) {
    EXPECT_EQ(parse_symmetry_sign("commuting"), SymmetrySign::Commuting);
    EXPECT_EQ(parse_symmetry_sign(symmetry_sign_name(SymmetrySign::Anticommuting)), SymmetrySign::Anticommuting);
    EXPECT_FALSE(parse_symmetry_sign("sideways").has_value());
}
