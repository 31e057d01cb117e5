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

#include "antinorm/classify.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"

#include "antinorm/ensembles.h"
#include "antinorm/error.h"
#include "support/oracles.h"

using namespace antinorm;
namespace fx = antinorm::testing;

namespace {

double residual_named(const NamedResiduals &rs, const std::string &name) {
    for (const auto &[n, v] : rs) {
        if (n == name) {
            return v;
        }
    }
    ADD_FAILURE() << "missing residual " << name;
    return -1.0;
}

bool has_residual(const NamedResiduals &rs, const std::string &name) {
    return std::any_of(rs.begin(), rs.end(), [&](const auto &p) { return p.first == name; });
}

// C = T^{-1}∘Π, so that T∘C is the worked grading itself.
SymmetryData diii_example(const Matrix &h) {
    AntiunitaryOp t(fx::example_diii_u());
    Matrix c_factor = fx::example_diii_u().transpose() * fx::example_diii_pi().conjugate();
    return SymmetryData{h, t, AntiunitaryOp(c_factor), std::nullopt};
}

}  // namespace

TEST(classify, full_table) {
    using S = SquareSign;
    struct Row {
        S t;
        S c;
        bool chiral;
        SymmetryClass label;
    };
    const Row table[] = {
        {S::Absent, S::Absent, false, SymmetryClass::A},  {S::Absent, S::Absent, true, SymmetryClass::AIII},
        {S::Plus, S::Absent, false, SymmetryClass::AI},   {S::Plus, S::Plus, true, SymmetryClass::BDI},
        {S::Absent, S::Plus, false, SymmetryClass::D},    {S::Minus, S::Plus, true, SymmetryClass::DIII},
        {S::Minus, S::Absent, false, SymmetryClass::AII}, {S::Minus, S::Minus, true, SymmetryClass::CII},
        {S::Absent, S::Minus, false, SymmetryClass::C},   {S::Plus, S::Minus, true, SymmetryClass::CI},
    };
    std::set<SymmetryClass> seen;
    for (const Row &row : table) {
        ClassReport r = classify(SymmetrySignature{row.t, row.c, row.chiral});
        EXPECT_EQ(r.label, row.label) << class_name(row.label);
        seen.insert(r.label);
        EXPECT_EQ(classify(signature_of(row.label)).label, row.label);
    }
    EXPECT_EQ(seen.size(), 10u);
}

TEST(classify, both_present_implies_chiral) {
    EXPECT_EQ(classify(SymmetrySignature{SquareSign::Plus, SquareSign::Plus, false}).label, SymmetryClass::BDI);
    EXPECT_TRUE(classify(SymmetrySignature{SquareSign::Minus, SquareSign::Plus, false}).signature.chiral);
    EXPECT_TRUE(signature_of(SymmetryClass::CI).chiral);
}

TEST(classify, chiral_flag_ignored_with_single_symmetry) {
    EXPECT_EQ(classify(SymmetrySignature{SquareSign::Plus, SquareSign::Absent, true}).label, SymmetryClass::AI);
    EXPECT_EQ(classify(SymmetrySignature{SquareSign::Absent, SquareSign::Minus, true}).label, SymmetryClass::C);
}

TEST(class_names, round_trip) {
    for (SymmetryClass c : kAllClasses) {
        EXPECT_EQ(parse_class(class_name(c)), c);
    }
    EXPECT_FALSE(parse_class("AIV").has_value());
}

TEST(detect, sigma_z_with_conjugation_is_ai) {
    ClassReport r = detect(SymmetryData{pauli_z(), AntiunitaryOp::conjugation(2), std::nullopt, std::nullopt});
    EXPECT_EQ(r.label, SymmetryClass::AI);
    for (const auto &[name, value] : r.residuals) {
        EXPECT_EQ(value, 0.0) << name;
    }
    EXPECT_FALSE(r.grading.has_value());
}

TEST(detect, symmetrized_observable_is_ai) {
    AntiunitaryOp t(fx::example_even_u());
    Matrix h = random_symmetric_observable(t, SymmetrySign::Commuting, 17);
    ClassReport r = detect(SymmetryData{h, t, std::nullopt, std::nullopt});
    EXPECT_EQ(r.label, SymmetryClass::AI);
    EXPECT_LE(residual_named(r.residuals, "t_commutes_h"), 1e-13);
}

TEST(detect, worked_diii_pair) {
    ClassReport r = detect(diii_example(Matrix::Zero(4, 4)));
    EXPECT_EQ(r.label, SymmetryClass::DIII);
    ASSERT_TRUE(r.grading.has_value());
    EXPECT_LE((*r.grading - fx::example_diii_pi()).norm(), 1e-15);
    EXPECT_LE(residual_named(r.residuals, "grading_involution"), 1e-15);
}

TEST(detect, worked_diii_pair_with_c_composed_the_other_way) {
    // C = T∘Π gives T∘C = T∘T∘Π = -Π: the same class, with the grading's sign flipped.
    AntiunitaryOp t(fx::example_diii_u());
    AntiunitaryOp c(fx::example_diii_u() * fx::example_diii_pi().conjugate());
    ClassReport r = detect(SymmetryData{Matrix::Zero(4, 4), t, c, std::nullopt});
    EXPECT_EQ(r.label, SymmetryClass::DIII);
    EXPECT_LE((*r.grading + fx::example_diii_pi()).norm(), 1e-15);
}

TEST(detect, odd_t_alone_is_aii) {
    AntiunitaryOp t = random_odd(6, 4);
    Matrix h = random_symmetric_observable(t, SymmetrySign::Commuting, 4);
    EXPECT_EQ(detect(SymmetryData{h, t, std::nullopt, std::nullopt}).label, SymmetryClass::AII);
}

TEST(detect, no_symmetry_is_a_and_chiral_is_aiii) {
    Matrix h = random_hermitian(4, 1);
    EXPECT_EQ(detect(SymmetryData{h, std::nullopt, std::nullopt, std::nullopt}).label, SymmetryClass::A);
    Matrix s = pauli_z();
    EXPECT_EQ(detect(SymmetryData{pauli_x(), std::nullopt, std::nullopt, s}).label, SymmetryClass::AIII);
}

TEST(detect, violated_relations_are_reported) {
    // σ_y is imaginary and does not commute with K.
    try {
        detect(SymmetryData{pauli_y(), AntiunitaryOp::conjugation(2), std::nullopt, std::nullopt});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::RelationViolated);
        EXPECT_NE(e.detail().find("t_commutes_h"), std::string::npos);
    }
    // Chiral S must anticommute with H.
    EXPECT_THROW(detect(SymmetryData{pauli_z(), std::nullopt, std::nullopt, Matrix(pauli_z())}), Error);
    // A non-zero Hamiltonian breaks the worked DIII pair.
    try {
        detect(diii_example(identity(4)));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::RelationViolated);
    }
}

TEST(detect, indefinite_parity) {
    try {
        detect(SymmetryData{Matrix::Zero(2, 2), w_theta(1.0), std::nullopt, std::nullopt});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndefiniteParity);
    }
}

TEST(detect, round_trips_every_class_fixture) {
    for (SymmetryClass label : kAllClasses) {
        for (Seed seed = 1; seed <= 5; ++seed) {
            for (Eigen::Index n : {Eigen::Index(4), Eigen::Index(8), Eigen::Index(12)}) {
                SymmetryData data = random_class_fixture(label, n, seed);
                ClassReport r = detect(data);
                EXPECT_EQ(r.label, label) << class_name(label) << " seed " << seed << " n " << n;
                // Soundness: nothing the report relies on is violated.
                for (const auto &[name, value] : r.residuals) {
                    EXPECT_LE(value, kPreconditionTolerance) << class_name(label) << ' ' << name;
                }
            }
        }
    }
}

TEST(detect, fixtures_are_deterministic) {
    SymmetryData a = random_class_fixture(SymmetryClass::CII, 8, 9);
    SymmetryData b = random_class_fixture(SymmetryClass::CII, 8, 9);
    EXPECT_EQ(a.h, b.h);
    EXPECT_EQ(a.t->factor(), b.t->factor());
    EXPECT_EQ(a.c->factor(), b.c->factor());
}

TEST(random_class_fixture, rejects_odd_dimension_where_required) {
    for (SymmetryClass label : {SymmetryClass::AII, SymmetryClass::BDI, SymmetryClass::DIII, SymmetryClass::C,
                                SymmetryClass::CI, SymmetryClass::CII}) {
        EXPECT_THROW(random_class_fixture(label, 5, 1), Error) << class_name(label);
    }
    for (SymmetryClass label : {SymmetryClass::A, SymmetryClass::AIII, SymmetryClass::AI, SymmetryClass::D}) {
        EXPECT_NO_THROW(random_class_fixture(label, 5, 1)) << class_name(label);
    }
}

TEST(normalize_class, every_class_reaches_standard_form) {
    for (SymmetryClass label : kAllClasses) {
        for (Seed seed = 1; seed <= 5; ++seed) {
            SymmetryData data = random_class_fixture(label, 8, seed);
            ClassNormalForm nf = normalize_class(data);
            EXPECT_EQ(nf.report.label, label);
            EXPECT_LE(nf.max_residual(), 1e-9) << class_name(label) << " seed " << seed;
            EXPECT_LE(unitarity_residual(nf.q), 1e-10);
            // The reported residuals are reproducible from (data, Q) alone.
            NamedResiduals again = class_normal_form_residuals(label, data, nf.q);
            ASSERT_EQ(again.size(), nf.residuals.size());
            for (std::size_t k = 0; k < again.size(); ++k) {
                EXPECT_EQ(again[k], nf.residuals[k]);
            }
        }
    }
}

TEST(normalize_class, standard_form_checks_match_the_class) {
    ClassNormalForm ai = normalize_class(random_class_fixture(SymmetryClass::AI, 6, 3));
    EXPECT_TRUE(has_residual(ai.residuals, "h_max_abs_imag"));
    EXPECT_TRUE(has_residual(ai.residuals, "h_symmetric"));
    ClassNormalForm d = normalize_class(random_class_fixture(SymmetryClass::D, 6, 3));
    EXPECT_TRUE(has_residual(d.residuals, "h_max_abs_real"));
    EXPECT_TRUE(has_residual(d.residuals, "h_antisymmetric"));
    ClassNormalForm aii = normalize_class(random_class_fixture(SymmetryClass::AII, 6, 3));
    EXPECT_TRUE(has_residual(aii.residuals, "h_sigma_y_blocks"));
    ClassNormalForm bdi = normalize_class(random_class_fixture(SymmetryClass::BDI, 8, 3));
    EXPECT_TRUE(has_residual(bdi.residuals, "h_offdiagonal"));
    EXPECT_LE(residual_named(bdi.residuals, "h_offdiagonal"), 1e-10);
}

TEST(normalize_class, worked_diii_pair) {
    ClassNormalForm nf = normalize_class(diii_example(Matrix::Zero(4, 4)));
    EXPECT_EQ(nf.report.label, SymmetryClass::DIII);
    EXPECT_LE((nf.q - fx::example_diii_q()).norm(), 1e-15);
}
