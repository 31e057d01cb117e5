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
#include <cmath>

#include "antinorm/error.h"

namespace antinorm {

namespace {

SquareSign square_sign(const Parity &p) {
    return p.is_even() ? SquareSign::Plus : SquareSign::Minus;
}

std::string relation_message(const std::string &name, double value, double tol) {
    return name + " violated: residual " + std::to_string(value) + " > tol " + std::to_string(tol);
}

// ||P₀ M P₀ + M||_F: the part of M that fails to anticommute with the diagonal grading P₀.
double offdiagonal_residual(const Matrix &m, const Matrix &pi0) {
    return (pi0 * m * pi0 + m).norm();
}

void push_standard_form(NamedResiduals &out, const Matrix &h_q, SymmetrySign sign, TargetKind kind) {
    StandardFormReport r = check_standard_form(h_q, sign, kind);
    if (r.max_abs_offending_part) {
        out.emplace_back(sign == SymmetrySign::Commuting ? "h_max_abs_imag" : "h_max_abs_real",
                         *r.max_abs_offending_part);
    }
    if (r.transpose_residual) {
        out.emplace_back(sign == SymmetrySign::Commuting ? "h_symmetric" : "h_antisymmetric", *r.transpose_residual);
    }
    if (r.blocks_residual) {
        out.emplace_back("h_sigma_y_blocks", *r.blocks_residual);
    }
}

const AntiunitaryOp &need(const std::optional<AntiunitaryOp> &op, const char *what) {
    if (!op) {
        throw Error(ErrorKind::InconsistentParameters, std::string("class requires ") + what);
    }
    return *op;
}

Matrix tc_product(const SymmetryData &data) {
    return need(data.t, "T").factor() * need(data.c, "C").factor().conjugate();
}

}  // namespace

std::string_view class_name(SymmetryClass label) {
    switch (label) {
        case SymmetryClass::A:
            return "A";
        case SymmetryClass::AIII:
            return "AIII";
        case SymmetryClass::AI:
            return "AI";
        case SymmetryClass::BDI:
            return "BDI";
        case SymmetryClass::D:
            return "D";
        case SymmetryClass::DIII:
            return "DIII";
        case SymmetryClass::AII:
            return "AII";
        case SymmetryClass::CII:
            return "CII";
        case SymmetryClass::C:
            return "C";
        case SymmetryClass::CI:
            return "CI";
    }
    return "?";
}

std::optional<SymmetryClass> parse_class(std::string_view name) {
    for (SymmetryClass c : kAllClasses) {
        if (class_name(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

ClassReport classify(const SymmetrySignature &sig) {
    using S = SquareSign;
    ClassReport report;
    report.signature = sig;
    const bool both = sig.t_sign != S::Absent && sig.c_sign != S::Absent;
    if (both) {
        report.signature.chiral = true;
    }
    switch (sig.t_sign) {
        case S::Absent:
            report.label = sig.c_sign == S::Plus    ? SymmetryClass::D
                           : sig.c_sign == S::Minus ? SymmetryClass::C
                           : sig.chiral             ? SymmetryClass::AIII
                                                    : SymmetryClass::A;
            break;
        case S::Plus:
            report.label = sig.c_sign == S::Plus    ? SymmetryClass::BDI
                           : sig.c_sign == S::Minus ? SymmetryClass::CI
                                                    : SymmetryClass::AI;
            break;
        case S::Minus:
            report.label = sig.c_sign == S::Plus    ? SymmetryClass::DIII
                           : sig.c_sign == S::Minus ? SymmetryClass::CII
                                                    : SymmetryClass::AII;
            break;
    }
    if (!both && sig.t_sign != S::Absent) {
        report.signature.chiral = false;
    }
    if (!both && sig.c_sign != S::Absent) {
        report.signature.chiral = false;
    }
    return report;
}

SymmetrySignature signature_of(SymmetryClass label) {
    using S = SquareSign;
    switch (label) {
        case SymmetryClass::A:
            return {S::Absent, S::Absent, false};
        case SymmetryClass::AIII:
            return {S::Absent, S::Absent, true};
        case SymmetryClass::AI:
            return {S::Plus, S::Absent, false};
        case SymmetryClass::BDI:
            return {S::Plus, S::Plus, true};
        case SymmetryClass::D:
            return {S::Absent, S::Plus, false};
        case SymmetryClass::DIII:
            return {S::Minus, S::Plus, true};
        case SymmetryClass::AII:
            return {S::Minus, S::Absent, false};
        case SymmetryClass::CII:
            return {S::Minus, S::Minus, true};
        case SymmetryClass::C:
            return {S::Absent, S::Minus, false};
        case SymmetryClass::CI:
            return {S::Plus, S::Minus, true};
    }
    return {};
}

ClassReport detect(const SymmetryData &data, double tol) {
    const Matrix &h = data.h;
    require_square(h, "Hamiltonian");
    require_finite(h, "Hamiltonian");
    require_hermitian(h, kHermitianRelTolerance * std::max(1.0, h.norm()), "Hamiltonian");

    NamedResiduals residuals;
    auto check = [&](const std::string &name, double value) {
        residuals.emplace_back(name, value);
        if (!(value <= tol)) {
            throw Error(ErrorKind::RelationViolated, relation_message(name, value, tol));
        }
    };
    auto square_of = [&](const AntiunitaryOp &op, const char *name) {
        Parity p = parity_of(op, tol);
        if (!p.is_even() && !p.is_odd()) {
            throw Error(ErrorKind::IndefiniteParity, std::string(name) + "^2 is neither +I nor -I (distance " +
                                                         std::to_string(p.distance) + ")");
        }
        residuals.emplace_back(std::string(name) + "_square", p.distance);
        return square_sign(p);
    };

    SymmetrySignature sig;
    if (data.t) {
        sig.t_sign = square_of(*data.t, "t");
        check("t_commutes_h", verify_symmetry(h, *data.t, SymmetrySign::Commuting));
    }
    if (data.c) {
        sig.c_sign = square_of(*data.c, "c");
        check("c_anticommutes_h", verify_symmetry(h, *data.c, SymmetrySign::Anticommuting));
    }
    std::optional<Matrix> grading;
    if (data.t && data.c) {
        require_same_dim(data.t->factor(), data.c->factor(), "T against C");
        Matrix tc = tc_product(data);
        Matrix ct = data.c->factor() * data.t->factor().conjugate();
        check("tc_commute_up_to_sign", std::min((tc - ct).norm(), (tc + ct).norm()));
        check("grading_involution", (tc * tc - identity(tc.rows())).norm());
        check("grading_hermitian", hermiticity_residual(tc));
        grading = std::move(tc);
        sig.chiral = true;
    } else if (data.chiral) {
        const Matrix &s = *data.chiral;
        require_same_dim(s, h, "chiral operator against Hamiltonian");
        require_finite(s, "chiral operator");
        check("chiral_involution", (s * s - identity(s.rows())).norm());
        check("chiral_hermitian", hermiticity_residual(s));
        check("chiral_anticommutes_h", (s * h + h * s).norm());
        sig.chiral = true;
    }

    ClassReport report = classify(sig);
    report.residuals = std::move(residuals);
    report.grading = std::move(grading);
    return report;
}

double ClassNormalForm::max_residual() const {
    double r = 0.0;
    for (const auto &[name, value] : residuals) {
        r = std::max(r, value);
    }
    return r;
}

NamedResiduals class_normal_form_residuals(SymmetryClass label, const SymmetryData &data, const Matrix &q) {
    require_same_dim(q, data.h, "Q against Hamiltonian");
    NamedResiduals out;
    out.emplace_back("unitarity", unitarity_residual(q));
    const Matrix h_q = q.adjoint() * data.h * q;
    const Eigen::Index n = q.rows();

    auto symmetry = [&](const char *name, const AntiunitaryOp &op, TargetKind kind) {
        CanonicalTarget target = canonical_target(kind, n);
        out.emplace_back(name, (q.adjoint() * op.factor() * q.conjugate() - target.u0).norm());
    };
    auto grading = [&](const Matrix &pi0, const Matrix &pi) {
        out.emplace_back("grading", (q.adjoint() * pi * q - pi0).norm());
        out.emplace_back("h_offdiagonal", offdiagonal_residual(h_q, pi0));
    };

    switch (label) {
        case SymmetryClass::A:
            break;
        case SymmetryClass::AIII: {
            if (!data.chiral) {
                throw Error(ErrorKind::InconsistentParameters, "class AIII requires a chiral operator");
            }
            GradingOp s(*data.chiral);
            grading(signed_identity(n, s.dim_plus()), s.matrix());
            break;
        }
        case SymmetryClass::AI:
            symmetry("t_symmetry", need(data.t, "T"), TargetKind::ConjugationK);
            push_standard_form(out, h_q, SymmetrySign::Commuting, TargetKind::ConjugationK);
            break;
        case SymmetryClass::AII:
            symmetry("t_symmetry", need(data.t, "T"), TargetKind::SigmaYBlocks);
            push_standard_form(out, h_q, SymmetrySign::Commuting, TargetKind::SigmaYBlocks);
            break;
        case SymmetryClass::D:
            symmetry("c_symmetry", need(data.c, "C"), TargetKind::ConjugationK);
            push_standard_form(out, h_q, SymmetrySign::Anticommuting, TargetKind::ConjugationK);
            break;
        case SymmetryClass::C:
            symmetry("c_symmetry", need(data.c, "C"), TargetKind::SigmaYBlocks);
            push_standard_form(out, h_q, SymmetrySign::Anticommuting, TargetKind::SigmaYBlocks);
            break;
        case SymmetryClass::BDI:
        case SymmetryClass::CII: {
            GradingOp pi(tc_product(data));
            bool even = label == SymmetryClass::BDI;
            symmetry("t_symmetry", *data.t, even ? TargetKind::ConjugationK : TargetKind::SigmaYBlocks);
            grading(signed_identity(n, pi.dim_plus()), pi.matrix());
            push_standard_form(out, h_q, SymmetrySign::Commuting,
                               even ? TargetKind::ConjugationK : TargetKind::SigmaYBlocks);
            break;
        }
        case SymmetryClass::DIII:
        case SymmetryClass::CI: {
            GradingOp pi(tc_product(data));
            bool diii = label == SymmetryClass::DIII;
            symmetry(diii ? "t_symmetry" : "c_symmetry", diii ? *data.t : *data.c, TargetKind::AlternatingDIII);
            grading(alternating_signs(n), pi.matrix());
            push_standard_form(out, h_q, diii ? SymmetrySign::Commuting : SymmetrySign::Anticommuting,
                               TargetKind::AlternatingDIII);
            break;
        }
    }
    return out;
}

ClassNormalForm normalize_class(const SymmetryData &data, double tol) {
    ClassNormalForm out;
    out.report = detect(data, tol);
    const Eigen::Index n = data.h.rows();

    switch (out.report.label) {
        case SymmetryClass::A:
            out.q = identity(n);
            break;
        case SymmetryClass::AIII: {
            GradingOp s(*data.chiral, tol);
            out.q.resize(n, n);
            if (s.dim_plus() > 0) {
                out.q.leftCols(s.dim_plus()) = s.plus_basis();
            }
            if (s.dim_minus() > 0) {
                out.q.rightCols(s.dim_minus()) = s.minus_basis();
            }
            break;
        }
        case SymmetryClass::AI:
        case SymmetryClass::AII: {
            NormalFormResult r = normalize(*data.t, nullptr, NormalizeMode::Auto, tol);
            out.q = std::move(r.q);
            out.target = std::move(r.target);
            break;
        }
        case SymmetryClass::D:
        case SymmetryClass::C: {
            NormalFormResult r = normalize(*data.c, nullptr, NormalizeMode::Auto, tol);
            out.q = std::move(r.q);
            out.target = std::move(r.target);
            break;
        }
        case SymmetryClass::BDI:
        case SymmetryClass::CII:
        case SymmetryClass::DIII: {
            GradingOp pi(*out.report.grading, tol);
            NormalFormResult r = normalize(*data.t, &pi, NormalizeMode::Auto, tol);
            out.q = std::move(r.q);
            out.target = std::move(r.target);
            break;
        }
        case SymmetryClass::CI: {
            // The odd member of the pair is C; normalize it against the same grading.
            GradingOp pi(*out.report.grading, tol);
            NormalFormResult r = anticommuting_normal(*data.c, pi, tol);
            out.q = std::move(r.q);
            out.target = std::move(r.target);
            break;
        }
    }
    out.h_q = out.q.adjoint() * data.h * out.q;
    out.residuals = class_normal_form_residuals(out.report.label, data, out.q);
    return out;
}

}  // namespace antinorm
