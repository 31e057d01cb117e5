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

#include "antinorm/cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "antinorm/antilinear.h"
#include "antinorm/classify.h"
#include "antinorm/ensembles.h"
#include "antinorm/error.h"
#include "antinorm/matrix_io.h"
#include "antinorm/normal_form.h"
#include "antinorm/observables.h"

namespace antinorm::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// Residuals in report order; the first one above tol names the failure.
using Table = std::vector<std::pair<std::string, double>>;

Table table_of(const Residuals &r) {
    Table t{{"unitarity", r.unitarity}, {"symmetry", r.symmetry}};
    if (r.factorization) {
        t.emplace_back("factorization", *r.factorization);
    }
    if (r.grading) {
        t.emplace_back("grading", *r.grading);
    }
    return t;
}

Table table_of(const StandardFormReport &r) {
    Table t;
    if (r.max_abs_offending_part) {
        t.emplace_back("max_abs_offending_part", *r.max_abs_offending_part);
    }
    if (r.transpose_residual) {
        t.emplace_back("transpose", *r.transpose_residual);
    }
    if (r.blocks_residual) {
        t.emplace_back("sigma_y_blocks", *r.blocks_residual);
    }
    return t;
}

ordered_json to_json(const Table &t) {
    ordered_json j = ordered_json::object();
    for (const auto &[name, value] : t) {
        j[name] = value;
    }
    return j;
}

const std::pair<std::string, double> *worst_violation(const Table &t, double tol) {
    for (const auto &entry : t) {
        if (!(entry.second <= tol)) {
            return &entry;
        }
    }
    return nullptr;
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::Parse, "cannot write " + path.string());
    }
    out << text;
}

fs::path prepare_dir(const std::string &dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) {
        throw Error(ErrorKind::Parse, "cannot create directory " + dir + ": " + ec.message());
    }
    return p;
}

std::string target_json_text(const CanonicalTarget &target) {
    std::string s = "{\n\"kind\": \"" + std::string(target_kind_name(target.kind)) + "\",\n";
    s += "\"m\": " + std::to_string(target.m) + ",\n";
    s += "\"u0\": " + serialize_matrix_json(target.u0, "U0");
    if (target.pi0) {
        s += ",\n\"pi0\": " + serialize_matrix_json(*target.pi0, "Pi0");
    }
    s += "}\n";
    return s;
}

// Reports the verdict on stderr and converts it into the exit code.
int verdict(const Table &t, double tol, std::ostream &err) {
    if (const auto *bad = worst_violation(t, tol)) {
        err << "tolerance failure: " << bad->first << " residual " << format_double(bad->second) << " > tol "
            << format_double(tol) << "\n";
        return kExitTolerance;
    }
    return kExitOk;
}

Matrix load(const std::string &path) {
    return read_matrix_file(path).values;
}

std::optional<Matrix> load_optional(const fs::path &path) {
    if (!fs::exists(path)) {
        return std::nullopt;
    }
    return read_matrix_file(path).values;
}

SymmetryData load_symmetry_data(const std::string &fixture, const std::string &h, const std::string &t,
                                const std::string &c, const std::string &s) {
    SymmetryData data;
    if (!fixture.empty()) {
        fs::path dir(fixture);
        data.h = load((dir / "H.json").string());
        if (auto m = load_optional(dir / "T.json")) data.t.emplace(std::move(*m));
        if (auto m = load_optional(dir / "C.json")) data.c.emplace(std::move(*m));
        data.chiral = load_optional(dir / "S.json");
        return data;
    }
    if (h.empty()) {
        throw Error(ErrorKind::InconsistentParameters, "--h (or --fixture) is required");
    }
    data.h = load(h);
    if (!t.empty()) data.t.emplace(load(t));
    if (!c.empty()) data.c.emplace(load(c));
    if (!s.empty()) data.chiral = load(s);
    return data;
}

std::string sign_text(SquareSign s) {
    switch (s) {
        case SquareSign::Plus:
            return "+1";
        case SquareSign::Minus:
            return "-1";
        case SquareSign::Absent:
            break;
    }
    return "absent";
}

ordered_json report_json(const ClassReport &r) {
    ordered_json j;
    j["class"] = std::string(class_name(r.label));
    j["signature"] = {{"t", sign_text(r.signature.t_sign)},
                      {"c", sign_text(r.signature.c_sign)},
                      {"chiral", r.signature.chiral}};
    j["residuals"] = to_json(r.residuals);
    return j;
}

Parity::Kind parse_parity(const std::string &name) {
    if (name == "even") return Parity::Kind::Even;
    if (name == "odd") return Parity::Kind::Odd;
    throw Error(ErrorKind::InconsistentParameters, "--parity must be even or odd, got " + name);
}

GradingRelation parse_relation(const std::string &name) {
    if (name == "commute") return GradingRelation::Commute;
    if (name == "anticommute") return GradingRelation::Anticommute;
    throw Error(ErrorKind::InconsistentParameters, "--relation must be commute or anticommute, got " + name);
}

SymmetrySign parse_sign(const std::string &name) {
    auto s = parse_symmetry_sign(name);
    if (!s) {
        throw Error(ErrorKind::InconsistentParameters, "--sign must be commuting or anticommuting, got " + name);
    }
    return *s;
}

struct NormalizeArgs {
    std::string u, pi, fixture, mode = "auto", out = ".";
    double tol = kPreconditionTolerance;
};

int cmd_normalize(const NormalizeArgs &a, std::ostream &out, std::ostream &err) {
    fs::path dir = prepare_dir(a.out);
    if (!a.fixture.empty()) {
        SymmetryData data = load_symmetry_data(a.fixture, "", "", "", "");
        ClassNormalForm nf = normalize_class(data, a.tol);
        write_matrix_file(dir / "Q.json", nf.q, "Q");
        write_matrix_file(dir / "H_Q.json", nf.h_q, "H_Q");
        if (nf.target) {
            write_text(dir / "target.json", target_json_text(*nf.target));
        }
        ordered_json report = report_json(nf.report);
        report["normal_form"] = to_json(nf.residuals);
        report["tol"] = a.tol;
        int code = verdict(nf.residuals, a.tol, err);
        report["ok"] = code == kExitOk;
        write_text(dir / "report.json", report.dump(2) + "\n");
        out << class_name(nf.report.label) << "\n";
        return code;
    }

    if (a.u.empty()) {
        throw Error(ErrorKind::InconsistentParameters, "normalize needs --u (or --fixture)");
    }
    auto mode = parse_normalize_mode(a.mode);
    if (!mode) {
        throw Error(ErrorKind::InconsistentParameters, "unknown --mode " + a.mode);
    }
    AntiunitaryOp t(load(a.u));
    std::optional<GradingOp> g;
    if (!a.pi.empty()) {
        g.emplace(load(a.pi), a.tol);
    }
    NormalFormResult r = normalize(t, g ? &*g : nullptr, *mode, a.tol);

    write_matrix_file(dir / "Q.json", r.q, "Q");
    write_text(dir / "target.json", target_json_text(r.target));
    Table table = table_of(r.residuals);
    ordered_json report;
    report["mode"] = a.mode;
    report["target"] = std::string(target_kind_name(r.target.kind));
    report["dim"] = t.dim();
    report["m"] = r.target.m;
    report["tol"] = a.tol;
    report["residuals"] = to_json(table);
    int code = verdict(table, a.tol, err);
    report["ok"] = code == kExitOk;
    write_text(dir / "report.json", report.dump(2) + "\n");
    out << target_kind_name(r.target.kind) << "\n";
    return code;
}

struct ClassifyArgs {
    std::string h, t, c, s, fixture;
    double tol = kPreconditionTolerance;
    bool json = false;
};

int cmd_classify(const ClassifyArgs &a, std::ostream &out) {
    ClassReport r = detect(load_symmetry_data(a.fixture, a.h, a.t, a.c, a.s), a.tol);
    if (a.json) {
        out << report_json(r).dump(2) << "\n";
        return kExitOk;
    }
    out << class_name(r.label) << "\n";
    for (const auto &[name, value] : r.residuals) {
        out << "  " << std::left << std::setw(24) << name << format_double(value) << "\n";
    }
    return kExitOk;
}

struct TransformArgs {
    std::string m, q, out;
    double tol = kPreconditionTolerance;
};

int cmd_transform(const TransformArgs &a) {
    MatrixFile m = read_matrix_file(a.m);
    Matrix mq = transform(m.values, load(a.q), a.tol);
    write_matrix_file(a.out, mq, m.name ? std::optional<std::string>(*m.name + "_Q") : std::nullopt);
    return kExitOk;
}

struct VerifyArgs {
    std::string relation, q, u, pi, m, sign = "commuting", kind, fixture, out;
    double tol = kPreconditionTolerance;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out, std::ostream &err) {
    ordered_json report;
    report["relation"] = a.relation;
    Table table;
    auto need = [](const std::string &v, const char *flag) -> const std::string & {
        if (v.empty()) {
            throw Error(ErrorKind::InconsistentParameters, std::string("verify needs ") + flag);
        }
        return v;
    };

    if (a.relation == "even" || a.relation == "odd" || a.relation == "graded-even" ||
        a.relation == "graded-odd" || a.relation == "anticommuting") {
        Matrix q = load(need(a.q, "--q"));
        AntiunitaryOp t(load(need(a.u, "--u")));
        std::optional<GradingOp> g;
        TargetKind kind = a.relation == "even"         ? TargetKind::ConjugationK
                          : a.relation == "odd"        ? TargetKind::SigmaYBlocks
                          : a.relation == "graded-even" ? TargetKind::GradedK
                          : a.relation == "graded-odd" ? TargetKind::GradedSigmaY
                                                       : TargetKind::AlternatingDIII;
        Eigen::Index m = 0;
        if (target_is_graded(kind)) {
            g.emplace(load(need(a.pi, "--pi")), a.tol);
            m = g->dim_plus();
        }
        table = table_of(measure_residuals(q, t, g ? &*g : nullptr, canonical_target(kind, t.dim(), m)));
    } else if (a.relation == "symmetry") {
        AntiunitaryOp t(load(need(a.u, "--u")));
        table.emplace_back("symmetry", verify_symmetry(load(need(a.m, "--m")), t, parse_sign(a.sign)));
    } else if (a.relation == "standard-form") {
        auto kind = parse_target_kind(a.kind.empty() ? "ConjugationK" : a.kind);
        if (!kind) {
            throw Error(ErrorKind::InconsistentParameters, "unknown --kind " + a.kind);
        }
        table = table_of(check_standard_form(load(need(a.m, "--m")), parse_sign(a.sign), *kind));
    } else if (a.relation == "class") {
        SymmetryData data = load_symmetry_data(need(a.fixture, "--fixture"), "", "", "", "");
        ClassReport r = detect(data, a.tol);
        report["class"] = std::string(class_name(r.label));
        table = class_normal_form_residuals(r.label, data, load(need(a.q, "--q")));
    } else {
        throw Error(ErrorKind::InconsistentParameters, "unknown --relation " + a.relation);
    }

    report["tol"] = a.tol;
    report["residuals"] = to_json(table);
    int code = verdict(table, a.tol, err);
    report["ok"] = code == kExitOk;
    std::string text = report.dump(2) + "\n";
    if (!a.out.empty()) {
        write_text(a.out, text);
    }
    out << text;
    return code;
}

struct GenerateArgs {
    std::string kind, parity = "even", relation = "commute", sign = "commuting", u, label, out = ".";
    long long n = 0;
    long long m = -1;
    Seed seed = 0;
};

int cmd_generate(const GenerateArgs &a, std::ostream &out) {
    if (a.n <= 0) {
        throw Error(ErrorKind::InconsistentParameters, "--n must be positive");
    }
    const auto n = static_cast<Eigen::Index>(a.n);
    fs::path dir = prepare_dir(a.out);
    std::vector<std::string> written;
    auto emit = [&](const char *file, const Matrix &m, const char *name) {
        write_matrix_file(dir / file, m, name);
        written.emplace_back(file);
    };

    if (a.kind == "haar") {
        emit("V.json", haar_unitary(n, a.seed), "V");
    } else if (a.kind == "even") {
        emit("U.json", random_even(n, a.seed).factor(), "U");
    } else if (a.kind == "odd") {
        emit("U.json", random_odd(n, a.seed).factor(), "U");
    } else if (a.kind == "graded") {
        Eigen::Index m = a.m >= 0 ? static_cast<Eigen::Index>(a.m) : n / 2;
        auto [t, g] = random_graded_pair(n, m, parse_parity(a.parity), parse_relation(a.relation), a.seed);
        emit("U.json", t.factor(), "U");
        emit("Pi.json", g.matrix(), "Pi");
    } else if (a.kind == "observable") {
        AntiunitaryOp t = a.u.empty() ? AntiunitaryOp::conjugation(n) : AntiunitaryOp(load(a.u));
        emit("M.json", random_symmetric_observable(t, parse_sign(a.sign), a.seed), "M");
    } else if (a.kind == "class") {
        auto label = parse_class(a.label);
        if (!label) {
            throw Error(ErrorKind::InconsistentParameters, "unknown --label " + a.label);
        }
        SymmetryData data = random_class_fixture(*label, n, a.seed);
        emit("H.json", data.h, "H");
        if (data.t) emit("T.json", data.t->factor(), "T");
        if (data.c) emit("C.json", data.c->factor(), "C");
        if (data.chiral) emit("S.json", *data.chiral, "S");
        ordered_json manifest = {{"class", a.label}, {"n", a.n}, {"seed", a.seed}};
        write_text(dir / "fixture.json", manifest.dump(2) + "\n");
        written.emplace_back("fixture.json");
    } else {
        throw Error(ErrorKind::InconsistentParameters, "unknown --kind " + a.kind);
    }
    for (const auto &f : written) {
        out << (dir / f).string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Normal forms for antiunitary symmetries and the tenfold way"};
    app.require_subcommand(1);
    std::function<int()> action;

    NormalizeArgs na;
    auto *normalize_cmd = app.add_subcommand("normalize", "Compute Q bringing T (and a grading) to canonical form");
    normalize_cmd->add_option("--u", na.u, "Unitary factor U of T = U∘K");
    normalize_cmd->add_option("--pi", na.pi, "Grading operator Π");
    normalize_cmd->add_option("--fixture", na.fixture, "Class fixture directory (H.json, T.json, C.json, S.json)");
    normalize_cmd->add_option("--mode", na.mode, "auto|even|odd|graded|anticommuting")->capture_default_str();
    normalize_cmd->add_option("--tol", na.tol, "Tolerance for preconditions and residuals")->capture_default_str();
    normalize_cmd->add_option("--out", na.out, "Output directory")->capture_default_str();
    normalize_cmd->callback([&] { action = [&] { return cmd_normalize(na, out, err); }; });

    ClassifyArgs ca;
    auto *classify_cmd = app.add_subcommand("classify", "Detect the Altland-Zirnbauer class of H");
    // --h names the Hamiltonian, so help is --help only.
    classify_cmd->set_help_flag("--help", "Print this help message and exit");
    classify_cmd->add_option("--h", ca.h, "Hamiltonian");
    classify_cmd->add_option("--t", ca.t, "Time reversal factor (commutes with H)");
    classify_cmd->add_option("--c", ca.c, "Particle-hole factor (anticommutes with H)");
    classify_cmd->add_option("--s", ca.s, "Chiral unitary (anticommutes with H)");
    classify_cmd->add_option("--fixture", ca.fixture, "Class fixture directory");
    classify_cmd->add_option("--tol", ca.tol)->capture_default_str();
    classify_cmd->add_flag("--json", ca.json, "Machine-readable output");
    classify_cmd->callback([&] { action = [&] { return cmd_classify(ca, out); }; });

    TransformArgs ta;
    auto *transform_cmd = app.add_subcommand("transform", "Write Q* M Q");
    transform_cmd->add_option("--m", ta.m, "Observable")->required();
    transform_cmd->add_option("--q", ta.q, "Unitary Q")->required();
    transform_cmd->add_option("--out", ta.out, "Output file")->required();
    transform_cmd->add_option("--tol", ta.tol)->capture_default_str();
    transform_cmd->callback([&] { action = [&] { return cmd_transform(ta); }; });

    VerifyArgs va;
    auto *verify_cmd = app.add_subcommand("verify", "Measure the residuals of a relation");
    verify_cmd
        ->add_option("--relation", va.relation,
                     "even|odd|graded-even|graded-odd|anticommuting|symmetry|standard-form|class")
        ->required();
    verify_cmd->add_option("--q", va.q);
    verify_cmd->add_option("--u", va.u);
    verify_cmd->add_option("--pi", va.pi);
    verify_cmd->add_option("--m", va.m);
    verify_cmd->add_option("--sign", va.sign, "commuting|anticommuting")->capture_default_str();
    verify_cmd->add_option("--kind", va.kind, "Target kind for standard-form");
    verify_cmd->add_option("--fixture", va.fixture);
    verify_cmd->add_option("--tol", va.tol)->capture_default_str();
    verify_cmd->add_option("--out", va.out, "Also write the report to this file");
    verify_cmd->callback([&] { action = [&] { return cmd_verify(va, out, err); }; });

    GenerateArgs ga;
    auto *generate_cmd = app.add_subcommand("generate", "Write seeded random fixtures");
    generate_cmd->add_option("--kind", ga.kind, "haar|even|odd|graded|observable|class")->required();
    generate_cmd->add_option("--n", ga.n)->required();
    generate_cmd->add_option("--m", ga.m, "Dimension of the +1 grading sector");
    generate_cmd->add_option("--parity", ga.parity)->capture_default_str();
    generate_cmd->add_option("--relation", ga.relation)->capture_default_str();
    generate_cmd->add_option("--sign", ga.sign)->capture_default_str();
    generate_cmd->add_option("--u", ga.u, "Antiunitary factor for --kind observable");
    generate_cmd->add_option("--label", ga.label, "Class label for --kind class");
    generate_cmd->add_option("--seed", ga.seed)->capture_default_str();
    generate_cmd->add_option("--out", ga.out)->capture_default_str();
    generate_cmd->callback([&] { action = [&] { return cmd_generate(ga, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return kExitValidation;
    }

    try {
        return action();
    } catch (const Error &e) {
        err << e.what() << "\n";
        return e.is_validation() ? kExitValidation : kExitTolerance;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace antinorm::cli
