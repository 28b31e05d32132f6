#include "hlya/cli.hpp"

#include "hlya/io.hpp"
#include "hlya/linalg.hpp"
#include "hlya/selftest.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

namespace hlya {
namespace cli {

namespace {

using io::json;

/// Documents may reference a sibling file instead of embedding a sub-document
/// ("algebra": "base.json"); references resolve relative to the referencing
/// file's directory.
json load_resolved(const std::string& path) {
    json j = io::load_file(path);
    const auto dir = std::filesystem::path(path).parent_path();
    if (j.is_object())
        for (const char* key : {"algebra", "total", "base"}) {
            auto it = j.find(key);
            if (it != j.end() && it->is_string()) {
                const auto ref = (dir / it->get<std::string>()).string();
                *it = io::load_file(ref);
            }
        }
    return j;
}

struct Output {
    std::string format = "text";
    std::ostream* out = nullptr;

    void emit_report(const CheckReport& r) const {
        if (format == "json")
            (*out) << io::dump(io::to_json(r));
        else
            (*out) << io::report_to_text(r);
    }
    void emit_doc(const json& j) const { (*out) << io::dump(j); }
};

int check_exit(bool passed) { return passed ? 0 : 1; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computer algebra for Hom-Lie-Yamaguti structures"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    long long max_raw = SizeGuard{}.max_raw;
    app.add_option("--max-size", max_raw, "raw-coordinate guard for cochain spaces");

    std::string file_a, file_b, mode = "auto";
    int level = 2;
    std::uint64_t seed = 1;
    bool quick = false;

    auto* c_check = app.add_subcommand("check", "verify the defining axioms of an algebra file");
    c_check->add_option("file", file_a)->required();
    c_check->add_option("--mode", mode, "hlya | deformation | lambda | auto")
        ->check(CLI::IsMember({"auto", "hlya", "deformation", "lambda"}));

    auto* c_rep = app.add_subcommand("rep", "verify the representation conditions");
    c_rep->add_option("file", file_a)->required();

    auto* c_adj = app.add_subcommand("adjoint", "emit the adjoint representation");
    c_adj->add_option("file", file_a)->required();

    auto* c_semi = app.add_subcommand("semidirect", "emit the semidirect-product algebra");
    c_semi->add_option("file", file_a)->required();

    auto* c_coh23 = app.add_subcommand("cohomology23", "the (2,3)-cohomology of a representation");
    c_coh23->add_option("file", file_a)->required();

    auto* c_coh = app.add_subcommand("cohomology", "higher cohomology dimensions");
    c_coh->add_option("file", file_a)->required();
    c_coh->add_option("--level", level, "level n >= 2")->required();

    auto* c_coc = app.add_subcommand("cocycle", "check a (nu, omega) pair against CC01..CC4");
    c_coc->add_option("rep", file_a)->required();
    c_coc->add_option("pair", file_b)->required();

    auto* c_dec = app.add_subcommand("decompose", "express a cocycle as a coboundary if possible");
    c_dec->add_option("rep", file_a)->required();
    c_dec->add_option("pair", file_b)->required();

    auto* c_der = app.add_subcommand("derivations", "basis of the derivation space");
    c_der->add_option("rep", file_a)->required();

    auto* c_nij = app.add_subcommand("nijenhuis", "check the Nijenhuis identities for N");
    c_nij->add_option("algebra", file_a)->required();
    c_nij->add_option("matrix", file_b)->required();

    auto* c_def = app.add_subcommand("deform", "emit the one-parameter deformed algebra");
    c_def->add_option("algebra", file_a)->required();
    c_def->add_option("pair", file_b)->required();

    auto* c_extb = app.add_subcommand("ext-build", "build the extension of a cocycle pair");
    c_extb->add_option("rep", file_a)->required();
    c_extb->add_option("pair", file_b)->required();

    auto* c_extc = app.add_subcommand("ext-classify", "cohomology-class coordinates of an extension");
    c_extc->add_option("file", file_a)->required();

    auto* c_exte = app.add_subcommand("ext-equiv", "equivalence of two extensions");
    c_exte->add_option("first", file_a)->required();
    c_exte->add_option("second", file_b)->required();

    auto* c_self = app.add_subcommand("selftest", "run the randomized property suites");
    c_self->add_option("--seed", seed, "random seed");
    c_self->add_flag("--quick", quick, "smaller trial counts");

    // global options (--format, --max-size) may follow the subcommand
    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const Output fmt{format, &out};
    const SizeGuard guard{max_raw};

    try {
        if (*c_check) {
            const json j = load_resolved(file_a);
            std::string m = mode;
            if (m == "auto") m = io::looks_like_lambda_algebra(j) ? "lambda" : "hlya";
            CheckReport r;
            if (m == "lambda")
                r = check_lambda(io::lambda_algebra_from_json(j));
            else if (m == "deformation")
                r = check_deformation_type(io::algebra_from_json(j));
            else
                r = check_hlya(io::algebra_from_json(j));
            fmt.emit_report(r);
            return check_exit(r.passed());
        }
        if (*c_rep) {
            const RepReport r = check_representation(io::representation_from_json(load_resolved(file_a)));
            fmt.emit_report(r);
            return check_exit(r.passed());
        }
        if (*c_adj) {
            fmt.emit_doc(io::to_json(adjoint(io::algebra_from_json(load_resolved(file_a)))));
            return 0;
        }
        if (*c_semi) {
            fmt.emit_doc(io::to_json(semidirect(io::representation_from_json(load_resolved(file_a)))));
            return 0;
        }
        if (*c_coh23) {
            const Cohomology23 h =
                cohomology23(io::representation_from_json(load_resolved(file_a)), guard);
            fmt.emit_doc(io::to_json(h));
            return 0;
        }
        if (*c_coh) {
            const HigherCohomology h =
                cohomology_higher(io::representation_from_json(load_resolved(file_a)), level, guard);
            json j;
            j["level"] = level;
            j["z_dim"] = h.zdim;
            j["b_dim"] = h.bdim;
            j["h_dim"] = h.hdim;
            fmt.emit_doc(j);
            return 0;
        }
        if (*c_coc) {
            const Representation R = io::representation_from_json(load_resolved(file_a));
            const CocyclePair p = io::pair_from_json(load_resolved(file_b), file_b);
            const CocycleReport r = check_cocycle23(R, p);
            fmt.emit_report(r);
            return check_exit(r.passed());
        }
        if (*c_dec) {
            const Representation R = io::representation_from_json(load_resolved(file_a));
            const CocyclePair p = io::pair_from_json(load_resolved(file_b), file_b);
            const auto f = decompose(R, p);
            json j;
            j["decomposable"] = f.has_value();
            if (f) j["f"] = io::to_json(*f);
            fmt.emit_doc(j);
            return f ? 0 : 1;
        }
        if (*c_der) {
            const Representation R = io::representation_from_json(load_resolved(file_a));
            const auto basis = derivation_space(R);
            json j;
            j["dim"] = basis.size();
            json arr = json::array();
            for (const auto& m : basis) arr.push_back(io::to_json(m));
            j["basis"] = std::move(arr);
            fmt.emit_doc(j);
            return 0;
        }
        if (*c_nij) {
            const HomLYAlgebra A = io::algebra_from_json(load_resolved(file_a));
            const Matrix N = io::matrix_from_json(io::load_file(file_b), file_b);
            const NijenhuisReport r = check_nijenhuis(A, N);
            fmt.emit_report(r);
            return check_exit(r.passed());
        }
        if (*c_def) {
            const HomLYAlgebra A = io::algebra_from_json(load_resolved(file_a));
            const CocyclePair p = io::pair_from_json(load_resolved(file_b), file_b);
            fmt.emit_doc(io::to_json(deform(A, p)));
            return 0;
        }
        if (*c_extb) {
            const Representation R = io::representation_from_json(load_resolved(file_a));
            const CocyclePair p = io::pair_from_json(load_resolved(file_b), file_b);
            fmt.emit_doc(io::to_json(build_extension(R.algebra, R, p)));
            return 0;
        }
        if (*c_extc) {
            const AbelianExtension E = io::extension_from_json(load_resolved(file_a));
            json j;
            j["coordinates"] = io::to_json(classify(E, guard));
            fmt.emit_doc(j);
            return 0;
        }
        if (*c_exte) {
            const AbelianExtension E1 = io::extension_from_json(load_resolved(file_a));
            const AbelianExtension E2 = io::extension_from_json(load_resolved(file_b));
            const auto F = are_equivalent(E1, E2);
            json j;
            j["equivalent"] = F.has_value();
            if (F) j["F"] = io::to_json(*F);
            fmt.emit_doc(j);
            return F ? 0 : 1;
        }
        if (*c_self) {
            const auto results = selftest::run_all(seed, quick, &out);
            bool ok = true;
            for (const auto& r : results) ok = ok && r.passed;
            out << (ok ? "SELFTEST: pass" : "SELFTEST: fail") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "precondition violated: InvalidInput: " << e.what() << "\n";
        return 3;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace cli
} // namespace hlya
