#include "hlya/cli.hpp"
#include "hlya/errors.hpp"
#include "hlya/io.hpp"
#include "hlya/selftest.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hlya;
namespace st = hlya::selftest;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hlya-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }

    std::string write(const std::string& name, const std::string& text) const {
        const auto p = (path / name).string();
        std::ofstream out(p);
        out << text;
        return p;
    }
};

struct CliResult {
    int code = 0;
    std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE_BEGIN("io_cli");

TEST_CASE("documents round-trip byte-exactly") {
    st::Rng rng(157);

    const HomLYAlgebra A = st::dim2_solvable_twisted();
    const std::string a1 = io::dump(io::to_json(A));
    CHECK(io::algebra_from_json(io::json::parse(a1)) == A);
    CHECK(io::dump(io::to_json(io::algebra_from_json(io::json::parse(a1)))) == a1);

    const Representation R = adjoint(A);
    const std::string r1 = io::dump(io::to_json(R));
    CHECK(io::representation_from_json(io::json::parse(r1)) == R);

    const CocyclePair p = st::random_cocycle(rng, R);
    const std::string p1 = io::dump(io::to_json(p));
    CHECK(io::pair_from_json(io::json::parse(p1)) == p);

    const LambdaAlgebra L = deform(A, p);
    const std::string l1 = io::dump(io::to_json(L));
    CHECK(io::lambda_algebra_from_json(io::json::parse(l1)) == L);
    CHECK(io::looks_like_lambda_algebra(io::json::parse(l1)));
    CHECK_FALSE(io::looks_like_lambda_algebra(io::json::parse(a1)));

    const AbelianExtension E = build_extension(A, R, p);
    const std::string e1 = io::dump(io::to_json(E));
    const AbelianExtension E2 = io::extension_from_json(io::json::parse(e1));
    CHECK(E2.total == E.total);
    CHECK(E2.inj == E.inj);
    CHECK(E2.proj == E.proj);
    CHECK(E2.base == E.base);
    CHECK(E2.module_twist == E.module_twist);
}

TEST_CASE("parse errors carry the offending path") {
    io::json j = io::json::parse(R"({"dim": 1, "alpha": [["1"]],
        "binary": [[["1/0"]]], "ternary": [[[["0"]]]]})");
    try {
        (void)io::algebra_from_json(j);
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("$.binary[0][0][0]") != std::string::npos);
    }
}

TEST_CASE("cli check: pass, mathematical failure, parse failure") {
    TempDir dir;
    const HomLYAlgebra A = st::dim2_solvable();
    const auto ok = dir.write("ok.json", io::dump(io::to_json(A)));

    auto r = run_cli({"check", ok});
    CHECK(r.code == 0);

    HomLYAlgebra broken = A;
    broken.b(1, 0, 0) = Rational(1);
    const auto bad = dir.write("bad.json", io::dump(io::to_json(broken)));
    r = run_cli({"check", bad});
    CHECK(r.code == 1);
    CHECK(r.out.find("HLY1") != std::string::npos);
    CHECK(r.out.find("witness=(1,2)") != std::string::npos);

    io::json j = io::to_json(A);
    j["binary"][0][1][0] = "1/0";
    const auto malformed = dir.write("malformed.json", io::dump(j));
    r = run_cli({"check", malformed});
    CHECK(r.code == 2);
    CHECK(r.err.find("binary[0][1][0]") != std::string::npos);

    r = run_cli({"check", (dir.path / "missing.json").string()});
    CHECK(r.code == 2);
}

TEST_CASE("cli pipelining: adjoint -> rep, semidirect -> check, deform -> check") {
    TempDir dir;
    const HomLYAlgebra A = st::dim2_solvable();
    const auto alg = dir.write("alg.json", io::dump(io::to_json(A)));

    auto adj = run_cli({"adjoint", alg});
    REQUIRE(adj.code == 0);
    const auto rep = dir.write("rep.json", adj.out);
    CHECK(run_cli({"rep", rep}).code == 0);

    auto semi = run_cli({"semidirect", rep});
    REQUIRE(semi.code == 0);
    const auto semif = dir.write("semi.json", semi.out);
    CHECK(run_cli({"check", semif}).code == 0);

    // deform with the zero pair, then check in lambda mode (auto-detected)
    const auto pair = dir.write("pair.json", io::dump(io::to_json(CocyclePair::zeros(2, 2))));
    auto def = run_cli({"deform", alg, pair});
    REQUIRE(def.code == 0);
    const auto lam = dir.write("lam.json", def.out);
    CHECK(run_cli({"check", lam}).code == 0);
    CHECK(run_cli({"check", "--mode", "lambda", lam}).code == 0);

    // representation documents may reference the algebra by path
    io::json byref = io::json::parse(adj.out);
    byref["algebra"] = "alg.json";
    const auto repref = dir.write("repref.json", io::dump(byref));
    CHECK(run_cli({"rep", repref}).code == 0);
}

TEST_CASE("cli cohomology23 and extension commands on the separating fixture") {
    TempDir dir;
    const HomLYAlgebra A = st::abelian(2, Matrix::identity(2));
    const Representation R = st::trivial_rep(A, 1, Matrix::identity(1));
    const auto rep = dir.write("rep.json", io::dump(io::to_json(R)));

    auto coh = run_cli({"--format", "json", "cohomology23", rep});
    REQUIRE(coh.code == 0);
    const io::json hj = io::json::parse(coh.out);
    CHECK(hj["c2_dim"] == 1);
    CHECK(hj["c3_dim"] == 2);
    CHECK(hj["z_dim"] == 3);
    CHECK(hj["b_dim"] == 0);
    CHECK(hj["h_joint_dim"] == 3);

    // semidirect extension classifies to the zero vector
    const auto zpair = dir.write("zero.json", io::dump(io::to_json(CocyclePair::zeros(2, 1))));
    auto built = run_cli({"ext-build", rep, zpair});
    REQUIRE(built.code == 0);
    const auto extf = dir.write("ext.json", built.out);
    auto cls = run_cli({"--format", "json", "ext-classify", extf});
    REQUIRE(cls.code == 0);
    const io::json cj = io::json::parse(cls.out);
    for (const auto& c : cj["coordinates"]) CHECK(c == "0");

    // a nonzero representative is inequivalent to the semidirect extension
    const Cohomology23 H = cohomology23(R);
    const auto nzpair =
        dir.write("nz.json", io::dump(io::to_json(H.representatives.front())));
    auto built2 = run_cli({"ext-build", rep, nzpair});
    REQUIRE(built2.code == 0);
    const auto extf2 = dir.write("ext2.json", built2.out);
    auto eq = run_cli({"ext-equiv", extf, extf2});
    CHECK(eq.code == 1);
    auto eq2 = run_cli({"ext-equiv", extf, extf});
    CHECK(eq2.code == 0);

    // decompose: the nonzero class is not a coboundary
    auto dec = run_cli({"decompose", rep, nzpair});
    CHECK(dec.code == 1);
    auto dec2 = run_cli({"decompose", rep, zpair});
    CHECK(dec2.code == 0);
}

TEST_CASE("cli cohomology --level, derivations, nijenhuis, cocycle") {
    TempDir dir;
    const HomLYAlgebra A = st::abelian(2, Matrix::identity(2));
    const Representation R = st::trivial_rep(A, 1, Matrix::identity(1));
    const auto rep = dir.write("rep.json", io::dump(io::to_json(R)));

    auto coh = run_cli({"--format", "json", "cohomology", rep, "--level", "2"});
    REQUIRE(coh.code == 0);
    const io::json hj = io::json::parse(coh.out);
    CHECK(hj["b_dim"] == 0);
    CHECK(hj["h_dim"] == hj["z_dim"]);

    CHECK(run_cli({"cohomology", rep, "--level", "1"}).code == 3);

    auto der = run_cli({"--format", "json", "derivations", rep});
    REQUIRE(der.code == 0);
    CHECK(io::json::parse(der.out)["dim"] == 2);

    const auto alg = dir.write("alg.json", io::dump(io::to_json(st::cross_product3())));
    const auto nmat = dir.write("n.json", io::dump(io::to_json(Matrix::identity(3))));
    CHECK(run_cli({"nijenhuis", alg, nmat}).code == 1);
    const auto zmat = dir.write("z.json", io::dump(io::to_json(Matrix(3, 3))));
    CHECK(run_cli({"nijenhuis", alg, zmat}).code == 0);

    const auto pair = dir.write("pair.json", io::dump(io::to_json(CocyclePair::zeros(2, 1))));
    CHECK(run_cli({"cocycle", rep, pair}).code == 0);

    // precondition violations exit with code 3
    HomLYAlgebra invalid = st::dim2_solvable();
    invalid.b(0, 1, 1) = Rational(7);
    invalid.b(1, 0, 1) = Rational(7); // breaks HLY1
    const auto inv = dir.write("invalid.json", io::dump(io::to_json(invalid)));
    CHECK(run_cli({"adjoint", inv}).code == 3);
}

TEST_CASE("malformed documents are parse errors, not crashes") {
    CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"([["1"],["2","3"]])")), ParseError);
    CHECK_THROWS_AS(io::cochain_from_json(io::json::parse(R"({"arity":2,"coeffs":["1"]})")),
                    ParseError);
    CHECK_THROWS_AS(io::algebra_from_json(io::json::parse(R"({"dim":"two"})")), ParseError);
    CHECK_THROWS_AS(io::algebra_from_json(io::json::parse(
                        R"({"dim":1,"alpha":[["1","0"]],"binary":[],"ternary":[]})")),
                    ParseError);
    CHECK_THROWS_AS(io::pair_from_json(io::json::parse(R"({"nu": 3})")), ParseError);
}

TEST_CASE("cli usage surface") {
    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("check") != std::string::npos);

    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);

    TempDir dir;
    const auto rep = dir.write(
        "rep.json", io::dump(io::to_json(st::trivial_rep(st::abelian(2, Matrix::identity(2)), 1,
                                                         Matrix::identity(1)))));
    // the size guard is overridable per invocation and reported as exit 3
    CHECK(run_cli({"cohomology23", rep, "--max-size", "2"}).code == 3);
    CHECK(run_cli({"cohomology23", rep, "--max-size", "1000"}).code == 0);
}

TEST_CASE("cli output is deterministic") {
    TempDir dir;
    const auto rep = dir.write(
        "rep.json", io::dump(io::to_json(adjoint(st::dim2_solvable()))));
    const auto r1 = run_cli({"--format", "json", "cohomology23", rep});
    const auto r2 = run_cli({"--format", "json", "cohomology23", rep});
    CHECK(r1.out == r2.out);
    CHECK(r1.code == r2.code);
}

TEST_SUITE_END();
