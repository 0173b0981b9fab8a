#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cms/gl12.hpp"
#include "cms/json_io.hpp"

#ifndef CMS_CLI_PATH
#error "CMS_CLI_PATH must name the cms_cli binary"
#endif

using namespace cms;
using cms::io::json;

namespace {

struct Run {
    int status = -1;
    std::string out, err;
};

std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / "cms_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

Run run(const std::string& args) {
    const auto err_file = scratch() / "stderr.txt";
    const std::string cmd = std::string(CMS_CLI_PATH) + " " + args + " 2>" + err_file.string();
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(err_file);
    r.err.assign(std::istreambuf_iterator<char>(in), {});
    return r;
}

std::string write_file(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("json encodings round trip") {
    const LaurentPoly f = gl12::phi(2, 0) + gl12::psi(-1);
    const json j = io::poly_to_json(f);
    CHECK(io::poly_from_json(j) == f);
    CHECK(j.at("terms").at(0).at("coef").is_string());
    CHECK(io::rational_from_json("-4/6") == make_rational(-2, 3));
    CHECK(io::rational_from_json(5) == 5);
    CHECK_THROWS_AS(io::rational_from_json(1.5), InvalidArgument);
    CHECK_THROWS_AS(io::poly_from_json(json{{"n", 1}}), InvalidArgument);
    const DeformedParams p(2, 1, make_rational(3, 7));
    const auto q = io::params_from_json(io::params_to_json(p));
    CHECK(q.n == 2);
    CHECK(q.m == 1);
    CHECK(q.k == make_rational(3, 7));
}

TEST_CASE("cli: weight commands") {
    auto r = run("class --weight '[0,0,0]' --n 1 --m 1");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out).at("size") == 2);

    r = run("typical --weight '[0,1,1]' --n 1 --m 1");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out).at("typical") == false);
    CHECK(run("--output table typical --weight '[0,1,1]'").out == "false\n");

    r = run("oddreflect --a 3,2,5 --b 3,1,2,4");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out) == json{{"B", {4, 1, 3, 5}}, {"A", {5, 3, 5}}});

    r = run("kacflag --weight '[-2,2,2]'");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out).size() == 2);

    r = run("kacflag --weight '[0,1,1]'");
    CHECK(r.status == 1);
    CHECK(json::parse(r.err).at("error").at("code") == "NotTypical");

    r = run("class --weight '[1,0,0]'");
    CHECK(r.status == 1);
    CHECK(json::parse(r.err).at("error").at("code") == "NonAdmissible");
}

TEST_CASE("cli: operators and images") {
    const DeformedParams p(1, 1, make_rational(-1, 2));
    const std::string psi0 = io::poly_to_json(gl12::psi(0)).dump();
    auto r = run("apply --p 2 --input '" + psi0 + "'");
    REQUIRE(r.status == 0);
    CHECK(io::poly_from_json(json::parse(r.out)) == apply_integral(2, gl12::psi(0), p));

    const std::string x = io::poly_to_json(gl12::mono(1, 0)).dump();
    r = run("apply --p 2 --input '" + x + "'");
    CHECK(r.status == 1);
    CHECK(json::parse(r.err).at("error").at("code") == "DivisionObstruction");
    r = run("apply --p 2 --mode localized --input '" + x + "'");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out).contains("den"));

    const std::string file = write_file("psi0.json", psi0);
    CHECK(run("apply --p 1 --input " + file).status == 0);

    r = run("hc --p 2");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out) == io::hc_to_json(hc_integral(2, p)));
    r = run("hc --p 2 --eval '[1,-2]'");
    CHECK(json::parse(r.out) == "-1/1");
    CHECK(run("hc --p 3 --check").status == 0);
}

TEST_CASE("cli: subspaces and blocks") {
    auto r = run("subspace --seed '[[1,-1],[-1,1]]'");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("basis").size() == 2);
    CHECK(j.at("support").size() == 3);

    r = run("decompose --seed '[[1,-1],[-1,1]]'");
    REQUIRE(r.status == 0);
    const json blocks = json::parse(r.out);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].at("dim") == 2);
    CHECK(blocks[0].at("nilpotency").at("2") == 2);

    CHECK(run("subspace --seed '[[1,0,0]]'").status == 2);  // wrong length for (1,1)
}

TEST_CASE("cli: configuration precedence and determinism") {
    const std::string cfg = write_file("run.cfg", "# comment\nn = 2\nm = 1\nk = 2/3\n");
    const std::string prm = write_file("params.json", R"({"n": 1, "m": 1, "k": "5/3"})");
    const auto a = run("--config " + cfg + " hc --p 1");
    REQUIRE(a.status == 0);
    CHECK(json::parse(a.out).at("vars") == 3);
    // Params file beats the config file; flags beat both.
    CHECK(json::parse(run("--config " + cfg + " --params " + prm + " hc --p 1").out).at("vars") == 2);
    const auto b = run("--config " + cfg + " --params " + prm + " --k -1/2 hc --p 2");
    CHECK(json::parse(b.out) == io::hc_to_json(hc_integral(2, DeformedParams(1, 1, make_rational(-1, 2)))));

    const std::string cmd = "--seed 99 hc --p 4 --check";
    CHECK(run(cmd).out == run(cmd).out);
    CHECK(run("decompose --seed '[[2,-1],[-2,3]]'").out == run("decompose --seed '[[2,-1],[-2,3]]'").out);

    CHECK(run("--config " + write_file("bad.cfg", "colour = blue\n") + " hc --p 1").status == 2);
}

TEST_CASE("cli: usage errors") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("hc").status == 2);
    CHECK(run("--k 0 hc --p 2").status == 2);
    CHECK(run("--k abc hc --p 2").status == 2);
    CHECK(run("--pmax 1 hc --p 2").status == 2);
    CHECK(run("--output xml hc --p 2").status == 2);
    CHECK(run("apply --p 2 --input '{not json'").status == 2);
    CHECK(run("gl12").status == 2);
}

TEST_CASE("cli: the (1,1) example and verification") {
    auto r = run("gl12 --check-table 1");
    CHECK(r.status == 1);  // the third-order psi relation is off for i != 1
    const json t = json::parse(r.out).at("table");
    CHECK(t.at("checked") == 39);
    for (const auto& f : t.at("failures")) CHECK(f.at("relation") == "L3 psi_i = -i^3 psi_i - 3 phi_i");

    r = run("gl12 --demo --window 0..1");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out).at("demo").at("pass") == true);
    CHECK(run("--output table gl12 --demo --window=-1..0").out.find("MISMATCH") == std::string::npos);

    r = run("verify --criterion 7");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out).at("pass") == true);
    CHECK(run("verify --criterion 11").status != 0);
}
