// Process-level checks of the CLI: exit-code contract and byte-identical
// machine-readable output. The binary path comes from the build system.

#include "spinc8/catalog.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SPINC8_CLI_PATH
#define SPINC8_CLI_PATH "spinc8"
#endif

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(SPINC8_CLI_PATH) + " " + args + " > cli_stdout.txt 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("exit codes: pass, fail, data error, usage") {
    // passing criterion
    CHECK(run("check --manifold CP4 --criterion complex --l 5*x --v 10*x3") == 0);
    // mathematical failure
    CHECK(run("check --manifold HP2 --criterion complex --l 0 --v 0") == 1);
    // precondition violation: CP4 is not spin, su3 needs a spin model
    CHECK(run("check --manifold CP4 --criterion su3 --u 0") == 2);
    // argument errors
    CHECK(run("check --manifold HP2") == 64);
    CHECK(run("frobnicate") == 64);
    CHECK(run("check --manifold HP2 --criterion halpha --l 0 --u k*a") == 64);
}

TEST_CASE("sweep delegation with residue summary") {
    CHECK(run("search --manifold HP2 --criterion halpha --l 0 --u k*a --u-range -30..30") == 0);
    std::string text = slurp("cli_stdout.txt");
    CHECK(text.find("1, 9 (mod 24)") != std::string::npos);
    // an empty sweep exits 1
    CHECK(run("search --manifold G2SO4 --criterion halpha --l 0 --u k*a --u-range -12..12") == 1);
}

TEST_CASE("validate subcommand") {
    CHECK(run("validate --manifold Gr24") == 0);

    // corrupt file: break the degree-4 square of G2SO4
    spinc8::ManifoldModel bad = spinc8::catalog::builtin("G2SO4").model;
    bad.cup_table.entries[{4, 4}][0][0] = bad.zero(8);
    spinc8::save_model(bad, "cli_broken.json");
    CHECK(run("validate --file cli_broken.json") == 2);
    std::remove("cli_broken.json");
}

TEST_CASE("machine-readable output is byte-identical across runs") {
    REQUIRE(run("check --manifold HP2 --criterion halpha --l 0 --u 9*a --out cli_a.json") == 0);
    REQUIRE(run("check --manifold HP2 --criterion halpha --l 0 --u 9*a --out cli_b.json") == 0);
    std::string a = slurp("cli_a.json"), b = slurp("cli_b.json");
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove("cli_a.json");
    std::remove("cli_b.json");

    REQUIRE(run("search --manifold V6 --criterion halpha --l 0 --u k*a2 --u-range -16..16 "
                "--out cli_s1.json") == 0);
    REQUIRE(run("search --manifold V6 --criterion halpha --l 0 --u k*a2 --u-range -16..16 "
                "--out cli_s2.json") == 0);
    CHECK(slurp("cli_s1.json") == slurp("cli_s2.json"));
    std::remove("cli_s1.json");
    std::remove("cli_s2.json");
}

TEST_CASE("catalog and index subcommands") {
    CHECK(run("catalog list") == 0);
    CHECK(slurp("cli_stdout.txt").find("HP2") != std::string::npos);
    CHECK(run("catalog show V6") == 0);
    CHECK(slurp("cli_stdout.txt").find("unverified") == std::string::npos);
    CHECK(run("catalog show G2SO4") == 0);
    CHECK(slurp("cli_stdout.txt").find("unverified-source") != std::string::npos);

    CHECK(run("index --manifold CP4 --rank 1 --chern 1*x,0,0,0") == 0);
    CHECK(slurp("cli_stdout.txt").find("index = 5") != std::string::npos);
    // the default rank 4 pads with three trivial lines, each contributing 1
    CHECK(run("index --manifold CP4 --chern 1*x,0,0,0") == 0);
    CHECK(slurp("cli_stdout.txt").find("index = 8") != std::string::npos);
}

TEST_CASE("bundle files and the isomorphism criterion") {
    // S8: tangent vs a trivial bundle loaded from a file
    std::ofstream out("cli_triv.json");
    out << R"({"dim": 8, "w2": [], "w4": [], "w6": [], "p1": [], "p2": ["0"], "e": ["0"]})";
    out.close();
    CHECK(run("check --manifold S8 --criterion iso --stable --l 0 "
              "--bundle tangent --bundle-file2 cli_triv.json") == 0);
    CHECK(run("check --manifold S8 --criterion iso --l 0 "
              "--bundle tangent --bundle-file2 cli_triv.json") == 1);
    std::remove("cli_triv.json");
}

TEST_CASE("iso criterion between named bundles") {
    CHECK(run("check --manifold S8 --criterion iso --stable --l 0 --bundle tangent "
              "--bundle2 trivial") == 0);
    CHECK(run("check --manifold S8 --criterion iso --l 0 --bundle tangent "
              "--bundle2 trivial") == 1);
}

TEST_CASE("chern criterion with and without the top witness") {
    CHECK(run("check --manifold CP4 --criterion chern --l 5*x --u 10*x2 --v 10*x3") == 0);
    CHECK(run("check --manifold CP4 --criterion chern --l 5*x --u 10*x2 --v 10*x3 "
              "--w 5*x4") == 0);
    CHECK(run("check --manifold CP4 --criterion chern --l 5*x --u 10*x2 --v 10*x3 "
              "--w 4*x4") == 1);
    // sweep over w and certify the residue class
    CHECK(run("search --manifold CP4 --criterion chern --l 5*x --u 10*x2 --v 10*x3 "
              "--w k*x4 --w-range -12..12") == 0);
    CHECK(slurp("cli_stdout.txt").find("(mod 6)") != std::string::npos);
}

TEST_CASE("threaded search equals the serial one") {
    REQUIRE(run("search --manifold Gr24 --criterion halpha --l 0 --u k*s2+k*s11 "
                "--u-range -36..36 --out cli_t1.json") == 0);
    REQUIRE(run("search --manifold Gr24 --criterion halpha --l 0 --u k*s2+k*s11 "
                "--u-range -36..36 --threads 4 --out cli_t4.json") == 0);
    CHECK(slurp("cli_t1.json") == slurp("cli_t4.json"));
    std::remove("cli_t1.json");
    std::remove("cli_t4.json");
}

TEST_CASE("model round trip through files") {
    spinc8::save_model(spinc8::catalog::builtin("Gr24").model, "cli_gr24.json");
    CHECK(run("validate --file cli_gr24.json") == 0);
    CHECK(run("check --file cli_gr24.json --criterion halpha --l 0 --u s2+s11") == 0);
    std::remove("cli_gr24.json");
}
