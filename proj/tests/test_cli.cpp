#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end tests of the command line binary.  CCR_CLI_PATH and
// CCR_DATA_DIR are provided by the build; every invocation goes through
// std::system with captured stdout/stderr.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "ccr/framework.hpp"
#include "ccr/group_algebra.hpp"
#include "ccr/io.hpp"
#include "fixtures.hpp"

using ccr::Json;

struct RunResult {
    int code;
    std::string out, err;
};

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

static std::string tmp_path(const std::string& tag) {
    return "/tmp/ccr_cli_test_" + std::to_string(getpid()) + "_" + tag;
}

static RunResult run(const std::string& args) {
    const std::string out = tmp_path("stdout"), err = tmp_path("stderr");
    std::string cmd = std::string(CCR_CLI_PATH) + " " + args + " > " + out + " 2> " + err;
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::remove(out.c_str());
    std::remove(err.c_str());
    return r;
}

static std::string data(const std::string& name) {
    return std::string(CCR_DATA_DIR) + "/" + name;
}

TEST_CASE("verify: group algebra passes, report carries digests") {
    RunResult r = run("verify --instance group-algebra --input " + data("s3.json") +
                      " --format json");
    REQUIRE(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("ok") == true);
    CHECK(rep.at("instance") == "group-algebra");
    CHECK(rep.at("scalar") == "Q");
    REQUIRE(rep.at("inputs").size() == 1);
    CHECK(rep.at("inputs")[0].at("role") == "group");
    std::string digest = rep.at("inputs")[0].at("digest");
    CHECK(digest.size() == 16);
    CHECK(digest.find_first_not_of("0123456789abcdef") == std::string::npos);
    // H1..H4 required and passing; H4p informational and failing for S3
    for (auto& chk : rep.at("checks")) {
        if (chk.at("name") == "H4p") {
            CHECK(chk.at("required") == false);
            CHECK(chk.at("ok") == false);
        } else {
            CHECK(chk.at("required") == true);
            CHECK(chk.at("ok") == true);
        }
    }
}

TEST_CASE("verify: malformed group file exits 2 with the offending triple") {
    RunResult r = run("verify --instance group-algebra --input " + data("bad_table.json"));
    CHECK(r.code == 2);
    CHECK(r.err.find("associative") != std::string::npos);
    CHECK(r.err.find("(1,1,1)") != std::string::npos);
}

TEST_CASE("verify: fusion instance profile") {
    RunResult r = run("verify --instance fusion --input " + data("ext_ds3.json") +
                      " --format text");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("H1: pass") != std::string::npos);
    CHECK(r.out.find("H4p: pass") != std::string::npos);
    CHECK(r.out.find("H4: FAIL (informational)") != std::string::npos);
    CHECK(r.out.find("verify: ok") != std::string::npos);
}

TEST_CASE("verify: crossed-burnside includes the green-functor row") {
    RunResult r = run("verify --instance crossed-burnside --input " + data("z2.json") +
                      " --format json");
    REQUIRE(r.code == 0);
    Json rep = Json::parse(r.out);
    bool green = false;
    for (auto& chk : rep.at("checks"))
        if (chk.at("name") == "green") {
            green = true;
            CHECK(chk.at("ok") == true);
            CHECK(chk.at("required") == true);
        }
    CHECK(green);
}

TEST_CASE("center: golden CSV for S3") {
    RunResult r = run("center --input " + data("s3.json") + " --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "i,j,k,coeff\n"
          "0,0,0,1\n0,1,1,1\n0,2,2,1\n"
          "1,0,1,1\n1,1,0,2\n1,1,1,1\n1,2,2,2\n"
          "2,0,2,1\n2,1,2,2\n2,2,0,3\n2,2,1,3\n");
}

TEST_CASE("center: --out writes the same bytes to a file") {
    const std::string path = tmp_path("center_csv");
    RunResult direct = run("center --input " + data("s3.json") + " --format csv");
    RunResult filed = run("center --input " + data("s3.json") + " --format csv --out " + path);
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("structure-constants: crossed Burnside table of Z2, frozen") {
    RunResult r = run("structure-constants --instance crossed-burnside --input " +
                      data("z2.json") + " --format text");
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "b0 * b0 = 2 b0\nb0 * b1 = 1 b0\nb0 * b2 = 2 b2\nb0 * b3 = 1 b2\n"
          "b1 * b0 = 1 b0\nb1 * b1 = 1 b1\nb1 * b2 = 1 b2\nb1 * b3 = 1 b3\n"
          "b2 * b0 = 2 b2\nb2 * b1 = 1 b2\nb2 * b2 = 2 b0\nb2 * b3 = 1 b0\n"
          "b3 * b0 = 1 b2\nb3 * b1 = 1 b3\nb3 * b2 = 1 b0\nb3 * b3 = 1 b1\n");
}

TEST_CASE("structure-constants: orbit table over F3 for S3") {
    RunResult r = run("structure-constants --instance group-algebra --input " +
                      data("s3.json") + " --coeff Fp:3 --format text");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("b2 * b2 = 1 b0 + 1 b1") != std::string::npos);
}

TEST_CASE("structure-constants: json form reports the index comparison when H4 holds") {
    RunResult r = run("structure-constants --instance group-algebra --input " +
                      data("s3.json") + " --format json");
    REQUIRE(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("orbit_product").is_array());
    REQUIRE(rep.contains("index_comparison"));
    for (auto& row : rep.at("index_comparison")) CHECK(row.at("full_matches_indexed") == true);
}

TEST_CASE("fuse: oracle agreement and byte-identical reruns") {
    const std::string args =
        "fuse --extension " + data("ext_dz2.json") + " --all --oracle --format json";
    RunResult a = run(args);
    RunResult b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    Json rep = Json::parse(a.out);
    CHECK(rep.at("labels").size() == 4);
    CHECK(rep.at("rows").size() == 16);
    for (auto& row : rep.at("rows")) CHECK(row.at("oracle_match") == true);
}

TEST_CASE("fuse: single pair, frozen product line") {
    RunResult r = run("fuse --extension " + data("ext_ds3.json") + " --pair 2:0 2:0" +
                      " --format text");
    REQUIRE(r.code == 0);
    CHECK(r.out == "[2:S0] * [2:S0] = [0:S1] + [0:S2] + [1:S0] + [1:S1] + [1:S2]\n");
}

TEST_CASE("fuse: twisted extension via --omega") {
    RunResult r = run("fuse --extension " + data("ext_dz2.json") + " --omega " +
                      data("omega_z2.json") + " --all --oracle --format json");
    REQUIRE(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("field") == "Cyc:4");
    REQUIRE(rep.at("inputs").size() == 2);
    for (auto& row : rep.at("rows")) CHECK(row.at("oracle_match") == true);
}

TEST_CASE("simples: twisted Klein algebra has one 2-dim module over Cyc:4") {
    RunResult r = run("simples --input " + data("v4.json") + " --sigma " +
                      data("sigma_v4.json") + " --format text");
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "field Cyc:4\n"
          "simple 0: dim 2, character [2, 0, 0, 0]\n");
}

TEST_CASE("raw component system: round trip through files") {
    auto V = fx::v4();
    ccr::ComponentSystem S = ccr::group_algebra_system(V, ccr::FieldSpec::Q());
    const std::string good = tmp_path("raw_good.json");
    std::ofstream(good) << ccr::system_json(S).dump(1) << "\n";
    RunResult ok = run("verify --instance raw-component-system --input " + good +
                       " --format text");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("H4-or-H4p: pass") != std::string::npos);
    std::remove(good.c_str());

    // corrupting one multiplication map must flip the verdict, not crash
    ccr::ComponentSystem bad = ccr::group_algebra_system(V, ccr::FieldSpec::Q());
    bad.mul[1][1] = bad.mul[1][1].scaled(ccr::Scalar::from_int(bad.field, 2));
    const std::string badp = tmp_path("raw_bad.json");
    std::ofstream(badp) << ccr::system_json(bad).dump(1) << "\n";
    RunResult fail = run("verify --instance raw-component-system --input " + badp +
                         " --format text");
    CHECK(fail.code == 1);
    CHECK(fail.out.find("H4-or-H4p: FAIL") != std::string::npos);
    CHECK(fail.out.find("verify: FAILED") != std::string::npos);
    std::remove(badp.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);                                   // no subcommand
    CHECK(run("verify --instance group-algebra").code == 2);    // missing --input
    CHECK(run("simples --input " + data("v4.json")).code == 2); // missing --sigma
    CHECK(run("verify --instance bogus --input " + data("z2.json")).code == 2);
    CHECK(run("fuse --extension " + data("ext_dz2.json") + " --pair 9:0 0:0").code == 2);
    CHECK(run("center --input " + data("does_not_exist.json")).code == 2);
    CHECK(run("center --input " + data("s3.json") + " --coeff Fp:6").code == 2);
}
