#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("WEILCLI");
    REQUIRE_MESSAGE(p != nullptr, "WEILCLI must point at the CLI binary");
    return p;
}

RunResult run(const std::string& args, bool keep_stderr = false) {
    const std::string cmd =
        cli_path() + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("table json: class structure of Sp(2,3)") {
    const RunResult r = run("table --q 3 --n 1 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["q"] == 3);
    CHECK(doc["group_order"] == 24);
    REQUIRE(doc["classes"].size() == 7);
    long total = 0;
    for (const auto& c : doc["classes"]) total += c["size"].get<long>();
    CHECK(total == 24);
    // Identity row: omega degrees 1, 2, 3.
    const auto& first = doc["classes"][0];
    CHECK(first["label"] == "1");
    CHECK(first["omega_minus"][0] == "1/1");
    CHECK(first["omega_plus"][0] == "2/1");
    CHECK(first["omega"][0] == "3/1");
}

TEST_CASE("table csv and json encode the same data") {
    const RunResult csv = run("table --q 5 --n 1 --format csv");
    const RunResult js = run("table --q 5 --n 1 --format json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    const json doc = json::parse(js.out);

    auto joined = [](const json& coords) {
        std::string s;
        for (const auto& c : coords) {
            if (!s.empty()) s += ';';
            s += c.get<std::string>();
        }
        return s;
    };
    std::string expect = "label,size,order,omega_minus,omega_plus,omega,"
                         "omega_minus_primed,omega_plus_primed\n";
    for (const auto& c : doc["classes"]) {
        expect += '"' + c["label"].get<std::string>() + "\"," +
                  std::to_string(c["size"].get<long>()) + ',' +
                  std::to_string(c["order"].get<long>()) + ',' +
                  joined(c["omega_minus"]) + ',' + joined(c["omega_plus"]) +
                  ',' + joined(c["omega"]) + ',' +
                  joined(c["omega_minus_primed"]) + ',' +
                  joined(c["omega_plus_primed"]) + '\n';
    }
    CHECK(csv.out == expect);
}

TEST_CASE("matrix subcommand emits j, s, t") {
    const RunResult j = run("matrix --q 3 --n 1 --which j");
    REQUIRE(j.exit_code == 0);
    const json jm = json::parse(j.out);
    REQUIRE(jm["order"].size() == 3);
    CHECK(jm["order"][2] == json::array({0, 0}));  // zero comes last
    CHECK(jm["entries"][0][1][0] == "1/1");        // a -> -a swap block
    CHECK(jm["entries"][1][0][0] == "1/1");
    CHECK(jm["entries"][2][2][0] == "1/1");
    CHECK(jm["entries"][0][0][0] == "0/1");

    // t(1) = identity.
    const RunResult t1 = run("matrix --q 3 --n 1 --which t --g '[[1,0],[0,1]]'");
    REQUIRE(t1.exit_code == 0);
    const json tm = json::parse(t1.out);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            CHECK(tm["entries"][i][k][0] == (i == k ? "1/1" : "0/1"));

    // t(-1) = delta^n [j] = -[j] for q=3.
    const RunResult tm1 =
        run("matrix --q 3 --n 1 --which t --g '[[-1,0],[0,-1]]'");
    REQUIRE(tm1.exit_code == 0);
    const json tmm = json::parse(tm1.out);
    CHECK(tmm["entries"][0][1][0] == "-1/1");
    CHECK(tmm["entries"][2][2][0] == "-1/1");
    CHECK(tmm["entries"][0][0][0] == "0/1");

    // s(g) for g of order 4 has all entries of absolute value 1/3... just
    // check it is emitted and square of the right size.
    const RunResult s = run("matrix --q 3 --n 1 --which s --g '[[0,1],[-1,0]]'");
    REQUIRE(s.exit_code == 0);
    CHECK(json::parse(s.out)["entries"].size() == 3);
}

TEST_CASE("eta subcommand emits the flat character record") {
    const RunResult r = run("eta --q 3 --n 1 --g '[[0,1],[-1,0]]'");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["eta"][0] == "1/3");   // g - 1 invertible: omega = delta chi(det(g-1)) = 1
    CHECK(doc["omega"][0] == "1/1");
    CHECK(doc["omega_minus"][0] == "1/1");
    CHECK(doc["omega_plus"][0] == "0/1");
}

TEST_CASE("factor subcommand round-trips") {
    const RunResult r = run("factor --q 3 --n 1 --g '[[-1,0],[0,-1]]'");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.size() == 3);
    for (const auto& spec : doc) {
        CHECK(spec["gamma"].get<int>() != 0);
        CHECK(spec["c"].size() == 2);
    }
    const RunResult id = run("factor --q 3 --n 1 --g '[[1,0],[0,1]]'");
    REQUIRE(id.exit_code == 0);
    CHECK(json::parse(id.out).empty());
}

TEST_CASE("verify subcommand exit codes") {
    CHECK(run("verify --q 3 --n 1 --suite gauss --samples 5").exit_code == 0);
    CHECK(run("verify --q 3 --n 1 --suite factorize --seed 2 --samples 5")
              .exit_code == 0);

    const RunResult unknown = run("verify --q 3 --n 1 --suite nonsense", true);
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.out.find("unknown suite name") != std::string::npos);

    const RunResult even_q = run("verify --q 4 --n 1 --suite gauss", true);
    CHECK(even_q.exit_code == 2);
    CHECK(even_q.out.find("unsupported characteristic") != std::string::npos);

    const RunResult usage = run("table", true);  // missing required --q
    CHECK(usage.exit_code == 2);
}

TEST_CASE("modulus override") {
    // x^2 + 1 is irreducible over GF(3); x^2 + 2 = (x+1)(x+2) is not.
    CHECK(run("verify --q 9 --n 1 --suite gauss --modulus 1,0,1 --samples 3")
              .exit_code == 0);
    const RunResult bad =
        run("verify --q 9 --n 1 --suite gauss --modulus 2,0,1", true);
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("reducible modulus") != std::string::npos);
}
