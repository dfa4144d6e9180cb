#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string path = "/tmp/rootfd_cli_out." + std::to_string(getpid());
    const std::string cmd =
        std::string(ROOTFD_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
    RunResult r;
    int rc = std::system(cmd.c_str());
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(path.c_str());
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("info summarizes the group") {
    auto r = run("info E8");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "h: 30"));
    CHECK(contains(r.out, "roots: 240"));
    CHECK(contains(r.out, "order: 696729600"));
    CHECK(contains(r.out, "orbit all: size 240, stabilizer E7"));

    auto i14 = run("info \"I2(14)\"");
    CHECK(i14.code == 0);
    CHECK(contains(i14.out, "h: 14"));
    CHECK(contains(i14.out, "orbit long: size 14"));
    CHECK(contains(i14.out, "orbit short: size 14"));

    auto j = nlohmann::json::parse(run("info B3 --format json").out);
    CHECK(j["type"] == "B3");
}

TEST_CASE("fakedeg emits the polynomial, quotient and gcd") {
    auto j = nlohmann::json::parse(run("fakedeg A2 --format json").out);
    CHECK(j["f"]["coeffs"] == nlohmann::json({1, 2, 2, 1}));
    CHECK(j["quotient"]["coeffs"] == nlohmann::json({1, 1}));
    CHECK(j["gcd"]["coeffs"] == nlohmann::json({1}));

    auto h3 = run("fakedeg H3");
    CHECK(h3.code == 0);
    CHECK(contains(h3.out, "f/[h]_q: 1 + q^2 + q^4"));

    auto b3 = run("fakedeg B3 --orbit short");
    CHECK(b3.code == 0);
    CHECK(contains(b3.out, "f: 1 + q + q^2 + q^3 + q^4 + q^5"));
    CHECK(contains(b3.out, "f/[h]_q: 1"));
    CHECK(contains(b3.out, "gcd: 1 + q^2 + q^4"));

    auto csv = run("fakedeg F4 --orbit long --format csv");
    CHECK(contains(csv.out, "type,orbit,h,f,quotient,gcd"));
    CHECK(contains(csv.out, "F4,long,12,"));
}

TEST_CASE("table reproduction") {
    auto csv = run("table --format csv --max-rank 4 --max-m 8");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("type,h,orbit,stabilizer,quotient,gcd\n", 0) == 0);
    CHECK(contains(csv.out, "F4,12,long,B3,1 + q^4,1 + q^6"));
    CHECK(contains(csv.out, "H4,30,all,H3,1 + q^6 + q^10 + q^16,1"));
    CHECK(contains(csv.out, "I2(8),8,long,A1,1,1 + q^2"));
    CHECK(!contains(csv.out, "E6"));  // rank bound

    auto deflt = run("table --format csv");
    CHECK(contains(deflt.out, "E6,12,all,A5,"));
    CHECK(contains(deflt.out, "E7,18,all,D6,"));
    CHECK(contains(deflt.out, "E8,30,all,E7,"));
    CHECK(contains(deflt.out, "B12,24,"));
    CHECK(contains(deflt.out, "D12,22,"));
    CHECK(contains(deflt.out, "I2(30),30,"));
    CHECK(!contains(deflt.out, "MISMATCH"));

    auto tex = run("table --format latex --max-rank 3 --max-m 5");
    CHECK(contains(tex.out, "\\begin{tabular}"));
    CHECK(contains(tex.out, "$H3$ & $10$ & all & $A1xA1$ & $1 + q^{2} + q^{4}$ & "
                            "$[3]_{q^2}$ & $1$ \\\\"));

    auto js = nlohmann::json::parse(run("table --format json --max-rank 2 --max-m 5").out);
    CHECK(js.is_array());
    for (const auto& row : js) CHECK(row["matches_expected"] == true);
}

TEST_CASE("verify: reports and exit codes") {
    auto e6 = run("verify E6");
    CHECK(e6.code == 0);
    auto j = nlohmann::json::parse(e6.out);
    CHECK(j["type"] == "E6");
    for (const auto& c : j["claims"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("ref"));
        CHECK((c["status"] == "pass" || c["status"] == "na"));
    }

    auto txt = run("verify H3 --format text");
    CHECK(txt.code == 0);
    CHECK(contains(txt.out, "== H3 =="));
    CHECK(contains(txt.out, "[pass] thm1i.all"));
    CHECK(contains(txt.out, "[na]   thm1ii"));

    auto r1 = run("verify A4");
    auto r2 = run("verify A4");
    CHECK(r1.out == r2.out);  // byte-identical reruns
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("info Q9").code == 2);
    CHECK(run("fakedeg A3 --orbit short").code == 2);
    CHECK(run("fakedeg A3 --orbit sideways").code == 2);
    CHECK(run("verify").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("info \"I2(2)\"").code == 2);
    CHECK(run("--help").code == 0);
}
