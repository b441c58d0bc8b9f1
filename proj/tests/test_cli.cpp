#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int status;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* exe = std::getenv("RTAB_CLI");
    REQUIRE(exe != nullptr);
    std::string cmd = std::string(exe) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    int status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return {status, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("check subcommand") {
    auto ok = run_cli("check 12113123");
    CHECK(ok.status == 0);
    for (const char* name : {"definition", "word", "crop", "lslide", "evacuation", "gap", "bruhat"})
        CHECK(contains(ok.output, std::string(name) + ": true"));
    CHECK(contains(ok.output, "verdict: RICHARDSON"));

    auto no = run_cli("check 1122");
    CHECK(no.status == 0);
    CHECK(contains(no.output, "definition: false"));
    CHECK(contains(no.output, "verdict: NOT_RICHARDSON"));

    auto bad = run_cli("check 122");
    CHECK(bad.status == 1);
    CHECK(contains(bad.output, "NotLatticeWord"));
}

TEST_CASE("counting subcommands") {
    auto count = run_cli("count 4,2,2");
    CHECK(count.status == 0);
    CHECK(count.output == "15\n");

    auto qcount = run_cli("count --q 3,2,1");
    CHECK(qcount.status == 0);
    CHECK(qcount.output == "q^7 + 2*q^8 + 2*q^9 + 2*q^10 + q^11\n");

    auto motzkin = run_cli("motzkin 4");
    CHECK(motzkin.status == 0);
    CHECK(motzkin.output == "9\n");

    auto prop = run_cli("proportion 6");
    CHECK(prop.status == 0);
    CHECK(prop.output == "51/76\n");

    auto refine = run_cli("refine 6");
    CHECK(refine.status == 0);
    CHECK(contains(refine.output, "motzkin: 51"));
    CHECK(contains(refine.output, "total: 51"));
    CHECK(contains(refine.output, "ok: true"));

    auto badshape = run_cli("count 2,4");
    CHECK(badshape.status == 1);
    CHECK(contains(badshape.output, "InvalidArgument"));
}

TEST_CASE("word transforms") {
    auto evac = run_cli("evacuate 12113123");
    CHECK(evac.status == 0);
    CHECK(evac.output == "result: 12312113\n");

    auto traced = run_cli("evacuate --paths 12113123");
    CHECK(traced.status == 0);
    CHECK(contains(traced.output, "result: 12312113"));
    CHECK(contains(traced.output, "path 1:"));
    CHECK(contains(traced.output, "path 8:"));
    CHECK(!contains(traced.output, "path 9:"));
    CHECK(contains(traced.output, " L="));

    auto dec = run_cli("decompose 12113123");
    CHECK(dec.status == 0);
    CHECK(dec.output == "12113\n123\ncount: 2\n");

    auto psi = run_cli("psi 1213124");
    CHECK(psi.status == 0);
    CHECK(psi.output == "11212\n");

    auto psi_inv = run_cli("psi-inv 11212 4");
    CHECK(psi_inv.status == 0);
    CHECK(psi_inv.output == "1213124\n");

    auto not_prime = run_cli("psi 11");
    CHECK(not_prime.status == 1);
    CHECK(contains(not_prime.output, "NotPrime"));
}

TEST_CASE("cell subcommands") {
    auto env = run_cli("envelope 12113123");
    CHECK(env.status == 0);
    CHECK(env.output == "v: 15726348\nw: 75182364\ngap: 6\ntarget: 6\n");

    auto cells = run_cli("cells 2,2");
    CHECK(cells.status == 0);
    CHECK(contains(cells.output, "count: 13"));
    CHECK(contains(cells.output, "1324 3142 2"));

    auto top = run_cli("cells --top 2,2");
    CHECK(top.status == 0);
    CHECK(top.output == "1324 3142 2\ncount: 1\n");
}

TEST_CASE("smooth subcommand") {
    auto rich = run_cli("smooth 15726348 75182364");
    CHECK(rich.status == 0);
    CHECK(contains(rich.output, "pairs: (1,2) (1,3) (2,3) (4,5) (5,8) (7,8)"));
    CHECK(contains(rich.output, "dual-pairs: (1,2) (2,5) (4,5) (6,7) (6,8) (7,8)"));
    CHECK(contains(rich.output, "gap: 6"));
    CHECK(contains(rich.output, "smooth: true"));

    auto sing = run_cli("smooth 1234 3412");
    CHECK(sing.status == 0);
    CHECK(contains(sing.output, "smooth: false"));
}

TEST_CASE("guemes and kcomp subcommands") {
    auto hook = run_cli("guemes 1231114");
    CHECK(hook.status == 0);
    CHECK(hook.output == "4765123\n5763124\n6735124\n6752134\ncount: 4\n");

    auto nothook = run_cli("guemes 1212");
    CHECK(nothook.status == 1);
    CHECK(contains(nothook.output, "NotHookShape"));

    auto comp = run_cli("kcomp 7 3,4,6,7");
    CHECK(comp.status == 0);
    CHECK(comp.output == "word: 1211312\nrows: (1,3,4,6),(2,7),(5)\n");

    auto dual = run_cli("kcomp --dual 7 3,4,6,7");
    CHECK(dual.status == 0);
    CHECK(contains(dual.output, "word: 1212113"));

    auto full = run_cli("kcomp 4 1,2,3,4");
    CHECK(full.status == 0);
    CHECK(contains(full.output, "word: 1234"));
}

TEST_CASE("json output") {
    auto check = run_cli("--json check 1122");
    CHECK(check.status == 0);
    CHECK(check.output.rfind("{\"schema\":\"1\"", 0) == 0);
    auto j = nlohmann::json::parse(check.output);
    CHECK(j["schema"] == "1");
    CHECK(j["verdict"] == "NOT_RICHARDSON");
    CHECK(j["checks"]["definition"] == false);
    CHECK(j["word"] == nlohmann::json::parse("[1,1,2,2]"));

    auto count = run_cli("--json count 4,2,2");
    CHECK(count.status == 0);
    auto jc = nlohmann::json::parse(count.output);
    CHECK(jc["count"] == "15");
    CHECK(jc["shape"] == nlohmann::json::parse("[4,2,2]"));

    auto smooth = run_cli("--json smooth 15726348 75182364");
    CHECK(smooth.status == 0);
    auto js = nlohmann::json::parse(smooth.output);
    CHECK(js["smooth"] == true);
    CHECK(js["pairs"].size() == 6);
    CHECK(js["dual_pairs"].size() == 6);
    CHECK(js["pairs"][0] == nlohmann::json::parse("[1,2]"));
}

TEST_CASE("selftest subcommand") {
    auto self = run_cli("selftest --max-n 4");
    CHECK(self.status == 0);
    CHECK(contains(self.output, "failed: 0"));
    CHECK(contains(self.output, "ok"));
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("count").status == 2);
    CHECK(run_cli("motzkin").status == 2);
}
