#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

// end-to-end checks of the command line tool: exit codes and determinism

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SUPERQ_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WEXITSTATUS(status);
    return r;
}

} // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run("rep check --d 5 --mu 0").code == 2);
    CHECK(run("rep check --d 4 --mu 1").code == 2);
    CHECK(run("braid verify --d 5").code == 2);   // missing --mu
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("two-strand basis verb matches the stated words") {
    auto r = run("centralizer basis --d 5 --mu 1 --n 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"dim\": 3") != std::string::npos);
}

TEST_CASE("identical config produces byte-identical output") {
    auto a = run("dual verify --d 3 --seed 7");
    auto b = run("dual verify --d 3 --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto c = run("rep check --d 5 --mu 2");
    auto d2 = run("rep check --d 5 --mu 2");
    CHECK(c.code == 0);
    CHECK(c.out == d2.out);
}

TEST_CASE("commutant verb cross-checks the basis size") {
    auto r = run("centralizer commutant --d 5 --mu 1 --n 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
}
