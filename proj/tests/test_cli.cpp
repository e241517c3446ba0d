#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef CESDUAL_CLI_PATH
#error "CESDUAL_CLI_PATH must point at the cli binary"
#endif

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CESDUAL_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("gallery lists the registered families") {
    auto r = run("gallery");
    CHECK(r.code == 0);
    CHECK(r.out.find("example-1.5") != std::string::npos);
    CHECK(r.out.find("remark-4.4") != std::string::npos);
    CHECK(r.out.find("loglog-weights") != std::string::npos);
}

TEST_CASE("classify reports nuclearity and embeds the budget caveat") {
    auto r = run("classify example-1.5 --json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"nuclear\": \"HoldsNumerically\"") != std::string::npos);
    CHECK(r.out.find("numerical evidence at finite budget") != std::string::npos);
    CHECK(r.out.find("\"i_max\": 16384") != std::string::npos);
}

TEST_CASE("classify output is deterministic") {
    auto a = run("classify remark-3.9 --json");
    auto b = run("classify remark-3.9 --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify identities passes exactly") {
    auto r = run("verify identities --N 20");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("spectrum prediction and membership queries") {
    auto r = run("spectrum remark-4.4 --json");
    CHECK(r.code == 0);
    CHECK(r.out.find("DiskOpenPlusEndpoints") != std::string::npos);
    CHECK(r.out.find("\"sigma_pt\": \"{1}\"") != std::string::npos);

    auto q = run("spectrum remark-3.9 --lambda 1/3 --json");
    CHECK(q.code == 0);
    CHECK(q.out.find("\"membership\": \"inside\"") != std::string::npos);
    CHECK(q.out.find("\"exact\": true") != std::string::npos);

    auto grid = run("spectrum remark-4.4 --grid -0.2:1.2:0.35 --csv");
    CHECK(grid.code == 0);
    CHECK(grid.out.rfind("re,im,membership,evidence\n", 0) == 0);
    CHECK(grid.out.find("inside") != std::string::npos);
    CHECK(grid.out.find("outside") != std::string::npos);
}

TEST_CASE("resolvent emits CSV rows") {
    auto r = run("resolvent --mu 2 --N 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("-1") != std::string::npos);
    CHECK(r.out.find(",") != std::string::npos);
}

TEST_CASE("dynamics emits the (k, distance, norm_ratio) schedule") {
    auto r = run("dynamics remark-3.9 --n 1 --N 256 --kmax 64 --x e1 --csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("k,distance,norm_ratio\n", 0) == 0);
    CHECK(r.out.find("\n16,") != std::string::npos);
    CHECK(r.out.find("\n64,") != std::string::npos);
}

TEST_CASE("eigvec prints exact rational entries") {
    auto r = run("eigvec --side dual --m 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("1 -2 1") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("classify no-such-space").code == 2);
    CHECK(run("spectrum").code == 2);
    CHECK(run("classify example-1.5 --imax 1000").code == 2);
    CHECK(run("nonsense-subcommand").code == 2);
    CHECK(run("resolvent --mu 0,5x --N 4").code == 2);
}
