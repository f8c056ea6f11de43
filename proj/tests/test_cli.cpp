#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string bin() {
    const char* b = std::getenv("RIBBONLAB_BIN");
    REQUIRE(b != nullptr);
    return b;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd;
    if (!stdin_data.empty()) cmd += "printf '" + stdin_data + "' | ";
    cmd += bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 256> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("compute G") {
    auto r = run("compute G --shape 2,2 --n 2 --basis schur");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(2):q^2"));
    CHECK(contains(r.out, "(1,1):1"));

    auto j = run("compute G --shape 2,2 --n 2 --basis schur --format json");
    CHECK(j.code == 0);
    CHECK(contains(j.out, "\"basis\": \"schur\""));
    CHECK(contains(j.out, "\"part\": \"2\""));
}

TEST_CASE("compute X") {
    auto r = run("compute X --outer 5,5,2 --inner 2 --n 2 --type 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "q^5 - 2*q^3 + q"));
}

TEST_CASE("compute core and quotient") {
    auto q = run("compute quotient --shape 7,6,4,3,1 --n 3");
    CHECK(q.code == 0);
    CHECK(contains(q.out, "[(3),(2,2),()]"));

    auto c = run("compute core --shape 8,6,4,3,1 --n 3");
    CHECK(c.code == 0);
    CHECK(contains(c.out, "(2,1,1)"));
}

TEST_CASE("compute tableaux and qlr") {
    auto t = run("compute tableaux --shape 2,2 --n 2 --format json");
    CHECK(t.code == 0);
    CHECK(contains(t.out, "\"spin\""));

    auto r = run("compute qlr --shape 2,2 --n 2");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(2):q^2"));
}

TEST_CASE("compute fock-op") {
    auto r = run("compute fock-op --op f --i 1 --start 1 --n 2 --format json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"part\": \"1,1\""));
    CHECK(contains(r.out, "\"1\": \"1\""));

    auto v = run("compute fock-op --op V --k 1 --n 2");
    CHECK(v.code == 0);
    CHECK(contains(v.out, "|2>"));
    CHECK(contains(v.out, "|1,1>"));
}

TEST_CASE("compute domino-rsk") {
    auto r = run("compute domino-rsk --format json", "1 1 3\\n0 2 4\\n0 3 2\\n1 4 1\\n");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"3,3,2\""));
    CHECK(contains(r.out, "\"spin\": 3"));
    CHECK(contains(r.out, "\"spin\": 1"));
    CHECK(contains(r.out, "\"tc\": 4"));
}

TEST_CASE("verify examples") {
    auto mn = run("verify mn --n 2 --nu \"\" --k 2");
    CHECK(mn.code == 0);
    CHECK(contains(mn.out, "1/1 cells pass"));

    auto pieri = run("verify pieri --n 3 --nu 3,1 --k 2 --format json");
    CHECK(pieri.code == 0);
    CHECK(contains(pieri.out, "\"all_pass\": true"));

    auto heis = run("verify heisenberg --n 2 --kmax 2 --sizemax 6 --format csv");
    CHECK(heis.code == 0);
    CHECK(contains(heis.out, "identity,params,pass,detail"));
    CHECK(contains(heis.out, "heisenberg,n=2 k=1 l=1,1,"));
}

TEST_CASE("exit codes on malformed input") {
    CHECK(run("compute core --shape x,y --n 2").code == 2);
    CHECK(run("compute nosuch --shape 1 --n 2").code == 2);
    CHECK(run("verify nosuch").code == 2);
    CHECK(run("verify pieri --format bogus").code == 2);
    CHECK(run("compute domino-rsk", "9 9\\n").code == 2);
}
