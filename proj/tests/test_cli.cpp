#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bichroma/cli.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = bichroma::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
    std::ofstream f(name, std::ios::binary);
    f << content;
    return name;
}

std::string last_line(const std::string& text) {
    auto end = text.find_last_not_of('\n');
    if (end == std::string::npos)
        return "";
    auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

} // namespace

TEST_CASE("chi prints the polynomial and evaluates it") {
    auto p2 = write_file("cli_p2.mg", "p 2 1\ne 1 2\n");
    CliResult r = run({"chi", p2});
    CHECK(r.code == 0);
    CHECK(r.out == "x^2 + 2*x*y + y^2 - x\n");

    r = run({"chi", p2, "--eval", "2", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "7\n");

    auto c1 = write_file("cli_c1.mg", "p 1 1\ne 1 1\n");
    r = run({"chi", c1});
    CHECK(r.code == 0);
    CHECK(r.out == "y\n");
}

TEST_CASE("count with both oracles") {
    auto p2 = write_file("cli_p2.mg", "p 2 1\ne 1 2\n");
    CliResult r = run({"count", p2, "-k", "2", "-l", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "7\n");

    r = run({"count", p2, "-k", "2", "-l", "1", "--oracle", "subset"});
    CHECK(r.code == 0);
    CHECK(r.out == "7\n");
}

TEST_CASE("seq tabulates path and cycle families") {
    CliResult r = run({"seq", "path", "-k", "2", "-l", "1", "-n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "3 7 17 41 99\n");

    r = run({"seq", "cycle", "-k", "1", "-l", "1", "-n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 3 4 7 11 18\n");
}

TEST_CASE("recurrence mining") {
    CliResult r = run({"recurrence", "cycle", "-k", "2", "-l", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "order=3 coeffs=1,3,1 detB=-32\n");

    r = run({"recurrence", "path", "-k", "2", "-l", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "order=2 coeffs=2,1\n");

    r = run({"recurrence", "cycle", "-k", "0", "-l", "2", "--terms", "16"});
    CHECK(r.code == 0);
    CHECK(r.out == "order=1 coeffs=2 detB=0\n");
}

TEST_CASE("verify identities") {
    CliResult r = run({"verify", "identities", "-l", "1", "--max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("T1.1 l=1 3<=n<=12 PASS") != std::string::npos);
    CHECK(r.out.find("PELL") != std::string::npos);
    CHECK(last_line(r.out).find("ok=true") == 0);
    CHECK(last_line(r.out).find("failed=0") != std::string::npos);

    CliResult again = run({"verify", "identities", "-l", "1", "--max", "12"});
    CHECK(again.out == r.out); // byte-identical reruns

    CliResult dflt = run({"verify", "identities", "-l", "2"});
    CHECK(dflt.code == 0);
    CHECK(dflt.out == run({"verify", "identities", "-l", "2", "--max", "20"}).out);
}

TEST_CASE("verify oracle") {
    CliResult r = run({"verify", "oracle", "--max-vertices", "3", "--samples", "15"});
    CHECK(r.code == 0);
    CHECK(last_line(r.out).find("ok=true") == 0);

    CliResult again = run({"verify", "oracle", "--max-vertices", "3", "--samples", "15"});
    CHECK(again.out == r.out); // seeded corpus, byte-identical reruns
}

TEST_CASE("verify sneaky") {
    CliResult r = run({"verify", "sneaky", "--rst", "2", "2", "2", "-l", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("brute=32") != std::string::npos);
    CHECK(r.out.find(" PASS") != std::string::npos);
    CHECK(last_line(r.out) == "ok=true checked=4 failed=0");
}

TEST_CASE("error handling exits with code 2") {
    SUBCASE("unreadable file") {
        CliResult r = run({"chi", "no_such_file.mg"});
        CHECK(r.code == 2);
        CHECK(r.err.find("cannot read") != std::string::npos);
    }
    SUBCASE("malformed graph file") {
        auto bad = write_file("cli_bad.mg", "p 2 1\ne 1 5\n");
        CliResult r = run({"chi", bad});
        CHECK(r.code == 2);
        CHECK(r.err.find("line 2") != std::string::npos);
    }
    SUBCASE("request beyond the enumeration budget") {
        std::string body = "p 9 8\n";
        for (int i = 1; i < 9; ++i)
            body += "e " + std::to_string(i) + " " + std::to_string(i + 1) + "\n";
        auto p9 = write_file("cli_p9.mg", body);
        CliResult r = run({"count", p9, "-k", "1", "-l", "1"});
        CHECK(r.code == 2);
        CHECK(r.err.find("limited to") != std::string::npos);

        CliResult raised = run({"count", p9, "-k", "1", "-l", "1", "--budget-n", "9"});
        CHECK(raised.code == 0);
        CHECK(raised.out == "89\n");
    }
    SUBCASE("subset oracle budget") {
        std::string body = "p 13 12\n";
        for (int i = 1; i < 13; ++i)
            body += "e " + std::to_string(i) + " " + std::to_string(i + 1) + "\n";
        auto p13 = write_file("cli_p13.mg", body);
        CliResult r = run({"count", p13, "-k", "1", "-l", "1", "--oracle", "subset"});
        CHECK(r.code == 2);
        CliResult raised = run({"count", p13, "-k", "1", "-l", "1", "--oracle", "subset", "--budget-n", "13"});
        CHECK(raised.code == 0);
        CHECK(raised.out == "610\n"); // F_15
    }
    SUBCASE("flag validation") {
        auto p2 = write_file("cli_p2.mg", "p 2 1\ne 1 2\n");
        CHECK(run({"chi", p2, "--eval", "-1", "2"}).code == 2);
        CHECK(run({"seq", "cycle", "-k", "0", "-l", "0", "-n", "4"}).code == 2);
        CHECK(run({"count", p2, "-k", "1", "-l", "1", "--oracle", "exact"}).code == 2);
    }
    SUBCASE("usage errors") {
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"chi"}).code == 2);
        CHECK(run({"seq", "path", "-k", "1"}).code == 2);
        CHECK(run({"seq", "ladder", "-k", "1", "-l", "1", "-n", "3"}).code == 2);
        CHECK(run({"verify", "identities", "-l", "0"}).code == 2);
    }
    SUBCASE("identity grid below its domain minimum") {
        CliResult r = run({"verify", "identities", "-l", "1", "--max", "3"});
        CHECK(r.code == 2);
        CHECK(r.err.find("max index too small") != std::string::npos);
    }
}

TEST_CASE("help is exit 0") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bichroma") != std::string::npos);
}
