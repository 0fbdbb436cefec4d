#include "hilbkit/cli.hpp"
#include "hilbkit/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace hilbkit;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("hf of the first Borel ideal")
{
    Run r = run({"hf", "--text", "x^2; x*y; y^3", "--upto", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 0 2 8 19 36 60 92\n");
}

TEST_CASE("input from a file")
{
    const std::string path = "cli_input.ideal";
    std::ofstream(path) << "# two quadrics\nx*z - y^2\nx*t - y*z\n";
    Run r = run({"classify", "--ideal", path, "--json"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out == "{\"regularity\":3,\"stratum\":\"V\",\"components\":[\"H_VA\"]}\n");
}

TEST_CASE("global flags may follow the subcommand")
{
    Run r = run({"reg", "--text", "x^2; x*y; x*z^2; y^4", "--json"});
    CHECK(r.out == "{\"regularity\":4}\n");
    CHECK(run({"--json", "reg", "--text", "x^2; x*y; x*z^2; y^4"}).out == r.out);
}

TEST_CASE("borel-enum lists four ideals")
{
    Run r = run({"borel-enum", "--hp", "4*n"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "B3: (x^2, x*y, y^3)\n"
          "B4: (x^2, x*y, x*z^2, y^4)\n"
          "B5: (x^2, x*y, x*z, y^5, y^4*z)\n"
          "B6: (x, y^5, y^4*z^2)\n");
    auto j = nlohmann::json::parse(run({"borel-enum", "--hp", "4*n", "--json"}).out);
    CHECK(j["ideals"].size() == 4);
    CHECK(j["ideals"][3]["regularity"] == 6);
}

TEST_CASE("lex point equals the last Borel ideal")
{
    CHECK(run({"lex-point", "--hp", "4*n"}).out == "lex: (x, y^5, y^4*z^2)\n");
}

TEST_CASE("limits from the command line")
{
    Run r = run({"limit", "--text", "z; t; y^2 - a*x*y", "--at", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "z\nt\ny^2\n");
    Run w = run({"limit", "--text", "x - y; z - t", "--weights", "1,0,0,0", "--at", "inf"});
    CHECK(w.out == "x\nz - t\n");
}

TEST_CASE("samples are reproducible from the seed")
{
    auto a = run({"sample", "--stratum", "R4", "--count", "2", "--seed", "9"});
    auto b = run({"sample", "--stratum", "R4", "--count", "2", "--seed", "9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run({"sample", "--stratum", "R4", "--count", "2", "--seed", "10"}).out);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"hf"}).code == kExitUsage);
    Run bad = run({"hf", "--text", "x^2 + * y"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("line 1, column") != std::string::npos);
    CHECK(run({"gb", "--order", "elim", "--text", "x"}).code == kExitUsage);
    CHECK(run({"classify", "--text", "x; y"}).code == kExitUsage);
    CHECK(run({"verify-paper", "--only", "nonsense"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify-paper JSON is byte-identical for one seed without timings")
{
    std::vector<std::string> args{"verify-paper", "--only", "borel,hilbert,dims", "--json", "--no-timings", "--seed", "17"};
    Run a = run(args);
    Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK_FALSE(j.contains("timings"));
    for (const auto& item : j["items"])
        CHECK(item["status"] == "pass");
}

TEST_CASE("a wrong expectation is reported with its anchor")
{
    VerifyConfig cfg;
    cfg.only = {"hilbert"};
    cfg.expected.phi[3] = {0, 0, 2, 8, 19, 36, 60, 93};
    VerificationReport rep = verify_paper(cfg);
    REQUIRE(rep.failed() == 1);
    auto bad = std::find_if(rep.items.begin(), rep.items.end(), [](const VerifyItem& i) { return !i.pass(); });
    CHECK(bad->id == "c02.hf.B3");
    CHECK(bad->anchor == "hilbert-function-table");
    CHECK(rep.to_text().find("FAIL c02.hf.B3  [hilbert-function-table]") != std::string::npos);
    auto j = nlohmann::json::parse(rep.to_json(false));
    bool seen = false;
    for (const auto& item : j["items"])
        if (item["status"] == "fail")
            seen = item["anchor"] == "hilbert-function-table";
    CHECK(seen);
}

TEST_CASE("the report file matches standard output")
{
    const std::string path = "cli_report.json";
    Run r = run({"verify-paper", "--only", "dims", "--json", "--no-timings", "--report", path});
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(path.c_str());
    CHECK(ss.str() == r.out);
}

}
