#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfrob/cli.hpp"

using namespace qfrob;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qfrob");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("usage errors exit 2") {
        CHECK(run({}).code == kExitUsage);
        CHECK(run({"no-such-suite"}).code == kExitUsage);
        CHECK(run({"obstruction", "--bogus"}).code == kExitUsage);
        CHECK(run({"obstruction", "--cells", "abc"}).code == kExitUsage);
        const Run small = run({"obstruction", "--cells", "4"});
        CHECK(small.code == kExitUsage);
        CHECK(small.err.find("error:") != std::string::npos);
        CHECK(run({"verify-derham", "--epsilon", "-0.1"}).code == kExitUsage);
        CHECK(run({"qloc-dims", "--ell", "-1"}).code == kExitUsage);
    }

    TEST_CASE("help exits 0") {
        const Run r = run({"--help"});
        CHECK(r.code == kExitPass);
        CHECK(r.out.find("qloc-dims") != std::string::npos);
    }

    TEST_CASE("obstruction report") {
        const Run r = run({"obstruction", "--cells", "6", "--json"});
        REQUIRE(r.code == kExitPass);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["suite"] == "obstruction");
        CHECK(j["pass"] == true);
        CHECK(j["parameters"]["cells"] == 6);
        CHECK(j["duration_s"].is_number());
        bool seen = false;
        for (const auto& c : j["checks"])
            if (c["name"] == "h0") {
                CHECK(c["actual"] == "-1/12");
                seen = true;
            }
        CHECK(seen);
    }

    TEST_CASE("qloc dims report in text form") {
        const Run r = run({"qloc-dims", "--cells", "8", "--m", "1", "--n", "2", "--ell", "1"});
        CHECK(r.code == kExitPass);
        CHECK(r.out.find("{1:1, 2:1}") != std::string::npos);
        CHECK(r.out.find("PASS") != std::string::npos);
    }

    TEST_CASE("a failing check exits 1 and lists the failure") {
        // with ℓ = N every operation is quasilocal and the dimensions change
        const Run r = run({"qloc-dims", "--cells", "4", "--ell", "4"});
        CHECK(r.code == kExitFailure);
        CHECK(r.err.find("FAIL dims") != std::string::npos);
    }

    TEST_CASE("--out writes the report") {
        const auto path = std::filesystem::temp_directory_path() / "qfrob_cli_test_report.json";
        const Run r = run({"verify-homology-model", "--json", "--out", path.string()});
        REQUIRE(r.code == kExitPass);
        std::ifstream f(path);
        std::stringstream ss;
        ss << f.rdbuf();
        CHECK(ss.str() == r.out);
        CHECK(nlohmann::json::parse(ss.str())["pass"] == true);
        std::filesystem::remove(path);
        CHECK(run({"verify-frob1", "--out", "/nonexistent-dir/x.json"}).code == kExitUsage);
    }

    TEST_CASE("the aggregate suite nests every report") {
        const Run r = run({"all", "--cells", "6", "--json"});
        CHECK(r.code == kExitPass);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["suites"].size() == 6);
        CHECK(j["pass"] == true);
    }
}
