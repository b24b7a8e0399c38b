#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pnh/cli.hpp"
#include "pnh/io.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "pnh");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = pnh::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("fvector table") {
        const auto r = run_cli({"fvector", "--type", "A3", "--building", "minimal"});
        CHECK(r.code == 0);
        CHECK(r.out.find("120") != std::string::npos);
        CHECK(r.out.find("192") != std::string::npos);
        CHECK(r.out.find("74") != std::string::npos);
        CHECK(r.out.find("formula") != std::string::npos);
        const auto j = run_cli({"fvector", "--type", "A3", "--building", "maximal", "--format", "json"});
        CHECK(j.code == 0);
        const auto doc = nlohmann::json::parse(j.out);
        CHECK(doc["f_vector"][1]["count"] == "216");
        CHECK(doc["f_vector"][1]["formula"] == "216");
    }

    TEST_CASE("verify") {
        const auto ok = run_cli({"verify", "--type", "A2", "--a", "1"});
        CHECK(ok.code == 0);
        CHECK(ok.out.find("FAIL") == std::string::npos);
        const auto bad = run_cli({"verify", "--type", "A2", "--epsilons", "1/3,1"});
        CHECK(bad.code == 1);
        CHECK(bad.out.find("FAIL") != std::string::npos);
        CHECK(bad.out.find("4/3") != std::string::npos);
        const auto full = run_cli({"verify", "--type", "B2", "--building", "maximal", "--verify", "full", "--format", "json"});
        CHECK(full.code == 0);
        CHECK(nlohmann::json::parse(full.out)["pass"] == true);
    }

    TEST_CASE("usage errors") {
        CHECK(run_cli({}).code == 2);
        CHECK(run_cli({"build"}).code == 2);
        CHECK(run_cli({"build", "--type", "G2"}).code == 2);
        CHECK(run_cli({"build", "--type", "A2", "--building", "tiny"}).code == 2);
        CHECK(run_cli({"build", "--type", "A2", "--format", "xml"}).code == 2);
        CHECK(run_cli({"build", "--type", "A2", "--a", "1/0"}).code == 2);
        CHECK(run_cli({"build", "--type", "A2", "--a", "-1"}).code == 2);
        CHECK(run_cli({"build", "--type", "A2", "--epsilons", "1"}).code == 2);
        CHECK(run_cli({"export", "--type", "A2", "--format", "off"}).code == 2);
        CHECK(run_cli({"build", "--type", "A2", "--building", "file:/nonexistent.json"}).code == 2);
        CHECK(run_cli({"frobnicate"}).code == 2);
        CHECK(run_cli({"--help"}).code == 0);
    }

    TEST_CASE("non-suitable epsilons fail the build") {
        CHECK(run_cli({"build", "--type", "A2", "--epsilons", "1/3,1"}).code == 1);
        CHECK(run_cli({"build", "--type", "A2", "--epsilons", "1/5,1"}).code == 0);
    }

    TEST_CASE("build output") {
        const auto r = run_cli({"build", "--type", "A2", "--a", "3"});
        REQUIRE(r.code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["epsilons"].dump() == R"(["3/5","3"])");
        CHECK(doc["halfspaces"].size() == 12);
        CHECK(doc["vertices"].size() == 12);
        CHECK(doc["verification"]["sampled"] == false);
        const auto again = run_cli({"build", "--type", "A2", "--a", "3"});
        CHECK(again.out == r.out);
        const auto table = run_cli({"build", "--type", "B2", "--format", "table"});
        CHECK(table.out.find("vertices     16") != std::string::npos);
    }

    TEST_CASE("building set files") {
        const Fixture f("A3", true);
        const std::string path = "pnh_cli_building_test.json";
        {
            std::ofstream file(path);
            file << building_set_json(*f.g).dump();
        }
        const auto r = run_cli({"fvector", "--type", "A3", "--building", "file:" + path, "--format", "json"});
        CHECK(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["f_vector"][0]["count"] == "144");
        std::remove(path.c_str());
    }

    TEST_CASE("export and poset") {
        const auto off = run_cli({"export", "--type", "B3", "--format", "off"});
        CHECK(off.code == 0);
        CHECK(off.out.rfind("OFF\n", 0) == 0);
        const auto poset = run_cli({"poset", "--type", "A2"});
        CHECK(poset.code == 0);
        const auto doc = nlohmann::json::parse(poset.out);
        CHECK(doc["nodes"].size() == 25);
        CHECK(doc.contains("edges"));
        const auto bare = run_cli({"poset", "--type", "A2", "--no-edges"});
        CHECK_FALSE(nlohmann::json::parse(bare.out).contains("edges"));
    }
}
