#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QES_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("table1 csv golden rows") {
    auto r = run("table1 --J-max 3 --digits 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("J,a_crit_sq,difference\n") != std::string::npos);
    CHECK(r.output.find("2,2.0000000000,\n") != std::string::npos);
    CHECK(r.output.find("3,10.5874700363,8.5874700363\n") != std::string::npos);
}

TEST_CASE("identical configuration produces byte-identical files") {
    std::string p1 = "/tmp/qes_cli_det_1.csv", p2 = "/tmp/qes_cli_det_2.csv";
    auto r1 = run("table1 --J-max 4 --digits 10 --out " + p1);
    auto r2 = run("table1 --J-max 4 --digits 10 --out " + p2);
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    std::string c1 = slurp(p1), c2 = slurp(p2);
    CHECK(!c1.empty());
    CHECK(c1 == c2);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("json output re-parses to the emitted values") {
    std::string path = "/tmp/qes_cli_rt.json";
    auto r = run("table1 --J-max 3 --digits 10 --format json --out " + path);
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(slurp(path));
    CHECK(doc.at("schema") == "qes.table1/1");
    CHECK(doc.at("config").at("J_max") == 3);
    REQUIRE(doc.at("rows").size() == 2);
    CHECK(doc.at("rows")[0].at("a_crit_sq") == "2.0000000000");
    CHECK(doc.at("rows")[0].at("difference").is_null());
    CHECK(doc.at("rows")[1].at("a_crit_sq") == "10.5874700363");
    CHECK(doc.at("rows")[1].at("difference") == "8.5874700363");
    std::remove(path.c_str());
}

TEST_CASE("fig1 plot data") {
    auto r = run("fig1-data --J-max 4 --digits 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("# x = 1/J", 0) == 0);
    CHECK(r.output.find("0.500000 8.5874700363\n") != std::string::npos);
    CHECK(r.output.find("0.333333 9.9640634033\n") != std::string::npos);
}

TEST_CASE("spectrum subcommand output") {
    auto r = run("spectrum --J 2 --a2 4 --digits 20");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-8.82842712474619009760") != std::string::npos);
    CHECK(r.output.find("-3.17157287525380990240") != std::string::npos);
    auto broken = run("spectrum --J 2 --a2 0 --digits 20");
    CHECK(broken.output.find("pair") != std::string::npos);
}

TEST_CASE("richardson subcommand reproduces the first extrapolant") {
    auto r = run("richardson --J-max 8 --levels 1 --digits 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("11.3406567704") != std::string::npos);
    auto base_only = run("richardson --J-max 5 --levels 0 --digits 10");
    CHECK(base_only.exit_code == 0);
    CHECK(base_only.output.find("8.5874700363") != std::string::npos);
}

TEST_CASE("cache round trip keeps output identical") {
    std::string cache = "/tmp/qes_cli_cache.json";
    std::remove(cache.c_str());
    auto cold = run("table1 --J-max 4 --digits 10 --cache " + cache);
    auto warm = run("table1 --J-max 4 --digits 10 --cache " + cache);
    CHECK(cold.exit_code == 0);
    CHECK(warm.exit_code == 0);
    CHECK(cold.output == warm.output);
    auto doc = nlohmann::json::parse(slurp(cache));
    CHECK(doc.at("schema") == "qes.cache/1");
    CHECK(doc.at("entries").size() >= 3);
    std::remove(cache.c_str());
}

TEST_CASE("corrupted cache is ignored and rebuilt") {
    std::string cache = "/tmp/qes_cli_cache_bad.json";
    {
        std::ofstream os(cache);
        os << "{ not json at all";
    }
    auto r = run("table1 --J-max 3 --digits 10 --cache " + cache);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("10.5874700363") != std::string::npos);
    auto doc = nlohmann::json::parse(slurp(cache));
    CHECK(doc.at("schema") == "qes.cache/1");
    std::remove(cache.c_str());
}

TEST_CASE("invalid configurations exit with code 2") {
    CHECK(run("table1 --J-max 1").exit_code == 2);
    CHECK(run("boundary --J 1").exit_code == 2);
    CHECK(run("spectrum --J 2 --a2 4 --digits 10").exit_code == 2);
    CHECK(run("spectrum --J 2 --variant hermitian --a2 4").exit_code == 2);
    CHECK(run("spectrum --J 2 --a 1 --a2 1").exit_code == 2);
    CHECK(run("nonsense-subcommand").exit_code == 2);
    CHECK(run("table1 --format yaml").exit_code == 2);
}

TEST_CASE("discriminant method through the CLI") {
    auto r = run("boundary --J 3 --digits 10 --method discriminant");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("10.5874700363") != std::string::npos);
}
