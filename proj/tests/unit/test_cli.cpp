#include "doctest.h"
#include "hardylab/cli.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {
struct Invocation {
    int code = 0;
    std::string out, err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "hardy_lab");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    std::ostringstream out, err;
    Invocation r;
    r.code = hardylab::run(static_cast<int>(args.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/hardylab_test_" + name;
    std::ofstream(path) << body;
    return path;
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("constants subcommand") {
    const Invocation r = invoke({"constants", "--N", "3", "--s", "0.5", "--p", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["fourier_sharp"].get<double>() == doctest::Approx(0.6366198).epsilon(1e-7));
    CHECK(j["config"]["N"] == 3);
    CHECK(j["config"]["command"] == "constants");
    for (const char* k : {"frac_sharp", "cp", "cp_star", "K", "local_sharp", "kappa", "quad_error"}) CHECK(j.contains(k));
}

TEST_CASE("uncertainty subcommand") {
    const Invocation r = invoke({"uncertainty", "--N", "4", "--s", "0.5", "--preset", "cyl-gauss", "--alpha", "1"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["ratio"].get<double>() - 0.25) <= 1e-6);
}

TEST_CASE("usage errors exit with 2") {
    const Invocation r = invoke({"frobnicate"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(invoke({"constants", "--N", "3", "--s", "0.5", "--p", "9"}).code == 2);
    CHECK(invoke({"deficit", "--preset", "nope"}).code == 2);
    CHECK(invoke({"constants", "--format", "xml"}).code == 2);
}

TEST_CASE("malformed profile files") {
    const std::string bad = temp_file("bad.json", "{\"grid\": {\"t_min\": -1, \"t_max\": 1, \"n\": 32},\n \"values\": [1, 2,,]}");
    const Invocation r = invoke({"deficit", "--profile", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    const std::string short_vals = temp_file("short.json", "{\"grid\": {\"t_min\": -1, \"t_max\": 1, \"n\": 32}, \"values\": [1, 2]}");
    const Invocation s = invoke({"deficit", "--profile", short_vals});
    CHECK(s.code == 2);
    CHECK(s.err.find("values") != std::string::npos);
    CHECK(invoke({"deficit", "--profile", "/nonexistent/profile.json"}).code == 2);
}

TEST_CASE("csv output is deterministic") {
    const std::vector<std::string> args{"stability-scan", "--N", "3", "--s", "0.5", "--p", "2", "--family", "gauss",
                                        "--values", "0.5,1", "--grid-n", "512", "--format", "csv"};
    const Invocation a = invoke(args), b = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("# config:", 0) == 0);
}

TEST_CASE("spectral-verify passes at default tolerances") {
    const Invocation r = invoke({"spectral-verify", "--N", "4", "--s", "0.5", "--preset", "gauss"});
    CHECK(r.code == 0);
}

}
