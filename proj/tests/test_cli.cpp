#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "asca/cli.hpp"

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = asca::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Run r = run(std::move(args));
    REQUIRE(r.status == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("simulate") {
    CHECK(run({"simulate", "--eca", "57", "--rule", "<><", "--input", "000"}).out == "011\n");
    CHECK(run({"simulate", "--eca", "57", "--rule", "<><", "--input", "000", "--tau", "8"}).out == "000\n");
    const auto j = run_json({"simulate", "--eca", "57", "--rule", "<><", "--input", "000"});
    CHECK(j["command"] == "simulate");
    CHECK(j["outputs"]["value"] == 3);
    CHECK(j["version"] == asca::cli::kVersion);
    CHECK_FALSE(j.contains("wall_time_s"));
    CHECK(run_json({"simulate", "--eca", "57", "--rule", "<><", "--input", "000", "--timing"}).contains("wall_time_s"));
}

TEST_CASE("records round trip") {
    const auto j = run_json({"map", "--eca", "57", "--rule", "<><"});
    CHECK(nlohmann::json::parse(j.dump()) == j);
    CHECK(j["outputs"]["table"] == nlohmann::json({3, 5, 4, 6, 7, 2, 1, 0}));
}

TEST_CASE("orbit, profile, families") {
    CHECK(run_json({"orbit", "--eca", "57", "--rule", "<><", "--input", "0"})["outputs"]["period"] == 8);
    const auto p = run_json({"profile", "--eca", "57", "--rule", "<=>>"});
    CHECK(p["outputs"]["at"] == nlohmann::json({{"0", 2}, {"1", 12}, {"2", 2}}));
    CHECK(run({"profile", "--function", "MUL_KXK", "--n", "4"}).status == 0);
    const auto f = run_json({"families", "--eca", "57"});
    CHECK(f["outputs"]["families"][0]["members"] == nlohmann::json({57, 99}));
    CHECK(run_json({"families"})["outputs"]["count"] == 88);
}

TEST_CASE("property and group") {
    CHECK(run_json({"group", "--eca", "105", "--n", "5"})["outputs"]["order"] == "1920");
    const auto csv = run({"property", "--eca", "0,160", "--n", "4", "--which", "o", "--format", "csv"});
    CHECK(csv.status == 0);
    CHECK(csv.out.find("160,4,12,") != std::string::npos);
}

TEST_CASE("output is independent of the thread count") {
    const std::vector<std::string> base{"property", "--eca", "57", "--n", "5", "--which", "ii", "--format", "json"};
    auto one = base, many = base;
    one.insert(one.end(), {"--threads", "1"});
    many.insert(many.end(), {"--threads", "4"});
    const Run a = run(one), b = run(many);
    REQUIRE(a.status == 0);
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    ja["inputs"].erase("threads");
    jb["inputs"].erase("threads");
    CHECK(ja.dump() == jb.dump());

    const std::vector<std::string> o{"property", "--eca", "30", "--n", "6", "--which", "o", "--format", "json"};
    auto o1 = o, o3 = o;
    o1.insert(o1.end(), {"--threads", "1"});
    o3.insert(o3.end(), {"--threads", "3"});
    auto j1 = nlohmann::json::parse(run(o1).out), j3 = nlohmann::json::parse(run(o3).out);
    j1["inputs"].erase("threads");
    j3["inputs"].erase("threads");
    CHECK(j1.dump() == j3.dump());
}

TEST_CASE("representability and synthesis") {
    const auto v = run_json({"check-representable", "--function", "NEG", "--n", "4"});
    CHECK(v["outputs"]["case"] == "bijective_odd");
    const auto s = run_json({"synthesize", "--function", "INC", "--n", "3"});
    CHECK(s["outputs"]["verified"] == true);
    CHECK(s["outputs"]["rules"].is_array());
    CHECK(run({"synthesize", "--function", "[1,0,2,3,4,5,6,7]", "--n", "3"}).status == 0);
}

TEST_CASE("exit codes") {
    const Run refused = run({"synthesize", "--function", "NEG", "--n", "4"});
    CHECK(refused.status == 1);
    CHECK_FALSE(refused.err.empty());
    CHECK(run({"simulate", "--eca", "57", "--rule", "=<=", "--input", "000"}).status == 1);
    CHECK(run({"simulate", "--eca", "57", "--rule", "<><", "--input", "12"}).status == 1);
    CHECK(run({}).status == 2);
    CHECK(run({"simulate", "--no-such-flag"}).status == 2);
    CHECK(run({"map", "--eca", "57", "--rule", "<><", "--format", "xml"}).status == 2);
}
