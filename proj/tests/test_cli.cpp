#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "semicurve/cli.hpp"
#include "semicurve/order_bound.hpp"

using namespace semicurve;
using nlohmann::json;

TEST_CASE("profile verb matches the library") {
    auto r = run({"profile", "gen:4,9,11"});
    CHECK(r.status == 0);
    CHECK(r.text.find("c = 15") != std::string::npos);
    CHECK(r.text.find("acute") != std::string::npos);

    auto rn = run({"profile", "gen:1"});
    CHECK(rn.status == 0);
    CHECK(rn.text.find("ordinary") != std::string::npos);
}

TEST_CASE("sm verb on the elem grammar") {
    auto r = run({"sm", "elem:0,10,20,22,23,26;c=30"});
    CHECK(r.status == 0);
    CHECK(r.text.find("s_m = 46") != std::string::npos);

    json j = json::parse(run({"--json", "sm", "elem:0,10,20,22,23,26;c=30"}).text);
    CHECK(j.at("s_m") == 46);
}

TEST_CASE("nu and ordbound verbs agree with direct calls") {
    auto S = NumericalSemigroup::from_small_elements({0, 8, 12, 14, 15, 16}, 20);
    json j = json::parse(run({"--json", "nu", "elem:0,8,12,14,15,16;c=20", "--s", "30"}).text);
    CHECK(j.at("nu") == nu(S, 30));
    json k = json::parse(run({"--json", "ordbound", "gen:4,9,11", "--k", "3"}).text);
    CHECK(k.at("order_bound") == order_bound(NumericalSemigroup::from_generators({4, 9, 11}), 3));
}

TEST_CASE("JSON payloads round-trip") {
    for (auto args : {std::vector<std::string>{"--json", "profile", "gen:4,9,11"},
                      std::vector<std::string>{"--json", "buchweitz",
                                               "gen:13,14,15,16,17,18,20,22,23"},
                      std::vector<std::string>{"--json", "curve", "ideal", "gen:5,8,11,14"}}) {
        auto r = run(args);
        REQUIRE(r.status == 0);
        json parsed = json::parse(r.json);
        CHECK(parsed.dump(2) + "\n" == r.json);
    }
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run({"frobnicate"}).status != 0);
    CHECK(run({"profile", "nope:3"}).status != 0);
    CHECK(run({"profile", "gen:4,6"}).status != 0);  // not co-finite
    CHECK(run({}).status != 0);
}

TEST_CASE("conjecture-scan writes resumable records") {
    setenv("SEMICURVE_SCAN_DIR", "/tmp", 1);
    auto r = run({"conjecture-scan", "--genus-max", "5", "--jsonl", "sgp_scan_test.jsonl",
                  "--jobs", "2"});
    CHECK(r.status == 0);
    CHECK(r.text.find("no counterexamples") != std::string::npos);
    std::ifstream f("/tmp/sgp_scan_test.jsonl");
    REQUIRE(f.good());
    long long lines = 0;
    std::string line;
    std::vector<json> recs;
    while (std::getline(f, line)) {
        ++lines;
        recs.push_back(json::parse(line));
    }
    // Non-ordinary semigroups of genus <= 5: 27 - 6 = 21.
    CHECK(lines == 21);
    for (const auto& rec : recs) CHECK(rec.at("verdict") == "pass");
    unsetenv("SEMICURVE_SCAN_DIR");
    std::remove("/tmp/sgp_scan_test.jsonl");
}

TEST_CASE("obstruction verbs") {
    auto r = run({"buchweitz", "gen:13,14,15,16,17,18,20,22,23", "--mmax", "2"});
    CHECK(r.status == 0);
    CHECK(r.text.find("obstructed (non-Weierstrass)") != std::string::npos);

    auto t = run({"torres", "gen:13,14,15,16,17,18,20,22,23", "--genus", "100"});
    CHECK(t.status == 0);
    CHECK(t.text.find("non-Weierstrass") != std::string::npos);

    auto red = run({"reduce", "gen:2,11", "--gamma", "0"});
    CHECK(red.status == 0);

    auto bad = run({"reduce", "gen:3,4", "--gamma", "1"});
    CHECK(bad.status == 2);
}

TEST_CASE("enumerate counts") {
    json j = json::parse(run({"--json", "enumerate", "--genus-max", "6", "--count-only"}).text);
    CHECK(j.at("counts_by_genus") == json({1, 1, 2, 4, 7, 12, 23}));
}

TEST_CASE("curve verbs") {
    auto ideal = run({"curve", "ideal", "gen:5,8,11,14"});
    CHECK(ideal.status == 0);
    CHECK(ideal.text.find("f1 = ") != std::string::npos);

    auto t1 = run({"curve", "t1", "gen:4,9,11", "--table"});
    CHECK(t1.status == 0);
    CHECK(t1.text.find("dim T^1 = 17") != std::string::npos);

    auto def = run({"curve", "deform", "gen:6,7,8,9", "--verify", "--ff-scan", "p=29,u=1"});
    CHECK(def.status == 0);
    CHECK(def.text.find("all residuals zero") != std::string::npos);
    CHECK(def.text.find("min Jacobian rank 3") != std::string::npos);
}

TEST_CASE("paper-regress runs the fixture set") {
    auto r = run({"paper-regress"});
    CHECK(r.status == 0);
    CHECK(r.text.find("all fixtures pass") != std::string::npos);
    CHECK(r.text.find("FAIL") == std::string::npos);
}
