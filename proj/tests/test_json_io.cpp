#include <catch_amalgamated.hpp>

#include <random>

#include "latroot/catalog.hpp"
#include "latroot/json_io.hpp"
#include "test_support.hpp"

using namespace latroot;
using testsupport::rand_int;
using testsupport::random_configuration;

TEST_CASE("configuration JSON round trip") {
    json j = json::parse(R"({"rank": 2, "vectors": [[1,0],[0,1],[-1,-1]], "labels": ["a","b","c"]})");
    VectorConfiguration v = configuration_from_json(j);
    REQUIRE(v.rank() == 2);
    REQUIRE(v.size() == 3);
    REQUIRE(v.labels()[2] == "c");
    REQUIRE(configuration_from_json(to_json(v)) == v);
}

TEST_CASE("configuration JSON validation errors") {
    REQUIRE_THROWS_AS(configuration_from_json(json::parse(R"({"vectors": [[1,0]]})")), InputError);
    REQUIRE_THROWS_AS(
        configuration_from_json(json::parse(R"({"rank": 2, "vectors": [[1,0],[1.5,2]]})")),
        InputError);
    REQUIRE_THROWS_AS(
        configuration_from_json(json::parse(R"({"rank": 2, "vectors": [[1,0],[0,0]]})")),
        ZeroVectorError);
}

TEST_CASE("root system JSON round trip") {
    std::mt19937 rng(71001);
    for (int trial = 0; trial < 20; ++trial) {
        VectorConfiguration v = random_configuration(rng, 3, 6, 2);
        RootSystem r = compute_roots(v);
        RootSystem back = root_system_from_json(to_json(r));
        REQUIRE(back.config == r.config);
        REQUIRE(back.roots.size() == r.roots.size());
        for (std::size_t i = 0; i < r.roots.size(); ++i) {
            REQUIRE(back.roots[i].alpha == r.roots[i].alpha);
            REQUIRE(back.roots[i].pairing == r.roots[i].pairing);
        }
    }
}

TEST_CASE("root JSON carries the pairing type") {
    RootSystem r = compute_roots(VectorConfiguration(2, {{1, 0}, {0, 1}}));
    json j = to_json(r);
    int type1 = 0, type2 = 0;
    for (const json& root : j.at("roots")) {
        REQUIRE(root.contains("kind"));
        if (root.at("kind") == 1) ++type1;
        if (root.at("kind") == 2) ++type2;
    }
    REQUIRE(type1 == 4);
    REQUIRE(type2 == 4);

    // doubled dual elements carry no kind
    json dj = to_json(dual(r));
    int unkinded = 0;
    for (const json& root : dj.at("roots"))
        if (!root.contains("kind")) ++unkinded;
    REQUIRE(unkinded == 4);
}

TEST_CASE("inconsistent stored pairing is rejected") {
    json j = json::parse(R"({
      "configuration": {"rank": 2, "vectors": [[1,0],[0,1]]},
      "roots": [{"alpha": [1,0], "pairing": [1,1]}]
    })");
    REQUIRE_THROWS_AS(root_system_from_json(j), InputError);
}

TEST_CASE("fan JSON round trip with 1-based cones") {
    json j = json::parse(
        R"({"rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[1,2],[2,3],[1,3]]})");
    Fan f = fan_from_json(j);
    REQUIRE(f.ray_count() == 3);
    json out = to_json(f);
    REQUIRE(out.at("max_cones") == json::parse("[[1,2],[1,3],[2,3]]"));
    Fan back = fan_from_json(out);
    REQUIRE(back.rays() == f.rays());
    REQUIRE(back.max_cones() == f.max_cones());
}

TEST_CASE("fan JSON index errors") {
    json zero_based = json::parse(
        R"({"rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]})");
    REQUIRE_THROWS_AS(fan_from_json(zero_based), InputError);
}

TEST_CASE("classification report schema") {
    RootSystem r = compute_roots(VectorConfiguration(2, {{1, 0}, {0, 1}}));
    json j = to_json(classify_system(r));
    REQUIRE(j.at("criteria_agreement") == true);
    REQUIRE(j.at("components").size() == 1);
    const json& comp = j.at("components").front();
    REQUIRE(comp.at("family") == "B");
    REQUIRE(comp.at("rank") == 2);
    REQUIRE(comp.at("simple_roots").size() == 2);
    REQUIRE(comp.at("cartan").size() == 2);
    REQUIRE(comp.at("conjugate_pairs").size() == 4);
    REQUIRE(comp.at("short_roots").size() == 4);
}

TEST_CASE("partition report serialization is 1-based") {
    json j = to_json(reflection_partition(catalog_fan("hirzebruch2")));
    REQUIRE(j.at("classes") == json::parse("[[1,3],[2],[4]]"));
    REQUIRE(j.at("factor_ranks") == json::parse("[1,0,0]"));
}

TEST_CASE("serialization is deterministic") {
    Fan f = catalog_fan("cp1xcp2");
    REQUIRE(to_json(symmetry_report(f)).dump(2) == to_json(symmetry_report(f)).dump(2));
}
