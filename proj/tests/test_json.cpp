#include <invseq_lab/json_io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <string>

using namespace invseq_lab;

TEST_CASE("inversion sequences are plain integer arrays", "[json]") {
    const InversionSequence e({0, 0, 2, 0, 1});
    const nlohmann::json j = e;
    CHECK(j.dump() == "[0,0,2,0,1]");
    CHECK(j.get<InversionSequence>() == e);
    CHECK(nlohmann::json(InversionSequence(std::vector<int>{})).dump() == "[]");

    const nlohmann::json bad = nlohmann::json::parse("[1]");
    CHECK_THROWS_AS(bad.get<InversionSequence>(), std::invalid_argument);
}

TEST_CASE("paths spell out their steps", "[json]") {
    const LabeledFPath q{{FStep{1, 0, {0, 0, 0}}}};
    const nlohmann::json jq = q;
    CHECK(jq.dump() == R"({"steps":[{"dx":1,"dy":0,"label":[0,0,0]}]})");
    CHECK(jq.get<LabeledFPath>() == q);

    const WeightedHWalk r{{WStep{1, 1, 1}, WStep{0, -1, 2}}};
    const nlohmann::json jr = r;
    CHECK(jr.dump() == R"({"steps":[{"dx":1,"dy":1,"weight":1},{"dx":0,"dy":-1,"weight":2}]})");
    CHECK(jr.get<WeightedHWalk>() == r);

    // a simple path serializes exactly like the walk it wraps
    const SimpleHPath p{r};
    CHECK(nlohmann::json(p).dump() == jr.dump());
    CHECK(nlohmann::json(p).get<SimpleHPath>().underlying == r);

    CHECK(nlohmann::json(eta(q)) == jr);
}

TEST_CASE("series dump to sorted term lists", "[json]") {
    const auto B = solve_B(4, 2);
    const nlohmann::json j = B;
    REQUIRE(j.is_array());
    CHECK(j[0].dump() == R"({"c":"1","x":0,"y":0,"z":0})");

    std::array<int, 3> previous{-1, -1, -1};
    for (const auto& term : j) {
        const std::array<int, 3> key{term.at("x").get<int>(), term.at("y").get<int>(),
                                     term.at("z").get<int>()};
        CHECK(previous < key);
        previous = key;
        CHECK(term.at("c").is_string());
    }
}

TEST_CASE("count tables round-trip with decimal-string counts", "[json]") {
    const auto table =
        count_table(5, {PatternWord::from_digits("102"), PatternWord::from_digits("000")});
    const nlohmann::json j = table;
    REQUIRE(j.is_array());
    for (const auto& row : j) {
        CHECK(row.contains("n"));
        CHECK(row.contains("m"));
        CHECK(row.contains("t"));
        CHECK(row.at("count").is_string());
    }
    const auto back = j.get<CountTable>();
    CHECK(back.cells() == table.cells());
}
