#include <invseq_lab/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

using namespace invseq_lab;

TEST_CASE("reconciliation groups pass at reduced scale", "[verify]") {
    SECTION("count grid") {
        const auto report = verify_table1(6);
        REQUIRE(report.checks.size() == 4);
        for (const auto& c : report.checks) {
            INFO(c.name << ": " << c.lhs << " vs " << c.rhs);
            CHECK(c.pass);
        }
    }
    SECTION("bijections") {
        const auto report = verify_bijections(4);
        REQUIRE(report.checks.size() == 6);
        for (const auto& c : report.checks) {
            INFO(c.name << ": " << c.lhs << " vs " << c.rhs);
            CHECK(c.pass);
        }
    }
    SECTION("minimal polynomials") {
        const auto report = verify_minpolys(SeriesBounds{8, 5, 5});
        REQUIRE(report.checks.size() == 10);
        for (const auto& c : report.checks) {
            INFO(c.name << ": " << c.lhs << " vs " << c.rhs);
            CHECK(c.pass);
        }
    }
    SECTION("published sequences, offline") {
        const auto report = verify_oeis(true);
        REQUIRE(report.checks.size() == 3);
        for (const auto& c : report.checks) {
            INFO(c.name << ": " << c.lhs << " vs " << c.rhs);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("check registry is stable", "[verify]") {
    const auto report = verify_all(true, VerifyOptions{1});
    REQUIRE(report.checks.size() == 23);
    CHECK(report.all_pass());

    const std::vector<std::string> expected{
        "closed form reproduces the dist count grid",
        "series coefficients reproduce the dist count grid",
        "exhaustive enumeration reproduces the dist count grid",
        "grid column totals match the closed form and the specialized series",
        "eta inverts to the identity on labeled paths",
        "eta lands in valid walks and preserves semilength and height",
        "weighted walks match 102-avoiders by height and rank",
        "simple paths match avoiders of 102 and 000 by all three statistics",
        "final-north path counts match their closed form",
        "duplicate-maximum removal is a bijection onto unique-maximum avoiders",
        "derivation chain is internally consistent",
        "minimal polynomial annihilates E(x,y,z)",
        "minimal polynomial annihilates E(x,1,z)",
        "minimal polynomial annihilates E(x,y,1)",
        "minimal polynomial annihilates E(x,1,1)",
        "minimal polynomial annihilates E(x,y,0)",
        "minimal polynomial annihilates E(x,1,0)",
        "minimal polynomial annihilates E(1,y,z)",
        "minimal polynomial annihilates E(1,y,0)",
        "minimal polynomial annihilates E(1,y,1)",
        "Fuss-Catalan numbers match A002293",
        "dist totals match A069271",
        "dist/rank triangle matches A355174",
    };
    std::vector<std::string> names;
    for (const auto& c : report.checks) names.push_back(c.name);
    CHECK(names == expected);

    for (const auto& c : report.checks) CHECK_FALSE(c.ref.empty());
}

TEST_CASE("reports are deterministic and elapsed is opt-in", "[verify]") {
    const auto a = verify_bijections(3, VerifyOptions{1});
    const auto b = verify_bijections(3, VerifyOptions{8});
    const auto c = verify_bijections(3);
    CHECK(report_json(a).dump() == report_json(b).dump());
    CHECK(report_json(a).dump() == report_json(c).dump());

    const auto plain = report_json(a);
    CHECK_FALSE(plain["checks"].front().contains("elapsed"));
    const auto timed = report_json(a, true);
    CHECK(timed["checks"].front().contains("elapsed"));

    CHECK(plain["status"] == "pass");
    CHECK(plain["checks"].front()["name"] == "eta inverts to the identity on labeled paths");
    CHECK(plain["checks"].front()["status"] == "pass");
}

TEST_CASE("cell comparison pinpoints the first disagreement", "[verify]") {
    using Key = std::pair<int, int>;
    const std::function<std::string(const Key&)> show = [](const Key& k) {
        return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
    };

    std::map<Key, Int> want{{{1, 1}, Int(2)}, {{2, 1}, Int(5)}};
    std::map<Key, Int> got = want;

    auto body = detail::compare_cells<Key>(got, want, show);
    CHECK(body.pass);
    CHECK(body.lhs == "2 cells, total 7");
    CHECK(body.lhs == body.rhs);

    got[{2, 1}] = Int(4);
    body = detail::compare_cells<Key>(got, want, show);
    CHECK_FALSE(body.pass);
    CHECK(body.lhs == "(2,1) = 4");
    CHECK(body.rhs == "(2,1) = 5");

    got = want;
    got[{9, 9}] = Int(1);
    body = detail::compare_cells<Key>(got, want, show);
    CHECK_FALSE(body.pass);
    CHECK(body.lhs == "(9,9) = 1");
    CHECK(body.rhs == "(9,9) absent");

    // a zero cell on the computed side is not a disagreement
    got = want;
    got[{9, 9}] = Int(0);
    body = detail::compare_cells<Key>(got, want, show);
    CHECK(body.pass);
}

TEST_CASE("a single failing check fails the report", "[verify]") {
    VerificationReport report;
    report.checks.push_back(CheckResult{"a", "r", true, "x", "x", 0.0});
    CHECK(report.all_pass());
    report.checks.push_back(CheckResult{"b", "r", false, "x", "y", 0.0});
    CHECK_FALSE(report.all_pass());

    const auto j = report_json(report);
    CHECK(j["status"] == "fail");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["status"] == "fail");
}
