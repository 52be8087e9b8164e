#include <invseq_lab/formulas.hpp>
#include <invseq_lab/oeis.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

using namespace invseq_lab;

namespace {

std::filesystem::path fresh_cache_dir(const std::string& tag) {
    const char* base = std::getenv("INVSEQ_LAB_CACHE");
    std::filesystem::path dir =
        base && *base ? std::filesystem::path(base) : std::filesystem::temp_directory_path();
    dir /= tag;
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("b-file parsing accepts comments and rejects junk", "[oeis]") {
    const auto seq = parse_bfile("A000001", "# header\n0 1\n1 -5\n 2\t 12 \n");
    REQUIRE(seq.entries.size() == 3);
    CHECK(seq.entries[0].index == 0);
    CHECK(seq.entries[1].value == -5);
    CHECK(seq.entries[2].index == 2);
    CHECK(seq.entries[2].value == 12);

    CHECK_THROWS_WITH(parse_bfile("A000001", "0 1\nbogus\n"),
                      "b-file line 2: malformed entry");
    CHECK_THROWS_WITH(parse_bfile("A000001", "0 1\n\n1 2\n"),
                      "b-file line 2: malformed entry");
    CHECK_THROWS_WITH(parse_bfile("A000001", "0 1 2\n"), "b-file line 1: malformed entry");
    CHECK_THROWS_WITH(parse_bfile("A000001", "0 1\n0 2\n"),
                      "b-file line 2: index not strictly increasing");
    CHECK_THROWS_WITH(parse_bfile("A000001", "1 1\n0 2\n"),
                      "b-file line 2: index not strictly increasing");
}

TEST_CASE("b-file rendering inverts parsing", "[oeis]") {
    const auto seq = parse_bfile("A002293", fixtures::kA002293);
    REQUIRE(seq.entries.size() == 21);
    CHECK(seq.entries[3].value == 22);
    CHECK(render_bfile(seq) == fixtures::kA002293);
}

TEST_CASE("bundled fixtures carry the published terms", "[oeis]") {
    const auto fuss = parse_bfile("A002293", fixtures::kA002293);
    for (std::size_t m = 0; m < fuss.entries.size(); ++m) {
        CHECK(fuss.entries[m].value == fuss3(static_cast<long long>(m)));
    }
    const auto totals = parse_bfile("A069271", fixtures::kA069271);
    for (std::size_t m = 0; m < totals.entries.size(); ++m) {
        CHECK(totals.entries[m].value == dist_total(static_cast<long long>(m)));
    }
    const auto triangle = parse_bfile("A355174", fixtures::kA355174);
    REQUIRE(triangle.entries.size() == 45);
    std::size_t i = 0;
    for (long long m = 0; m <= 8; ++m)
        for (long long t = 0; t <= m; ++t) CHECK(triangle.entries[i++].value == dist_rank_count(m, t));
}

TEST_CASE("comparison reports the longest matching prefix", "[oeis]") {
    const auto seq = parse_bfile("A002293", fixtures::kA002293);

    std::vector<Int> produced{1, 1, 4, 22, 140};
    auto r = compare(seq, produced, 0);
    CHECK(r.pass);
    CHECK(r.compared == 5);
    CHECK(r.match_length == 5);

    produced[4] = 141;
    r = compare(seq, produced, 0);
    CHECK_FALSE(r.pass);
    CHECK(r.match_length == 4);

    r = compare(seq, {Int(1), Int(4)}, 1);
    CHECK(r.pass);
    CHECK(r.match_length == 2);

    r = compare(seq, {Int(7)}, 99);  // no overlap at all
    CHECK_FALSE(r.pass);
    CHECK(r.compared == 0);

    // terms beyond the b-file are not silently passed
    std::vector<Int> too_long(seq.entries.size() + 1, Int(1));
    r = compare(seq, too_long, 0);
    CHECK(r.compared == seq.entries.size());
    CHECK(r.compared < too_long.size());
}

TEST_CASE("offline fetch serves fixtures and validates ids", "[oeis]") {
    OeisClient client(OeisConfig{"oeis.org", 443, true, fresh_cache_dir("offline")});
    const auto seq = client.fetch("A355174", true);
    REQUIRE(seq.entries.size() == 45);
    CHECK(seq.entries[44].value == 1);

    CHECK_THROWS_WITH(client.fetch("A999999", true),
                      "A999999: no bundled fixture and offline mode is on");
    CHECK_THROWS_AS(client.fetch("bogus", true), std::invalid_argument);
    CHECK_THROWS_AS(client.fetch("A12345", true), std::invalid_argument);
    CHECK_THROWS_AS(client.fetch("B123456", true), std::invalid_argument);
}

TEST_CASE("online fetch caches and reuses the b-file", "[oeis]") {
    const auto dir = fresh_cache_dir("online");

    httplib::Server server;
    int hits = 0;
    server.Get("/A000045/b000045.txt", [&](const httplib::Request&, httplib::Response& res) {
        ++hits;
        res.set_content("0 0\n1 1\n2 1\n3 2\n", "text/plain");
    });
    server.Get("/A000002/b000002.txt", [](const httplib::Request&, httplib::Response& res) {
        res.set_content("0 1\nnot a term\n", "text/plain");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    OeisClient client(OeisConfig{"127.0.0.1", port, false, dir});
    const auto fib = client.fetch("A000045", false);
    REQUIRE(fib.entries.size() == 4);
    CHECK(fib.entries[3].value == 2);
    CHECK(std::filesystem::exists(dir / "A000045.txt"));

    // second fetch is served from the cache, online or not
    const auto again = client.fetch("A000045", false);
    CHECK(again.entries == fib.entries);
    const auto offline_again = client.fetch("A000045", true);
    CHECK(offline_again.entries == fib.entries);
    CHECK(hits == 1);

    // invalid bodies are rejected before anything is cached
    CHECK_THROWS_WITH(client.fetch("A000002", false), "b-file line 2: malformed entry");
    CHECK_FALSE(std::filesystem::exists(dir / "A000002.txt"));

    server.stop();
    worker.join();
}

TEST_CASE("unreachable hosts surface as unavailable", "[oeis]") {
    OeisClient client(OeisConfig{"127.0.0.1", 1, false, fresh_cache_dir("dead")});
    CHECK_THROWS_WITH(client.fetch("A000001", false),
                      Catch::Matchers::StartsWith("unavailable"));
}

TEST_CASE("cache directory resolution honors the environment", "[oeis]") {
    const char* saved = std::getenv("INVSEQ_LAB_CACHE");
    const std::string restore = saved ? saved : "";

    setenv("INVSEQ_LAB_CACHE", "/tmp/invseq-cache-env-test", 1);
    CHECK(default_cache_dir() == std::filesystem::path("/tmp/invseq-cache-env-test"));

    unsetenv("INVSEQ_LAB_CACHE");
    setenv("XDG_CACHE_HOME", "/tmp/xdg-test", 1);
    CHECK(default_cache_dir() == std::filesystem::path("/tmp/xdg-test") / "invseq-lab");
    unsetenv("XDG_CACHE_HOME");

    if (saved) setenv("INVSEQ_LAB_CACHE", restore.c_str(), 1);
}
