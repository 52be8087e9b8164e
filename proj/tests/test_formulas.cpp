#include <invseq_lab/formulas.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace invseq_lab;

TEST_CASE("binomial coefficients cover the degenerate cases", "[formulas]") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(5, 5) == 1);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom(52, 26) == Int("495918532948104"));
}

TEST_CASE("b has support m+1 <= n <= 2m plus the empty case", "[formulas]") {
    CHECK(b_closed(0, 0) == 1);
    CHECK(b_closed(1, 0) == 0);
    CHECK(b_closed(0, 1) == 0);
    CHECK(b_closed(1, 1) == 0);
    CHECK(b_closed(2, 1) == 1);
    CHECK(b_closed(3, 1) == 0);
    CHECK(b_closed(3, 2) == 1);
    CHECK(b_closed(4, 2) == 3);
    CHECK(b_closed(6, 3) == 13);

    for (long long m = 1; m <= 9; ++m) {
        CHECK(b_closed(m, m) == 0);
        CHECK(b_closed(2 * m + 1, m) == 0);
        CHECK(b_closed(m + 1, m) == 1);
        for (long long n = m + 1; n <= 2 * m; ++n) CHECK(b_closed(n, m) > 0);
    }
}

TEST_CASE("row sums of b give the Fuss-Catalan numbers", "[formulas]") {
    for (long long m = 0; m <= 12; ++m) {
        Int sum = 0;
        for (long long n = m; n <= 2 * m; ++n) sum += b_closed(n, m);
        if (m == 0) sum = b_closed(0, 0);
        CHECK(sum == fuss3(m));
    }
}

TEST_CASE("dist counts match the published values", "[formulas]") {
    CHECK(count_dist_closed(2, 2) == 1);
    CHECK(count_dist_closed(5, 3) == 23);
    CHECK(count_dist_closed(6, 4) == 76);
    CHECK(count_dist_closed(8, 5) == 630);
    CHECK(count_dist_closed(9, 7) == 749);
    CHECK(count_dist_closed(16, 8) == 135439);
    CHECK(count_dist_closed(5, 1) == 0);
    CHECK_THROWS_AS(count_dist_closed(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_dist_closed(1, 0), std::invalid_argument);
}

TEST_CASE("Fuss-Catalan values and domain", "[formulas]") {
    const long long expect[] = {1, 1, 4, 22, 140, 969, 7084};
    for (long long m = 0; m < 7; ++m) CHECK(fuss3(m) == expect[m]);
    CHECK(fuss3(20) == Int("57956002331347120"));
    CHECK_THROWS_AS(fuss3(-1), std::invalid_argument);
}

TEST_CASE("dist-rank counts: domain, corners, and the two closed forms", "[formulas]") {
    CHECK(dist_rank_count(3, 0) == 22);
    CHECK(dist_rank_count(2, 0) == 4);
    CHECK(dist_rank_count(2, 1) == 4);
    CHECK(dist_rank_count(2, 2) == 1);
    CHECK_THROWS_AS(dist_rank_count(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(dist_rank_count(2, -1), std::invalid_argument);

    for (long long m = 0; m <= 20; ++m) {
        CHECK(dist_rank_count(m, m) == 1);
        CHECK(dist_rank_count(m, 0) == fuss3(m));
        Int sum = 0;
        for (long long t = 0; t <= m; ++t) {
            CHECK(dist_rank_count(m, t) == dist_rank_count_lagrange(m, t));
            sum += dist_rank_count(m, t);
        }
        CHECK(sum == dist_total(m));
    }
}

TEST_CASE("dist totals match the grid column sums", "[formulas]") {
    const long long expect[] = {1, 2, 9, 52, 340, 2394, 17710, 135720, 1068012};
    for (long long m = 0; m < 9; ++m) CHECK(dist_total(m) == expect[m]);
    CHECK_THROWS_AS(dist_total(-1), std::invalid_argument);
}
