#include <invseq_lab/formulas.hpp>
#include <invseq_lab/invseq.hpp>
#include <invseq_lab/lattice.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

using namespace invseq_lab;

TEST_CASE("step classification", "[lattice]") {
    CHECK(classify(0, 1) == StepClass::north);
    CHECK(classify(2, 1) == StepClass::up);
    CHECK(classify(1, 0) == StepClass::down);
    CHECK(classify(3, -2) == StepClass::down);
    CHECK(classify(0, -1) == StepClass::south);
    CHECK_THROWS_AS(classify(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(classify(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(classify(1, 2), std::invalid_argument);
}

TEST_CASE("labeled path shape rules", "[lattice]") {
    CHECK_NOTHROW(validate_step_shapes(LabeledFPath{{FStep{0, 1, {1}}}}));
    CHECK_NOTHROW(validate_step_shapes(LabeledFPath{{FStep{1, -3, {-1, 0, 0, -1, -1}}}}));
    CHECK_THROWS_WITH(validate_step_shapes(LabeledFPath{{FStep{2, 1, {0}}}}),
                      "labeled path, step 1: a rise step must carry the label (1)");
    // label entries must be nonpositive and sum to the drop
    CHECK_THROWS_AS(validate_step_shapes(LabeledFPath{{FStep{1, -2, {-1, 0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_step_shapes(LabeledFPath{{FStep{1, 0, {1, -1}}}}),
                    std::invalid_argument);
}

TEST_CASE("walk shape rules", "[lattice]") {
    CHECK_NOTHROW(validate_step_shapes(WeightedHWalk{{WStep{1, 1, 1}, WStep{0, -1, 2}}}));
    CHECK_THROWS_WITH(validate_step_shapes(WeightedHWalk{{WStep{0, -1, 1}}}),
                      "walk, step 1: a walk cannot start with a south step");
    CHECK_THROWS_WITH(
        validate_step_shapes(WeightedHWalk{{WStep{0, 1, 1}, WStep{0, -1, 1}}}),
        "walk, step 2: a south step cannot follow a north step");
    CHECK_THROWS_AS(validate_step_shapes(WeightedHWalk{{WStep{1, 1, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_step_shapes(WeightedHWalk{{WStep{1, 1, 1}, WStep{0, -2, 0}}}),
                    std::invalid_argument);
}

TEST_CASE("geometry is a separate tier from shape", "[lattice]") {
    // shape-valid but dips below the diagonal immediately
    const LabeledFPath flat{{FStep{1, 0, {0, 0, 0}}}};
    CHECK_NOTHROW(validate_step_shapes(flat));
    CHECK_THROWS_WITH(validate(flat), "path dips below the diagonal after step 1");

    const WeightedHWalk ok{{WStep{0, 1, 1}, WStep{1, 1, 1}}};
    CHECK_NOTHROW(validate(ok));

    const SimpleHPath doubled{WeightedHWalk{{WStep{0, 1, 1}, WStep{0, 1, 1}}}};
    CHECK_THROWS_WITH(validate(doubled), "simple path, step 2: two vertical steps in a row");
}

TEST_CASE("semilength, height, and ud", "[lattice]") {
    const LabeledFPath q{{FStep{0, 1, {1}}, FStep{1, -3, {-1, 0, 0, -1, -1}}}};
    CHECK(semilength(q) == 6);
    CHECK(height(q) == -3);

    const WeightedHWalk r{{WStep{1, 1, 1}, WStep{0, -1, 2}}};
    CHECK(semilength(r) == 3);
    CHECK(height(r) == -1);
    CHECK(ud_count(r) == 1);

    const SimpleHPath p{WeightedHWalk{{WStep{0, 1, 1}, WStep{1, 0, 1}}}};
    const auto s = path_stats(p);
    CHECK(s.semilength == 2);
    CHECK(s.height == 0);
    CHECK(s.ud == 1);
}

TEST_CASE("simple paths of semilength two in generation order", "[lattice]") {
    const auto simple = all_simple_paths(2);
    REQUIRE(simple.size() == 5);
    const std::vector<WeightedHWalk> expect{
        WeightedHWalk{{WStep{0, 1, 1}, WStep{1, 0, 1}}},
        WeightedHWalk{{WStep{0, 1, 1}, WStep{1, 1, 1}}},
        WeightedHWalk{{WStep{0, 1, 1}, WStep{2, 1, 1}}},
        WeightedHWalk{{WStep{1, 1, 1}, WStep{0, 1, 1}}},
        WeightedHWalk{{WStep{1, 1, 1}, WStep{1, 1, 1}}},
    };
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(simple[i].underlying == expect[i]);
}

TEST_CASE("path family sizes", "[lattice]") {
    const std::vector<std::size_t> simple_expect{1, 2, 5, 14, 40, 121, 373, 1181, 3796, 12391};
    for (int n = 0; n <= 9; ++n) {
        CHECK(all_simple_paths(n).size() == simple_expect[static_cast<std::size_t>(n)]);
    }
    const std::vector<std::size_t> labeled_expect{1, 2, 6, 22, 89, 381, 1694};
    for (int n = 0; n <= 6; ++n) {
        CHECK(all_labeled_paths(n).size() == labeled_expect[static_cast<std::size_t>(n)]);
    }
    CHECK(all_weighted_walks(2).size() == 6);
}

TEST_CASE("filters narrow the enumeration", "[lattice]") {
    std::map<int, std::size_t> by_height;
    for (const auto& r : all_weighted_walks(2)) ++by_height[height(r)];
    const std::map<int, std::size_t> expect_heights{{0, 3}, {1, 2}, {2, 1}};
    CHECK(by_height == expect_heights);

    PathFilter h1;
    h1.height = 1;
    CHECK(all_weighted_walks(2, h1).size() == 2);

    PathFilter ud1;
    ud1.ud = 1;
    CHECK(all_simple_paths(2, ud1).size() == 4);
    CHECK_THROWS_WITH(all_weighted_walks(2, ud1), "ud filter applies to simple paths only");
    CHECK_THROWS_AS(all_labeled_paths(2, ud1), std::invalid_argument);

    PathFilter clsB;
    clsB.cls = PathClass::B;
    std::map<int, Int> b_counts;
    for (const auto& p : all_simple_paths(4, clsB)) b_counts[path_stats(p).ud] += 1;
    const std::map<int, Int> expect_b{{2, 3}, {3, 1}};
    CHECK(b_counts == expect_b);
    CHECK(b_counts[2] == b_closed(4, 2));
    CHECK(b_counts[3] == b_closed(4, 3));
}

TEST_CASE("class membership", "[lattice]") {
    const WeightedHWalk up_up{{WStep{1, 1, 1}, WStep{1, 1, 1}}};
    CHECK(matches_class(up_up, PathClass::A));
    CHECK(matches_class(up_up, PathClass::D));
    CHECK_FALSE(matches_class(up_up, PathClass::B));

    const WeightedHWalk to_north{{WStep{1, 1, 1}, WStep{0, 1, 1}}};
    CHECK_FALSE(matches_class(to_north, PathClass::A));
    CHECK(matches_class(to_north, PathClass::B));

    const WeightedHWalk empty{};
    CHECK_FALSE(matches_class(empty, PathClass::A));
    CHECK(matches_class(empty, PathClass::D));
    CHECK(matches_class(empty, PathClass::B));
}

TEST_CASE("eta on the worked examples", "[lattice][eta]") {
    const LabeledFPath flat{{FStep{1, 0, {0, 0, 0}}}};
    const WeightedHWalk flat_image{{WStep{1, 1, 1}, WStep{0, -1, 2}}};
    CHECK(eta(flat) == flat_image);
    CHECK(eta_inv(flat_image) == flat);

    const LabeledFPath drop{{FStep{1, -3, {-1, 0, 0, -1, -1}}}};
    const WeightedHWalk drop_image{{WStep{1, 0, 1}, WStep{0, -1, 1}, WStep{0, -2, 3}}};
    CHECK(eta(drop) == drop_image);
    CHECK(eta_inv(drop_image) == drop);

    const LabeledFPath rise{{FStep{0, 1, {1}}}};
    const WeightedHWalk rise_image{{WStep{0, 1, 1}}};
    CHECK(eta(rise) == rise_image);
}

// eta_inv is checked as a left inverse on every path, so distinct sources
// keep distinct images; equal family sizes then make eta a bijection.
TEST_CASE("eta is a semilength- and height-preserving bijection", "[lattice][eta]") {
    for (int n = 0; n <= 4; ++n) {
        std::size_t paths = 0;
        for (const auto& q : all_labeled_paths(n)) {
            ++paths;
            const auto r = eta(q);
            CHECK(semilength(r) == n);
            CHECK(height(r) == height(q));
            CHECK_NOTHROW(validate(r));
            CHECK(eta_inv(r) == q);
        }
        CHECK(paths == all_weighted_walks(n).size());
    }
}
