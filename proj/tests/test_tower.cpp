#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "somino/tower.hpp"

using namespace somino;

namespace {

// the nine-domino brick wall (restricted) and its unrestricted counterpart
Tower brick_wall() {
    return Tower(WidthList({2}), {{0, 0, 2},
                                  {0, 2, 2},
                                  {1, -1, 2},
                                  {1, 3, 2},
                                  {2, -2, 2},
                                  {2, 2, 2},
                                  {3, 1, 2},
                                  {3, 3, 2},
                                  {4, 2, 2}});
}

Tower stacked_wall() {
    return Tower(WidthList({2}), {{0, 0, 2},
                                  {0, 2, 2},
                                  {1, 0, 2},
                                  {1, 3, 2},
                                  {2, -1, 2},
                                  {2, 2, 2},
                                  {2, 4, 2},
                                  {3, -1, 2},
                                  {3, 2, 2}});
}

}  // namespace

TEST_CASE("width lists validate their input") {
    CHECK_THROWS_AS(WidthList(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(WidthList({0}), std::invalid_argument);
    CHECK_THROWS_AS(WidthList({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(WidthList({-1, 2}), std::invalid_argument);

    const WidthList w({3, 1, 2});
    CHECK(w.size() == 3);
    CHECK(w[0] == 1);  // sorted
    CHECK(w[2] == 3);
    CHECK(w.contains(2));
    CHECK(!w.contains(4));
    CHECK(w.index_of(3) == 2);
    CHECK(w.index_of(4) == -1);
    CHECK(w.max_width() == 3);
}

TEST_CASE("block geometry helpers") {
    const Block b{1, 2, 3};
    CHECK(b.right() == 5);
    CHECK(b.covers(2));
    CHECK(b.covers(4));
    CHECK(!b.covers(5));
    CHECK(b.shares_column(Block{0, 4, 2}));
    CHECK(!b.shares_column(Block{0, 5, 2}));
}

TEST_CASE("validate accepts a single block and reports violations") {
    const WidthList S({2});
    CHECK(validate(Tower(S, {{0, 0, 2}})).ok());

    const auto overlap = validate(Tower(S, {{0, 0, 2}, {0, 0, 2}}));
    CHECK(overlap.violation == ValidationReport::Violation::overlap);

    const auto support = validate(Tower(S, {{0, 0, 2}, {1, 5, 2}}));
    CHECK(support.violation == ValidationReport::Violation::unsupported);

    const auto anchored = validate(Tower(S, {{0, 1, 2}, {1, 1, 2}}));
    CHECK(anchored.violation == ValidationReport::Violation::not_anchored);
    CHECK(validate_placed(Tower(S, {{0, 1, 2}, {1, 1, 2}})).ok());

    CHECK(validate(Tower(S, {})).violation == ValidationReport::Violation::empty);
    CHECK(validate(Tower(S, {{-1, 0, 2}})).violation == ValidationReport::Violation::bad_block);
    CHECK(validate(Tower(S, {{0, 0, 3}})).violation == ValidationReport::Violation::bad_block);
}

TEST_CASE("tower accessors") {
    const Tower t = brick_wall();
    CHECK(t.block_count() == 9);
    CHECK(t.height() == 5);
    CHECK(t.min_column() == -2);
    CHECK(t.bottom_block_count() == 2);
    CHECK(t.nvec() == std::vector<int>{9});
    CHECK(t.row(1).size() == 2);
    CHECK(t.row(7).empty());
}

TEST_CASE("class membership for the two-domino towers") {
    const WidthList S({2});
    const Tower stacked(S, {{0, 0, 2}, {1, 0, 2}});
    const Tower left(S, {{0, 0, 2}, {1, -1, 2}});
    const Tower right(S, {{0, 0, 2}, {1, 1, 2}});
    const Tower flat(S, {{0, 0, 2}, {0, 2, 2}});

    for (const Tower* t : {&stacked, &left, &right}) {
        CHECK(is_member(*t, ClassSpec::wb(1)));
        CHECK(!is_member(*t, ClassSpec::wb(2)));
    }
    CHECK(is_member(flat, ClassSpec::wb(2)));

    CHECK(is_member(stacked, ClassSpec::u()));
    CHECK(is_member(right, ClassSpec::u()));
    CHECK(!is_member(left, ClassSpec::u()));

    // platform of one column: row-0 block must overlap column 0
    const Tower shifted(S, {{0, -1, 2}, {1, -2, 2}});
    CHECK(is_member(shifted, ClassSpec::vl(1)));
    CHECK(!is_member(shifted, ClassSpec::hl(1)));
    CHECK(is_member(stacked, ClassSpec::hl(1)));
    const Tower off_platform(S, {{0, 1, 2}, {1, 1, 2}});
    CHECK(!is_member(off_platform, ClassSpec::vl(1)));
    CHECK(is_member(off_platform, ClassSpec::vl(2)));

    CHECK_THROWS_AS(is_member(stacked, ClassSpec::wb(0)), std::invalid_argument);
    CHECK_THROWS_AS(is_member(Tower(S, {{0, 0, 2}, {0, 0, 2}}), ClassSpec::u()),
                    std::invalid_argument);
}

TEST_CASE("restriction predicate on the figure towers") {
    CHECK(is_restricted(brick_wall()));
    CHECK(!is_restricted(stacked_wall()));
    CHECK(!is_restricted(Tower(WidthList({2}), {{0, 0, 2}, {1, 0, 2}})));
}

TEST_CASE("row convexity") {
    const WidthList S({2});
    CHECK(is_row_convex(Tower(S, {{0, 0, 2}})));
    CHECK(is_row_convex(Tower(S, {})));
    CHECK(!is_row_convex(Tower(S, {{0, 0, 2}, {0, 3, 2}, {1, 1, 2}})));

    const WidthList W({2, 3, 4});
    const Tower staircase(W, {{0, 0, 3},
                              {1, 2, 4},
                              {2, 4, 3},
                              {3, 5, 3},
                              {2, 1, 3},
                              {4, 3, 3},
                              {3, 0, 2},
                              {5, 1, 4}});
    CHECK(!is_row_convex(staircase));  // row 3 has a gap
}

TEST_CASE("canonicalize shifts and is idempotent") {
    const WidthList S({2});
    const Tower t(S, {{0, 7, 2}, {1, 6, 2}});
    const Tower c = canonicalize(t);
    CHECK(c == Tower(S, {{0, 0, 2}, {1, -1, 2}}));
    CHECK(canonicalize(c) == c);
    CHECK_THROWS_AS(canonicalize(Tower(S, {})), std::invalid_argument);
}

TEST_CASE("collapsing vertical stacks restores restriction") {
    CHECK(collapse_stacks(brick_wall()) == brick_wall());
    const Tower collapsed = collapse_stacks(stacked_wall());
    CHECK(validate_placed(collapsed).ok());
    CHECK(is_restricted(collapsed));
    CHECK(collapsed.block_count() < stacked_wall().block_count());

    const Tower pillar(WidthList({2}), {{0, 0, 2}, {1, 0, 2}, {2, 0, 2}});
    CHECK(collapse_stacks(pillar) == Tower(WidthList({2}), {{0, 0, 2}}));
}

TEST_CASE("class specs parse and print") {
    CHECK(ClassSpec::parse("wb:2").kind == ClassSpec::Kind::wb);
    CHECK(ClassSpec::parse("wb:2").param == 2);
    CHECK(ClassSpec::parse("u").kind == ClassSpec::Kind::u);
    CHECK(ClassSpec::parse("total").kind == ClassSpec::Kind::total);
    CHECK(ClassSpec::parse("all").kind == ClassSpec::Kind::total);
    CHECK(ClassSpec::parse("vl:3").param == 3);
    CHECK(ClassSpec::parse("rowconvex:2").kind == ClassSpec::Kind::rowconvex_platform);
    CHECK(ClassSpec::parse("hl:1").name() == "hl:1");
    CHECK_THROWS_AS(ClassSpec::parse("nonsense"), std::invalid_argument);
}
