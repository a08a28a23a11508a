#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "somino/enumerate.hpp"
#include "somino/io.hpp"

using namespace somino;

TEST_CASE("two-domino classes") {
    const WidthList S({2});

    const auto w1 = enumerate_towers({S, {2}, ClassSpec::wb(1), false, 8});
    REQUIRE(w1.size() == 3);
    std::set<std::string> got;
    for (const Tower& t : w1) got.insert(io::tower_key(t));
    std::set<std::string> want;
    for (const Tower& t : {Tower(S, {{0, 0, 2}, {1, -1, 2}}), Tower(S, {{0, 0, 2}, {1, 0, 2}}),
                           Tower(S, {{0, 0, 2}, {1, 1, 2}})})
        want.insert(io::tower_key(t));
    CHECK(got == want);

    CHECK(enumerate_towers({S, {2}, ClassSpec::u(), false, 8}).size() == 2);
    CHECK(enumerate_towers({S, {2}, ClassSpec::vl(1), false, 8}).size() == 6);
    CHECK(enumerate_towers({S, {2}, ClassSpec::hl(1), false, 8}).size() == 2);
    CHECK(enumerate_towers({S, {2}, ClassSpec::total(), false, 8}).size() == 4);
}

TEST_CASE("three dominoes, total and restricted") {
    const WidthList S({2});
    CHECK(count_towers({S, {3}, ClassSpec::total(), false, 8}) == 16);
    CHECK(count_towers({S, {3}, ClassSpec::total(), true, 8}) == 9);
}

TEST_CASE("mixed widths") {
    CHECK(count_towers({WidthList({1, 2}), {1, 1}, ClassSpec::wb(1), false, 8}) == 4);
}

TEST_CASE("emitted towers are valid, canonical, sorted, duplicate-free") {
    const EnumSpec spec{WidthList({2, 3}), {2, 1}, ClassSpec::total(), false, 8};
    const auto towers = enumerate_towers(spec);
    CHECK(Int(towers.size()) == count_towers(spec));
    std::set<std::string> keys;
    std::string prev;
    for (const Tower& t : towers) {
        CHECK(validate(t).ok());
        CHECK(canonicalize(t) == t);
        CHECK(is_member(t, ClassSpec::total()));
        const std::string key = io::tower_key(t);
        CHECK(keys.insert(key).second);
        CHECK(prev < key);
        prev = key;
    }
}

TEST_CASE("platform towers keep their absolute position") {
    const auto vs = enumerate_towers({WidthList({2}), {1}, ClassSpec::vl(1), false, 8});
    REQUIRE(vs.size() == 2);
    std::set<std::string> got;
    for (const Tower& t : vs) got.insert(io::tower_key(t));
    std::set<std::string> want;
    for (const Tower& t :
         {Tower(WidthList({2}), {{0, -1, 2}}), Tower(WidthList({2}), {{0, 0, 2}})})
        want.insert(io::tower_key(t));
    CHECK(got == want);
}

TEST_CASE("input validation") {
    const WidthList S({2});
    CHECK_THROWS_AS(count_towers({S, {1, 2}, ClassSpec::total(), false, 8}),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_towers({S, {0}, ClassSpec::total(), false, 8}),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_towers({S, {-1}, ClassSpec::total(), false, 8}),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_towers({S, {9}, ClassSpec::total(), false, 8}),
                    std::invalid_argument);
}

TEST_CASE("row-convex enumeration") {
    CHECK(enumerate_row_convex(1, 1, 2).size() == 3);
    CHECK(enumerate_row_convex(2, 1, 2).size() == 5);
    CHECK(enumerate_row_convex(3, 0, 2).size() == 1);
    CHECK(enumerate_row_convex(3, 0, 2)[0].empty());
    CHECK(count_row_convex(1, 3, 2) == Int(enumerate_row_convex(1, 3, 2).size()));

    for (const Tower& t : enumerate_row_convex(2, 3, 2)) {
        CHECK(validate_placed(t).ok());
        CHECK(is_row_convex(t));
        CHECK(is_member(t, ClassSpec::rowconvex_platform(2)));
    }

    CHECK_THROWS_AS(enumerate_row_convex(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_row_convex(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_row_convex(1, 9, 2), std::invalid_argument);
}

TEST_CASE("row-convex class through the generic interface") {
    // same family: width-2 blocks over a two-block platform
    const EnumSpec spec{WidthList({2}), {2}, ClassSpec::rowconvex_platform(2), false, 8};
    const auto direct = enumerate_row_convex(2, 2, 2);
    CHECK(Int(direct.size()) == count_towers(spec));
}
