#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "somino/dyck.hpp"
#include "somino/enumerate.hpp"
#include "somino/exact.hpp"

using namespace somino;

TEST_CASE("alphabet specs") {
    const HnSpec s({{2, 1}, {1, 3}});
    CHECK(s.zeros() == 5);
    CHECK(s.up_letters() == 3);
    CHECK(s.length() == 8);
    CHECK(s.has_letter(1));
    CHECK(s.has_letter(3));
    CHECK(!s.has_letter(2));

    CHECK_THROWS_AS(HnSpec(std::vector<std::pair<int, int>>{}), std::invalid_argument);
    CHECK_THROWS_AS(HnSpec({{1, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(HnSpec({{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(HnSpec({{1, 0}}), std::invalid_argument);
}

TEST_CASE("path validation") {
    const HnSpec s({{2, 1}});
    CHECK(validate_path({s, {1, 0, 1, 0}}).ok);
    CHECK(validate_path({s, {1, 1, 0, 0}}).ok);
    CHECK(!validate_path({s, {0, 1, 1, 0}}).ok);  // dips below zero
    CHECK(!validate_path({s, {1, 0, 1}}).ok);     // missing a zero
    CHECK(!validate_path({s, {1, 0, 2, 0}}).ok);  // letter outside the alphabet
    CHECK(!validate_path({s, {1, 1, 1, 0}}).ok);  // wrong multiset
}

TEST_CASE("block ordering") {
    const WidthList S({2});
    const Tower single(S, {{0, 0, 2}});
    CHECK(order_blocks(single) == std::vector<Block>{{0, 0, 2}});

    const Tower stacked(S, {{0, 0, 2}, {1, 0, 2}});
    CHECK(order_blocks(stacked) == std::vector<Block>{{0, 0, 2}, {1, 0, 2}});

    // not in U: two bottom blocks
    CHECK_THROWS_AS(order_blocks(Tower(S, {{0, 0, 2}, {0, 2, 2}})), std::invalid_argument);
}

TEST_CASE("domino words") {
    const WidthList S({2});
    const DyckPath stacked = tower_to_path(Tower(S, {{0, 0, 2}, {1, 0, 2}}));
    CHECK(stacked.word == std::vector<int>{1, 0, 1, 0});
    const DyckPath shifted = tower_to_path(Tower(S, {{0, 0, 2}, {1, 1, 2}}));
    CHECK(shifted.word == std::vector<int>{1, 1, 0, 0});

    CHECK(path_to_tower(stacked) == Tower(S, {{0, 0, 2}, {1, 0, 2}}));
    CHECK(path_to_tower(shifted) == Tower(S, {{0, 0, 2}, {1, 1, 2}}));
}

TEST_CASE("widths below two are rejected") {
    const Tower t(WidthList({1, 2}), {{0, 0, 1}, {1, 0, 2}});
    CHECK_THROWS_AS(tower_to_path(t), std::invalid_argument);
}

TEST_CASE("the eight-block staircase") {
    const WidthList S({2, 3, 4});
    const std::vector<Block> order = {{0, 0, 3}, {1, 2, 4}, {2, 4, 3}, {3, 5, 3},
                                      {2, 1, 3}, {4, 3, 3}, {3, 0, 2}, {5, 1, 4}};
    const Tower t(S, order);
    CHECK(order_blocks(t) == order);

    const DyckPath p = tower_to_path(t);
    CHECK(p.word == std::vector<int>{2, 3, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 2,
                                     2, 0, 0, 0, 0, 0, 1, 3, 0, 0, 0, 0});
    CHECK(validate_path(p).ok);
    CHECK(path_to_tower(p, S) == t);
}

TEST_CASE("invalid paths are rejected by the inverse map") {
    const HnSpec s({{2, 1}});
    CHECK_THROWS_AS(path_to_tower(DyckPath{s, {0, 1, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(path_to_tower(DyckPath{s, {1, 1, 1, 0}}), std::invalid_argument);
}

TEST_CASE("round trip over an enumerated class") {
    const WidthList S({2, 3});
    for (const std::vector<int>& nvec : {std::vector<int>{2, 1}, {1, 2}, {3, 0}}) {
        Int count = 0;
        for_each_tower({S, nvec, ClassSpec::u(), false, 8}, [&](const Tower& t) {
            ++count;
            const DyckPath p = tower_to_path(t);
            CHECK(validate_path(p).ok);
            CHECK(path_to_tower(p, S) == t);
        });
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < S.size(); ++i)
            if (nvec[i] > 0) pairs.emplace_back(nvec[i], S[i] - 1);
        CHECK(count == count_dyck(HnSpec(pairs)));
        CHECK(count == count_u(S, nvec));
    }
}
