#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "somino/dyck.hpp"
#include "somino/exact.hpp"

using namespace somino;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(Int("1000"), 2) == Int("499500"));
}

TEST_CASE("multinomial coefficients") {
    CHECK(multinomial(2, {1, 1}) == 2);
    CHECK(multinomial(7, {7}) == 1);
    CHECK(multinomial(4, {2, 2}) == 6);
    CHECK(multinomial(6, {1, 2, 3}) == 60);
    CHECK_THROWS_AS(multinomial(5, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(multinomial(4, {-1, 5}), std::invalid_argument);
}

TEST_CASE("bottom-row counts") {
    const WidthList dominoes({2});
    CHECK(count_wb(dominoes, {2}, 1) == 3);
    CHECK(count_wb(dominoes, {2}, 2) == 1);
    CHECK(count_wb(WidthList({1, 2}), {1, 1}, 1) == 4);
    CHECK_THROWS_AS(count_wb(dominoes, {2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_wb(dominoes, {2}, 3), std::invalid_argument);
}

TEST_CASE("totals: both closed forms, domino powers of four") {
    const WidthList dominoes({2});
    Int want = 1;
    for (int n = 1; n <= 8; ++n) {
        CHECK(count_total(dominoes, {n}) == want);
        want *= 4;
    }
    const WidthList S({3});
    CHECK(count_total_sum(S, {2}) == count_total_hyp(S, {2}));
    const WidthList T({2, 3});
    CHECK(count_total_sum(T, {2, 1}) == count_total_hyp(T, {2, 1}));
}

TEST_CASE("terminating hypergeometric sums") {
    CHECK(hyp2f1_terminating(Rat(1), 0, Rat(5), Rat(-1)) == 1);
    for (int c = 1; c <= 6; ++c)
        CHECK(hyp2f1_terminating(Rat(1), -1, Rat(c), Rat(-1)) == Rat(c + 1, c));
    // the n = 2 domino total: 1 * C(3,1) * 2F1(1,-1;3;-1) = 4
    const Rat h = hyp2f1_terminating(Rat(1), -1, Rat(3), Rat(-1));
    CHECK(h == Rat(4, 3));
    CHECK(Rat(binomial(3, 1)) * h == 4);
    CHECK_THROWS_AS(hyp2f1_terminating(Rat(1), -3, Rat(-2), Rat(-1)), std::invalid_argument);
}

TEST_CASE("one-block-bottom counts") {
    const WidthList dominoes({2});
    CHECK(count_u(dominoes, {1}) == 1);
    CHECK(count_u(dominoes, {2}) == 2);
    CHECK(count_u(dominoes, {3}) == 5);
    CHECK(count_u(WidthList({2, 3}), {1, 1}) == 5);
}

TEST_CASE("path counts") {
    CHECK(count_dyck(HnSpec({{2, 1}})) == 2);
    for (int l = 1; l <= 4; ++l) CHECK(count_dyck(HnSpec({{1, l}})) == 1);
    CHECK(count_dyck(HnSpec({{1, 1}, {1, 2}})) == count_u(WidthList({2, 3}), {1, 1}));
    // Catalan numbers from the single-letter spec
    CHECK(count_dyck(HnSpec({{4, 1}})) == 14);
    CHECK(count_dyck(HnSpec({{5, 1}})) == 42);
}
