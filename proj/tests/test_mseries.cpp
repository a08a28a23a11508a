#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "somino/exact.hpp"
#include "somino/mseries.hpp"

using namespace somino;

TEST_CASE("multivariate ring basics") {
    const int N = 6;
    const MSeries one = MSeries::constant(Rat(1), 1, N);
    const MSeries y = MSeries::variable(0, 1, N);
    const MSeries p = (one + y) * (one - y);
    CHECK(p.coefficient({0}) == 1);
    CHECK(p.coefficient({1}) == 0);
    CHECK(p.coefficient({2}) == -1);

    CHECK((one + y).pow(0) == one);
    CHECK((one + y).pow(3).coefficient({2}) == 3);

    CHECK((one - y).inverse() * (one - y) == one);
    CHECK_THROWS_AS(y.inverse(), std::invalid_argument);

    // truncation by total degree
    const MSeries y2 = MSeries::variable(0, 2, 3) + MSeries::variable(1, 2, 3);
    CHECK(y2.pow(3).coefficient({2, 1}) == 3);
    CHECK(y2.pow(2).truncated(1).is_zero());
    CHECK(!y2.pow(2).truncated(2).is_zero());
    CHECK((y2 * y2 * y2 * y2).is_zero());  // all terms exceed degree 3
}

TEST_CASE("the domino fixed point gives Catalan numbers") {
    const MSeries u = gf::solve_u(WidthList({2}), 6);
    CHECK(u.coefficient({0}) == 0);
    CHECK(u.coefficient({1}) == 1);
    CHECK(u.coefficient({2}) == 2);
    CHECK(u.coefficient({3}) == 5);
    CHECK(u.coefficient({4}) == 14);
    CHECK(u.coefficient({5}) == 42);
}

TEST_CASE("platform series for dominoes") {
    const MSeries v1 = gf::v1_series(WidthList({2}), 8);
    CHECK(v1.coefficient({0}) == 1);
    CHECK(v1.coefficient({1}) == 2);
    CHECK(v1.coefficient({2}) == 6);
    // central binomial coefficients
    CHECK(v1.coefficient({3}) == 20);
    CHECK(v1.coefficient({4}) == 70);
    CHECK(v1.coefficient({8}) == 12870);

    const MSeries h1 = gf::h_series(WidthList({2}), 1, 6);
    CHECK(h1.coefficient({0}) == 1);
    CHECK(h1.coefficient({2}) == 2);
}

TEST_CASE("bottom-row series match the closed form") {
    const MSeries w1 = gf::w_series(WidthList({2}), 1, 8);
    const Int expect[] = {1, 3, 10, 35, 126, 462, 1716, 6435};
    for (int n = 1; n <= 8; ++n) CHECK(w1.coefficient({n}) == Rat(expect[n - 1]));

    const MSeries w2 = gf::w_series(WidthList({2}), 2, 6);
    CHECK(w2.coefficient({2}) == 1);
    CHECK(w2.coefficient({1}) == 0);

    const MSeries mixed = gf::w_series(WidthList({2, 3}), 1, 4);
    CHECK(mixed.coefficient({1, 1}) == Rat(count_wb(WidthList({2, 3}), {1, 1}, 1)));
}

TEST_CASE("euler operator") {
    const int N = 5;
    const MSeries one = MSeries::constant(Rat(1), 1, N);
    const MSeries y = MSeries::variable(0, 1, N);
    CHECK(gf::euler(one).is_zero());
    CHECK(gf::euler(y) == y);
    const MSeries f = one + y + y.pow(3);
    CHECK(gf::euler(f).coefficient({3}) == 3);
}

TEST_CASE("substitution transforms") {
    const int N = 6;
    // sum 3^{n-1} y^n unrestricts to sum 4^{n-1} y^n
    MSeries restricted(1, N);
    Int p3 = 1;
    for (int n = 1; n <= N; ++n) {
        restricted.set({n}, Rat(p3));
        p3 *= 3;
    }
    const MSeries total = gf::unrestricting_transform(restricted);
    Int p4 = 1;
    for (int n = 1; n <= N; ++n) {
        CHECK(total.coefficient({n}) == Rat(p4));
        p4 *= 4;
    }
    CHECK(gf::restricted_transform(total) == restricted);

    // restricted domino totals at degree 3
    const MSeries r = gf::restricted_transform(gf::total_series(WidthList({2}), 4));
    CHECK(r.coefficient({3}) == 9);

    // replacements must vanish at the origin
    const MSeries one = MSeries::constant(Rat(1), 1, N);
    CHECK_THROWS_AS(gf::substitute(one, {one}), std::invalid_argument);
}

TEST_CASE("total series sums the bottom-row family") {
    const WidthList S({2});
    const MSeries total = gf::total_series(S, 6);
    MSeries sum(1, 6);
    for (int b = 1; b <= 6; ++b) sum += gf::w_series(S, b, 6);
    CHECK(total == sum);
    Int p4 = 1;
    for (int n = 1; n <= 6; ++n) {
        CHECK(total.coefficient({n}) == Rat(p4));
        p4 *= 4;
    }
}
