#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "somino/series.hpp"

using namespace somino;

namespace {

Series one_plus_z(int order) {
    Series s = Series::constant(Rat(1), order);
    s.set(1, Rat(1));
    return s;
}

Series one_minus_z(int order) {
    Series s = Series::constant(Rat(1), order);
    s.set(1, Rat(-1));
    return s;
}

}  // namespace

TEST_CASE("construction and coefficient access") {
    const Series z3 = Series::monomial(Rat(1), 3, 6);
    CHECK(z3.order() == 6);
    CHECK(z3[3] == 1);
    CHECK(z3[0] == 0);
    CHECK(z3.first_nonzero() == 3);
    CHECK(!z3.is_zero());
    CHECK(Series(4).is_zero());
    CHECK(Series(4).first_nonzero() == -1);
}

TEST_CASE("products truncate and telescope") {
    const int N = 8;
    const Series p = one_plus_z(N) * one_minus_z(N);
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    CHECK(p[2] == -1);

    Series geo(N);
    for (int i = 0; i < N; ++i) geo.set(i, Rat(1));
    CHECK(geo * one_minus_z(N) == Series::constant(Rat(1), N));

    // mixed orders truncate to the smaller operand
    CHECK((one_plus_z(4) * one_plus_z(9)).order() == 4);
    CHECK((one_plus_z(4) + one_plus_z(9)).order() == 4);
}

TEST_CASE("inverses") {
    const int N = 10;
    Series geo(N);
    for (int i = 0; i < N; ++i) geo.set(i, Rat(1));
    CHECK(one_minus_z(N).inverse() == geo);
    CHECK(Series::constant(Rat(2), N).inverse() == Series::constant(Rat(1, 2), N));

    // 1 + (k-1)z with k = 2 inverts to alternating signs
    const Series inv = one_plus_z(N).inverse();
    for (int i = 0; i < N; ++i) CHECK(inv[i] == Rat(i % 2 == 0 ? 1 : -1));

    Series s = one_plus_z(N);
    CHECK(s * s.inverse() == Series::constant(Rat(1), N));
    CHECK(s.inverse() * s == Series::constant(Rat(1), N));

    CHECK_THROWS_AS(Series::monomial(Rat(1), 1, 4).inverse(), std::invalid_argument);
}

TEST_CASE("q-Pochhammer products") {
    const int N = 8;
    CHECK(qpoch(Rat(1), 1, 0, N) == Series::constant(Rat(1), N));

    // (z;z)_2 = (1-z)(1-z^2)
    const Series p2 = qpoch(Rat(1), 1, 2, N);
    CHECK(p2[0] == 1);
    CHECK(p2[1] == -1);
    CHECK(p2[2] == -1);
    CHECK(p2[3] == 1);
    for (int i = 4; i < N; ++i) CHECK(p2[i] == 0);

    // ((1-k)z;z)_1 with k = 2 is 1 + z
    CHECK(qpoch(Rat(-1), 1, 1, N) == one_plus_z(N));

    for (int j = 0; j < 4; ++j) {
        const Series step = Series::constant(Rat(1), N) - Series::monomial(Rat(1), 1 + j, N);
        CHECK(qpoch(Rat(1), 1, j + 1, N) == qpoch(Rat(1), 1, j, N) * step);
    }
}

TEST_CASE("truncation") {
    Series s(6);
    for (int i = 0; i < 6; ++i) s.set(i, Rat(i));
    const Series t = s.truncated(3);
    CHECK(t.order() == 3);
    CHECK(t[2] == 2);
}
