#include "somino/rowconvex.hpp"

#include <map>
#include <stdexcept>

namespace somino::rowconvex {

namespace {

struct DpTable {
    int k;
    std::map<std::pair<int, int>, Int> memo;

    Int f(int l, int n) {
        if (n < 0) return 0;
        if (n == 0) return 1;
        auto it = memo.find({l, n});
        if (it != memo.end()) return it->second;
        Int total = 0;
        for (int i = 1; i <= l + 1; ++i)
            total += Int((l + 2 - i) * k - 1) * f(i, n - i);
        memo.emplace(std::pair{l, n}, total);
        return total;
    }
};

void check_args(int l, int k) {
    if (l < 1) throw std::invalid_argument("platform width l must be >= 1");
    if (k < 2) throw std::invalid_argument("block width k must be >= 2");
}

}  // namespace

Int f_dp(int l, int n, int k) {
    check_args(l, k);
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    DpTable t{k, {}};
    return t.f(l, n);
}

Int g_dp(int n, int k) {
    check_args(1, k);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    DpTable t{k, {}};
    Int total = 0;
    for (int l = 1; l <= n; ++l) total += t.f(l, n - l);
    return total;
}

Series h_series(int j, int k, int order) {
    Series m = Series::monomial(Rat(1), j * (j + 1), order);
    return m * qpoch(Rat(1 - k), 1, j, order);
}

namespace {

// Shared shape of the A/B sums: z^{lj} h_j / (z;z)_j^2 * weight(j).  The
// j-sum stops once the term valuation j(j+1) + lj reaches the truncation
// order.
Series basis_sum(int l, int k, int order,
                 const std::function<Series(int)>& weight) {
    Series total(order);
    for (int j = 0; j * (j + 1) + l * j < order; ++j) {
        Series term = Series::monomial(Rat(1), l * j, order) * h_series(j, k, order);
        Series poch = qpoch(Rat(1), 1, j, order);
        Series denom = (poch * poch).inverse();
        total += term * denom * weight(j);
    }
    return total;
}

}  // namespace

Series a_series(int l, int k, int order) {
    check_args(l, k);
    return basis_sum(l, k, order,
                     [&](int) { return Series::constant(Rat(1), order); });
}

Series b_series(int l, int k, int order) {
    check_args(l, k);
    return basis_sum(l, k, order, [&](int j) {
        Series inner = Series::constant(Rat(l), order);
        for (int m = 1; m <= j; ++m) {
            Series one_minus = Series::constant(Rat(1), order) -
                               Series::monomial(Rat(1), m, order);
            Series one_plus = Series::constant(Rat(1), order) +
                              Series::monomial(Rat(k - 1), m, order);
            inner += Series::constant(Rat(1), order) +
                     Rat(2) * one_minus.inverse() - one_plus.inverse();
        }
        return inner;
    });
}

Series f_series(int l, int k, int order) {
    check_args(l, k);
    std::map<int, Series> A, B;
    for (int s : {1, 2, 3, l}) {
        A.emplace(s, a_series(s, k, order));
        B.emplace(s, b_series(s, k, order));
    }
    auto T = [&](int s, int t) { return A.at(s) * B.at(t) - A.at(t) * B.at(s); };

    const Series one = Series::constant(Rat(1), order);
    auto mono = [&](const Rat& c, int p) { return Series::monomial(c, p, order); };

    Series num = (one + mono(Rat(k), 1)) * T(1, l) +
                 (mono(Rat(k), 2) - one) * T(2, l) +
                 mono(Rat(k - 1), 3) * T(3, l);
    Series den = (one - mono(Rat(2 * k - 1), 1) - mono(Rat(2 * k - 1), 2) +
                  mono(Rat(k) * Rat(k), 3)) *
                     T(1, 2) +
                 (mono(Rat((2 * k - 1) * (k - 1)), 4) - mono(Rat(k - 1), 3)) * T(1, 3) +
                 mono(Rat(k - 1) * Rat(k - 1), 5) * T(2, 3);
    Series F = num * den.inverse();

    DpTable dp{k, {}};
    for (int n = 0; n < order; ++n) {
        if (!is_integer(F[n]))
            throw std::logic_error("f_series: non-integral coefficient");
        if (numerator(F[n]) != dp.f(l, n))
            throw std::logic_error("f_series: coefficient differs from the recurrence");
    }
    return F;
}

Series g_series(int k, int order) {
    check_args(1, k);
    Series G(order);
    for (int l = 1; l < order; ++l)
        G += Series::monomial(Rat(1), l, order) * f_series(l, k, order);
    DpTable dp{k, {}};
    for (int n = 1; n < order; ++n) {
        Int want = 0;
        for (int l = 1; l <= n; ++l) want += dp.f(l, n - l);
        if (!is_integer(G[n]) || numerator(G[n]) != want)
            throw std::logic_error("g_series: coefficient differs from the recurrence");
    }
    return G;
}

ResidualReport check_solution(const std::function<Series(int)>& X, int k, int order,
                              int l_min, int l_max) {
    ResidualReport report;
    for (int l = l_min; l <= l_max; ++l) {
        Series r = X(l + 2) - Rat(2) * X(l + 1) + X(l) -
                   Series::monomial(Rat(1), l + 2, order) * X(l + 2) -
                   Series::monomial(Rat(k - 1), l + 3, order) * X(l + 3);
        if (!r.is_zero()) report.all_zero = false;
        report.residuals.emplace_back(l, std::move(r));
    }
    return report;
}

ResidualReport check_boundary(const std::function<Series(int)>& X, int k, int order) {
    const Series one = Series::constant(Rat(1), order);
    auto mono = [&](const Rat& c, int p) { return Series::monomial(c, p, order); };
    ResidualReport report;
    Series r1 = X(1) - one - mono(Rat(2 * k - 1), 1) * X(1) - mono(Rat(k - 1), 2) * X(2);
    Series r2 = X(2) - one - mono(Rat(3 * k - 1), 1) * X(1) - mono(Rat(2 * k - 1), 2) * X(2) -
                mono(Rat(k - 1), 3) * X(3);
    if (!r1.is_zero() || !r2.is_zero()) report.all_zero = false;
    report.residuals.emplace_back(1, std::move(r1));
    report.residuals.emplace_back(2, std::move(r2));
    return report;
}

}  // namespace somino::rowconvex
