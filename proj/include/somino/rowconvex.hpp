#pragma once

#include <functional>
#include <vector>

#include "somino/series.hpp"
#include "somino/types.hpp"

namespace somino::rowconvex {

// Recurrence count of row-convex k-omino towers with n blocks on a platform
// of width l*k:  f_l(n) = sum_{i=1}^{l+1} ((l+2-i)k - 1) f_i(n-i),
// f_l(0) = 1, f_l(n<0) = 0.
Int f_dp(int l, int n, int k);

// Free-standing row-convex towers: g(n) = sum_{l=1}^{n} f_l(n-l).
Int g_dp(int n, int k);

// h_j = z^{j(j+1)} ((1-k)z; z)_j
Series h_series(int j, int k, int order);

// A_l = sum_j z^{lj} h_j / (z;z)_j^2  -- a solution of the platform recurrence.
Series a_series(int l, int k, int order);

// B_l = sum_j z^{lj} h_j/(z;z)_j^2 * (l + sum_{m=1}^j (1 + 2/(1-z^m) - 1/(1+(k-1)z^m)))
Series b_series(int l, int k, int order);

// Basis-combination solution with the boundary conditions built in;
// coefficients are checked against f_dp before returning.
Series f_series(int l, int k, int order);

// G = sum_{l>=1} z^l F_l; coefficients checked against g_dp.
Series g_series(int k, int order);

struct ResidualReport {
    bool all_zero = true;
    std::vector<std::pair<int, Series>> residuals;  // (l, residual series)
};

// Residuals of X(l+2) - 2X(l+1) + X(l) = z^{l+2} X(l+2) + (k-1) z^{l+3} X(l+3)
// for l in [l_min, l_max].
ResidualReport check_solution(const std::function<Series(int)>& X, int k, int order,
                              int l_min, int l_max);

// Residuals of the two boundary equations
//   X_1 = 1 + (2k-1) z X_1 + (k-1) z^2 X_2
//   X_2 = 1 + (3k-1) z X_1 + (2k-1) z^2 X_2 + (k-1) z^3 X_3.
ResidualReport check_boundary(const std::function<Series(int)>& X, int k, int order);

}  // namespace somino::rowconvex
