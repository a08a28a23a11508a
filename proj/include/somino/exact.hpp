#pragma once

#include <vector>

#include "somino/dyck.hpp"
#include "somino/tower.hpp"
#include "somino/types.hpp"

namespace somino {

// C(top, k); zero when k < 0 or k > top.  top must be nonnegative.
Int binomial(const Int& top, const Int& k);

// n! / prod(parts[i]!); parts nonnegative and summing to n.
Int multinomial(const Int& n, const std::vector<Int>& parts);

// Terminating Gauss series: b must be a nonpositive integer, the sum runs
// j = 0..-b.  Throws if a pole of (c)_j is hit before termination.
Rat hyp2f1_terminating(const Rat& a, const Int& b, const Rat& c, const Rat& z);

// Towers with nvec[i] blocks of width widths[i] whose convex bottom row has
// exactly b blocks:  multinomial(n; nvec) * C(sum s_i n_i - 1, n - b).
Int count_wb(const WidthList& widths, const std::vector<int>& nvec, int b);

// All towers regardless of bottom-row length: sum of count_wb over b.
Int count_total_sum(const WidthList& widths, const std::vector<int>& nvec);

// Same number through the closed hypergeometric form
//   multinomial(n; nvec) * C(sum s_i n_i - 1, n - 1) * 2F1(1, 1-n; 1+sum (s_i-1)n_i; -1).
Int count_total_hyp(const WidthList& widths, const std::vector<int>& nvec);

// Computes both routes and checks they agree.
Int count_total(const WidthList& widths, const std::vector<int>& nvec);

// Towers in U: (1/n) * multinomial(n; nvec) * C(sum s_i n_i, n - 1).
Int count_u(const WidthList& widths, const std::vector<int>& nvec);

// Number of valid paths for an alphabet spec (cycle-lemma count):
//   multinomial(T + L; [L, t_1, ..., t_m]) / (1 + L)
// with L = sum t_i l_i and T = sum t_i.
Int count_dyck(const HnSpec& spec);

}  // namespace somino
