#include "somino/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "somino/dyck.hpp"
#include "somino/enumerate.hpp"
#include "somino/exact.hpp"
#include "somino/io.hpp"
#include "somino/mseries.hpp"
#include "somino/rowconvex.hpp"
#include "somino/series.hpp"
#include "somino/tower.hpp"

namespace somino::checks {

namespace {

const std::vector<WidthList>& width_lists() {
    static const std::vector<WidthList> lists = {WidthList({2}), WidthList({3}),
                                                 WidthList({1, 2}), WidthList({2, 3})};
    return lists;
}

std::string widths_name(const WidthList& w) {
    std::string s = "(";
    for (int i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::string nvec_name(const std::vector<int>& nvec) {
    std::string s = "(";
    for (std::size_t i = 0; i < nvec.size(); ++i) s += (i ? "," : "") + std::to_string(nvec[i]);
    return s + ")";
}

// All exponent vectors with 1 <= sum <= maxsum.
void for_each_nvec(int m, int maxsum, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> v(m, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == m) {
            for (int x : v)
                if (x > 0) { f(v); break; }
            return;
        }
        for (int c = 0; c <= left; ++c) {
            v[i] = c;
            rec(i + 1, left - c);
        }
        v[i] = 0;
    };
    rec(0, maxsum);
}

Int pow_int(int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

struct Failure {
    std::ostringstream msg;
    bool failed = false;

    template <typename... Ts>
    void operator()(const Ts&... parts) {
        if (failed) return;  // keep the first failure only
        failed = true;
        (msg << ... << parts);
    }
};

CheckResult result_of(const Failure& f, const std::string& covered) {
    if (f.failed) return {false, f.msg.str()};
    return {true, covered};
}

// ---------------------------------------------------------------- criterion 1

CheckResult closed_form_vs_enumeration() {
    Failure fail;
    long towers = 0;
    for (const WidthList& S : width_lists()) {
        for_each_nvec(S.size(), 6, [&](const std::vector<int>& nvec) {
            if (fail.failed) return;
            int n = 0;
            for (int c : nvec) n += c;
            std::map<int, Int> buckets;
            EnumSpec spec{S, nvec, ClassSpec::total(), false, 6};
            for_each_tower(spec, [&](const Tower& t) { ++buckets[t.bottom_block_count()]; });
            Int total = 0;
            for (int b = 1; b <= n; ++b) {
                const Int want = count_wb(S, nvec, b);
                const Int got = buckets.count(b) ? buckets[b] : 0;
                towers += static_cast<long>(got);
                total += got;
                if (want != got)
                    fail("S=", widths_name(S), " nvec=", nvec_name(nvec), " b=", b,
                         ": enumerated ", got.str(), ", formula ", want.str());
            }
            if (total != count_total_sum(S, nvec))
                fail("S=", widths_name(S), " nvec=", nvec_name(nvec), ": total mismatch");
            if (count_total_sum(S, nvec) != count_total_hyp(S, nvec))
                fail("S=", widths_name(S), " nvec=", nvec_name(nvec),
                     ": hypergeometric route disagrees with the b-sum");
        });
    }
    return result_of(fail, "4 width lists, sum nvec <= 6, every b; " +
                               std::to_string(towers) + " towers enumerated");
}

// ---------------------------------------------------------------- criterion 2

CheckResult domino_totals() {
    Failure fail;
    const WidthList S({2});
    const MSeries total = gf::total_series(S, 8);
    for (int n = 1; n <= 8; ++n) {
        const Int want = pow_int(4, n - 1);
        if (count_total(S, {n}) != want)
            fail("count_total(S=(2), n=", n, ") != 4^(n-1)");
        const Rat c = total.coefficient({n});
        if (!is_integer(c) || numerator(c) != want)
            fail("[y^", n, "] sum_b W_b != 4^(n-1) for S=(2)");
    }
    return result_of(fail, "count_total and series totals equal 4^(n-1), n <= 8");
}

CheckResult domino_restricted_transform() {
    Failure fail;
    const MSeries restricted = gf::restricted_transform(gf::total_series(WidthList({2}), 8));
    for (int n = 1; n <= 8; ++n) {
        const Rat c = restricted.coefficient({n});
        if (!is_integer(c) || numerator(c) != pow_int(3, n - 1))
            fail("[y^", n, "] restricted transform != 3^(n-1)");
    }
    return result_of(fail, "restricted transform of the domino totals is 3^(n-1), n <= 8");
}

CheckResult domino_restricted_enumeration() {
    Failure fail;
    for (int n = 1; n <= 5; ++n) {
        EnumSpec spec{WidthList({2}), {n}, ClassSpec::total(), true, 8};
        const Int got = count_towers(spec);
        if (got != pow_int(3, n - 1))
            fail("restricted enumeration n=", n, " gives ", got.str(), ", want 3^(n-1)");
    }
    return result_of(fail, "restricted enumeration matches 3^(n-1), n <= 5");
}

// ---------------------------------------------------------------- criterion 3

CheckResult figure_counts() {
    Failure fail;
    const WidthList S({2});
    const std::vector<int> nvec{2};
    auto count_of = [&](ClassSpec cls) {
        EnumSpec spec{S, nvec, cls, false, 8};
        return count_towers(spec);
    };
    struct Want {
        ClassSpec cls;
        int count;
        const char* what;
    } wants[] = {{ClassSpec::wb(1), 3, "W_1"},
                 {ClassSpec::u(), 2, "U"},
                 {ClassSpec::vl(1), 6, "V_1"},
                 {ClassSpec::hl(1), 2, "H_1"}};
    for (const Want& w : wants) {
        const Int got = count_of(w.cls);
        if (got != w.count)
            fail(w.what, " count for two dominoes: got ", got.str(), ", want ", w.count);
    }
    return result_of(fail, "two-domino towers: (W_1, U, V_1, H_1) = (3, 2, 6, 2)");
}

// ---------------------------------------------------------------- criterion 4

constexpr int kGfDeg = 8;

CheckResult gf_fixed_point() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        const int m = S.size();
        const MSeries u = gf::solve_u(S, kGfDeg);
        const MSeries one = MSeries::constant(Rat(1), m, kGfDeg);
        MSeries rhs(m, kGfDeg);
        for (int i = 0; i < m; ++i)
            rhs += MSeries::variable(i, m, kGfDeg) * (one + u).pow(S[i]);
        if (!(u - rhs).is_zero())
            fail("U fixed-point residual nonzero for S=", widths_name(S));
    }
    return result_of(fail, "U = sum_i y_i (1+U)^{s_i} to degree 8, 4 width lists");
}

CheckResult gf_h_recurrence() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        const MSeries one = MSeries::constant(Rat(1), S.size(), kGfDeg);
        const MSeries u = gf::solve_u(S, kGfDeg);
        if (!(gf::h_series(S, 1, kGfDeg) - (one + u)).is_zero())
            fail("H_1 != 1+U for S=", widths_name(S));
        for (int s = 1; s <= 3; ++s) {
            const MSeries lhs = gf::h_series(S, s + 1, kGfDeg);
            const MSeries rhs = gf::h_series(S, s, kGfDeg) * (one + u);
            if (!(lhs - rhs).is_zero())
                fail("H_", s + 1, " != H_", s, "(1+U) for S=", widths_name(S));
        }
    }
    return result_of(fail, "H_{s+1} = H_s (1+U), s <= 3, degree 8, 4 width lists");
}

CheckResult gf_v_decomposition() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        const int m = S.size();
        const MSeries v1 = gf::v1_series(S, kGfDeg);
        MSeries rhs = MSeries::constant(Rat(1), m, kGfDeg);
        for (int i = 0; i < m; ++i)
            rhs += Rat(S[i]) * (MSeries::variable(i, m, kGfDeg) *
                                gf::v_series(S, S[i], kGfDeg));
        if (!(v1 - rhs).is_zero())
            fail("V_1 != 1 + sum_i y_i s_i V_{s_i} for S=", widths_name(S));
    }
    return result_of(fail, "V_1 = 1 + sum_i y_i s_i V_{s_i} with V_s = V_1(1+U)^{s-1}");
}

CheckResult gf_w_closed_form() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        for (int b = 1; b <= 3; ++b) {
            const MSeries wb = gf::w_series(S, b, kGfDeg);
            for_each_nvec(S.size(), kGfDeg, [&](const std::vector<int>& nvec) {
                if (fail.failed) return;
                int n = 0;
                for (int c : nvec) n += c;
                const Rat c = wb.coefficient(nvec);
                const Int want = b <= n ? count_wb(S, nvec, b) : Int(0);
                if (!is_integer(c) || numerator(c) != want)
                    fail("[y^", nvec_name(nvec), "] W_", b, " != closed-form count for S=",
                         widths_name(S));
            });
        }
    }
    return result_of(fail, "W_b coefficients match the closed form, b <= 3, degree 8");
}

CheckResult gf_v1_inverse() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        const int m = S.size();
        const MSeries one = MSeries::constant(Rat(1), m, kGfDeg);
        const MSeries u = gf::solve_u(S, kGfDeg);
        MSeries denom = one;
        for (int i = 0; i < m; ++i)
            denom -= Rat(S[i]) * (MSeries::variable(i, m, kGfDeg) * (one + u).pow(S[i] - 1));
        if (!(gf::v1_series(S, kGfDeg) * denom - one).is_zero())
            fail("V_1 * (1 - sum_i y_i s_i (1+U)^{s_i-1}) != 1 for S=", widths_name(S));
    }
    return result_of(fail, "V_1 inverts 1 - sum_i y_i s_i (1+U)^{s_i-1}, degree 8");
}

CheckResult gf_w1_balance() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        const MSeries one = MSeries::constant(Rat(1), S.size(), kGfDeg);
        const MSeries u = gf::solve_u(S, kGfDeg);
        const MSeries lhs = (one + u) * gf::w_series(S, 1, kGfDeg);
        const MSeries rhs = gf::v1_series(S, kGfDeg) * u;
        if (!(lhs - rhs).is_zero())
            fail("(1+U) W_1 != V_1 U for S=", widths_name(S));
    }
    return result_of(fail, "(1+U) W_1 = V_1 U to degree 8, 4 width lists");
}

CheckResult gf_euler_form() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        const MSeries one = MSeries::constant(Rat(1), S.size(), kGfDeg);
        const MSeries u = gf::solve_u(S, kGfDeg);
        const MSeries core = (one + u).inverse() * gf::euler(u);
        for (int b = 1; b <= 3; ++b) {
            const MSeries lhs = gf::w_series(S, b, kGfDeg);
            const MSeries rhs = u.pow(b - 1) * core;
            if (!(lhs - rhs).is_zero())
                fail("W_", b, " != U^{b-1} (1+U)^{-1} euler(U) for S=", widths_name(S));
        }
    }
    return result_of(fail, "W_b = U^{b-1}(1+U)^{-1} euler(U), b <= 3, degree 8");
}

CheckResult v_and_h_vs_enumerator() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        for (int l = 1; l <= 3 && !fail.failed; ++l) {
            const MSeries v = gf::v_series(S, l, 5);
            const MSeries h = gf::h_series(S, l, 5);
            for_each_nvec(S.size(), 5, [&](const std::vector<int>& nvec) {
                if (fail.failed) return;
                for (auto [series, cls, what] :
                     {std::tuple{&v, ClassSpec::vl(l), "V"}, {&h, ClassSpec::hl(l), "H"}}) {
                    EnumSpec spec{S, nvec, cls, false, 5};
                    const Int got = count_towers(spec);
                    const Rat c = series->coefficient(nvec);
                    if (!is_integer(c) || numerator(c) != got) {
                        fail(what, "_", l, " coefficient at ", nvec_name(nvec), " is ",
                             rat_str(c), " but the enumerator finds ", got.str(),
                             " towers for S=", widths_name(S));
                        return;
                    }
                }
            });
        }
    }
    return result_of(fail, "V_l and H_l coefficients match enumeration, l <= 3, sum nvec <= 5");
}

// ---------------------------------------------------------------- criterion 5

const std::vector<WidthList>& dyck_width_lists() {
    static const std::vector<WidthList> lists = {WidthList({2}), WidthList({3}),
                                                 WidthList({2, 3})};
    return lists;
}

HnSpec spec_for(const WidthList& S, const std::vector<int>& nvec) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < S.size(); ++i)
        if (nvec[i] > 0) pairs.emplace_back(nvec[i], S[i] - 1);
    return HnSpec(pairs);
}

void for_each_word(const HnSpec& spec, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<std::pair<int, int>> avail = spec.pairs;  // (remaining, letter)
    int zeros = spec.zeros();
    std::vector<int> word;
    std::function<void(long long)> rec = [&](long long level) {
        if (zeros == 0) {
            bool done = true;
            for (auto [t, l] : avail)
                if (t > 0) done = false;
            if (done) {
                f(word);
                return;
            }
        }
        if (zeros > 0 && level > 0) {
            --zeros;
            word.push_back(0);
            rec(level - 1);
            word.pop_back();
            ++zeros;
        }
        for (auto& [t, l] : avail) {
            if (t == 0) continue;
            --t;
            word.push_back(l);
            rec(level + l);
            word.pop_back();
            ++t;
        }
    };
    rec(0);
}

CheckResult bijection_tower_to_path() {
    Failure fail;
    long towers = 0;
    for (const WidthList& S : dyck_width_lists()) {
        for_each_nvec(S.size(), 5, [&](const std::vector<int>& nvec) {
            if (fail.failed) return;
            EnumSpec spec{S, nvec, ClassSpec::u(), false, 5};
            std::set<std::vector<int>> words;
            Int count = 0;
            for_each_tower(spec, [&](const Tower& t) {
                if (fail.failed) return;
                ++count;
                ++towers;
                DyckPath p = tower_to_path(t);
                const PathReport pr = validate_path(p);
                if (!pr.ok) {
                    fail("invalid image path for a tower in U: ", pr.detail);
                    return;
                }
                if (!words.insert(p.word).second) {
                    fail("two towers map to the same path, S=", widths_name(S),
                         " nvec=", nvec_name(nvec));
                    return;
                }
                if (path_to_tower(p, S) != t) {
                    fail("path_to_tower(tower_to_path(t)) != t, S=", widths_name(S),
                         " nvec=", nvec_name(nvec));
                    return;
                }
            });
            if (fail.failed) return;
            if (count != count_u(S, nvec))
                fail("|U| != count_u for S=", widths_name(S), " nvec=", nvec_name(nvec));
            if (count != count_dyck(spec_for(S, nvec)))
                fail("|U| != count_dyck for S=", widths_name(S), " nvec=", nvec_name(nvec));
        });
    }
    return result_of(fail, "tower->path->tower round trip over " + std::to_string(towers) +
                               " towers, 3 width lists, sum nvec <= 5");
}

CheckResult bijection_path_to_tower() {
    Failure fail;
    long paths = 0;
    for (const WidthList& S : dyck_width_lists()) {
        for_each_nvec(S.size(), 5, [&](const std::vector<int>& nvec) {
            if (fail.failed) return;
            const HnSpec hn = spec_for(S, nvec);
            Int count = 0;
            for_each_word(hn, [&](const std::vector<int>& word) {
                if (fail.failed) return;
                ++count;
                ++paths;
                DyckPath p{hn, word};
                Tower t = path_to_tower(p, S);
                if (!is_member(t, ClassSpec::u())) {
                    fail("reconstructed tower is not in U");
                    return;
                }
                if (tower_to_path(t) != p) {
                    fail("tower_to_path(path_to_tower(p)) != p, S=", widths_name(S),
                         " nvec=", nvec_name(nvec));
                    return;
                }
            });
            if (fail.failed) return;
            if (count != count_dyck(hn))
                fail("valid word count != count_dyck for S=", widths_name(S),
                     " nvec=", nvec_name(nvec));
        });
    }
    return result_of(fail, "path->tower->path round trip over " + std::to_string(paths) +
                               " valid paths, 3 width lists, sum nvec <= 5");
}

CheckResult path_count_identity() {
    Failure fail;
    int cases = 0;
    for (const WidthList& S : dyck_width_lists()) {
        for_each_nvec(S.size(), 12, [&](const std::vector<int>& nvec) {
            if (fail.failed) return;
            ++cases;
            if (count_dyck(spec_for(S, nvec)) != count_u(S, nvec))
                fail("count_dyck != count_u for S=", widths_name(S), " nvec=", nvec_name(nvec));
        });
    }
    return result_of(fail, "count_dyck == count_u over " + std::to_string(cases) +
                               " specs, sum nvec <= 12");
}

CheckResult staircase_example() {
    // The eight-block staircase with widths 3,4,3,3,3,3,2,4 in drop order and
    // its labelled order and word.
    Failure fail;
    const WidthList S({2, 3, 4});
    const std::vector<Block> labelled = {
        {0, 0, 3}, {1, 2, 4}, {2, 4, 3}, {3, 5, 3}, {2, 1, 3}, {4, 3, 3}, {3, 0, 2}, {5, 1, 4}};
    Tower t(S, labelled);
    if (!is_member(t, ClassSpec::u())) fail("staircase example is not in U");
    if (is_row_convex(t)) fail("staircase example should not be row-convex");
    const std::vector<Block> order = order_blocks(t);
    if (order != labelled) fail("order_blocks disagrees with the labelled order");
    DyckPath p = tower_to_path(t);
    const std::vector<int> want_word = {2, 3, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 2,
                                        2, 0, 0, 0, 0, 0, 1, 3, 0, 0, 0, 0};
    if (p.word != want_word) fail("word of the staircase example is wrong");
    if (static_cast<int>(p.word.size()) != 25) fail("word length should be 25");
    if (path_to_tower(p, S) != t) fail("staircase example does not round-trip");
    return result_of(fail, "eight-block staircase: order, 25-letter word, round trip");
}

// ---------------------------------------------------------------- criterion 6

CheckResult rowconvex_f_vs_dp() {
    Failure fail;
    for (int k : {2, 3, 4}) {
        for (int l = 1; l <= 5; ++l) {
            const Series F = rowconvex::f_series(l, k, 21);
            for (int n = 0; n <= 20; ++n) {
                const Rat c = F[n];
                if (!is_integer(c) || numerator(c) != rowconvex::f_dp(l, n, k))
                    fail("[z^", n, "] F_", l, " != f_dp for k=", k);
            }
        }
    }
    return result_of(fail, "F_l coefficients match the recurrence, l <= 5, n <= 20, k in {2,3,4}");
}

CheckResult rowconvex_g_vs_dp() {
    Failure fail;
    for (int k : {2, 3, 4}) {
        const Series G = rowconvex::g_series(k, 21);
        for (int n = 1; n <= 20; ++n) {
            const Rat c = G[n];
            if (!is_integer(c) || numerator(c) != rowconvex::g_dp(n, k))
                fail("[z^", n, "] G != g_dp for k=", k);
        }
    }
    return result_of(fail, "G coefficients match g_dp, n <= 20, k in {2,3,4}");
}

CheckResult rowconvex_recurrence_residuals() {
    Failure fail;
    constexpr int N = 24;
    for (int k : {2, 3, 4}) {
        auto A = [&](int l) { return rowconvex::a_series(l, k, N); };
        auto B = [&](int l) { return rowconvex::b_series(l, k, N); };
        auto F = [&](int l) { return rowconvex::f_series(l, k, N); };
        if (!rowconvex::check_solution(A, k, N, 1, 3).all_zero)
            fail("A family fails the three-term recurrence, k=", k);
        if (!rowconvex::check_solution(B, k, N, 1, 3).all_zero)
            fail("B family fails the three-term recurrence, k=", k);
        if (!rowconvex::check_solution(F, k, N, 1, 3).all_zero)
            fail("F family fails the three-term recurrence, k=", k);
    }
    return result_of(fail, "A, B, F satisfy the recurrence to order 24, l <= 3, k in {2,3,4}");
}

CheckResult rowconvex_boundary_residuals() {
    Failure fail;
    constexpr int N = 24;
    for (int k : {2, 3, 4}) {
        auto F = [&](int l) { return rowconvex::f_series(l, k, N); };
        auto A = [&](int l) { return rowconvex::a_series(l, k, N); };
        if (!rowconvex::check_boundary(F, k, N).all_zero)
            fail("F family fails the boundary equations, k=", k);
        const auto ar = rowconvex::check_boundary(A, k, N);
        if (ar.all_zero) fail("A family alone should not satisfy the boundary, k=", k);
    }
    return result_of(fail, "F satisfies the boundary equations to order 24; A alone does not");
}

CheckResult rowconvex_enumeration_vs_dp() {
    Failure fail;
    long towers = 0;
    for (int k : {2, 3}) {
        for (int l = 1; l <= 3; ++l) {
            for (int n = 0; n <= 5; ++n) {
                const std::vector<Tower> ts = enumerate_row_convex(l, n, k, 5);
                towers += static_cast<long>(ts.size());
                if (Int(ts.size()) != rowconvex::f_dp(l, n, k))
                    fail("row-convex enumeration (l=", l, ", n=", n, ", k=", k,
                         ") has ", ts.size(), " towers, f_dp wants ",
                         rowconvex::f_dp(l, n, k).str());
                for (const Tower& t : ts) {
                    if (t.empty()) continue;
                    if (!is_member(t, ClassSpec::rowconvex_platform(l))) {
                        fail("emitted tower outside the row-convex family");
                        break;
                    }
                }
            }
        }
    }
    return result_of(fail, "geometric enumeration matches f_dp over " +
                               std::to_string(towers) + " towers, l <= 3, n <= 5, k in {2,3}");
}

// ---------------------------------------------------------------- criterion 7

CheckResult canonicalize_idempotent() {
    Failure fail;
    for (const WidthList& S : {WidthList({2}), WidthList({2, 3})}) {
        for_each_nvec(S.size(), 4, [&](const std::vector<int>& nvec) {
            if (fail.failed) return;
            EnumSpec spec{S, nvec, ClassSpec::total(), false, 4};
            for_each_tower(spec, [&](const Tower& t) {
                if (fail.failed) return;
                if (!validate(t).ok()) {
                    fail("enumerated tower fails validation");
                    return;
                }
                const Tower c = canonicalize(t);
                if (c != t) {
                    fail("enumerated towers should already be canonical");
                    return;
                }
                if (canonicalize(c) != c) {
                    fail("canonicalize is not idempotent");
                    return;
                }
            });
            // shifted copies canonicalize back
            EnumSpec vspec{S, nvec, ClassSpec::vl(2), false, 4};
            for_each_tower(vspec, [&](const Tower& t) {
                if (fail.failed) return;
                if (!validate_placed(t).ok()) {
                    fail("enumerated platform tower fails placed validation");
                    return;
                }
                if (canonicalize(canonicalize(t)) != canonicalize(t))
                    fail("canonicalize is not idempotent on platform towers");
            });
        });
    }
    return result_of(fail, "validation and canonical idempotence over enumerated towers");
}

CheckResult collapse_is_restricted() {
    Failure fail;
    for (const WidthList& S : {WidthList({2}), WidthList({1, 2})}) {
        for_each_nvec(S.size(), 4, [&](const std::vector<int>& nvec) {
            if (fail.failed) return;
            EnumSpec spec{S, nvec, ClassSpec::total(), false, 4};
            for_each_tower(spec, [&](const Tower& t) {
                if (fail.failed) return;
                const Tower c = collapse_stacks(t);
                if (!validate_placed(c).ok()) {
                    fail("collapse produced an invalid tower");
                    return;
                }
                if (!is_restricted(c)) {
                    fail("collapse result is not restricted");
                    return;
                }
                if (is_restricted(t) && c != t)
                    fail("collapse moved a tower that was already restricted");
            });
        });
    }
    return result_of(fail, "stack collapse lands in the restricted family and fixes it");
}

CheckResult dyck_prefix_sums() {
    Failure fail;
    for_each_nvec(2, 4, [&](const std::vector<int>& nvec) {
        if (fail.failed) return;
        const WidthList S({2, 3});
        EnumSpec spec{S, nvec, ClassSpec::u(), false, 4};
        for_each_tower(spec, [&](const Tower& t) {
            if (fail.failed) return;
            const DyckPath p = tower_to_path(t);
            long long level = 0;
            for (int w : p.word) {
                level += w == 0 ? -1 : w;
                if (level < 0) {
                    fail("negative prefix sum in a bijection image");
                    return;
                }
            }
            if (level != 0) fail("image word does not end at level zero");
        });
    });
    return result_of(fail, "bijection images keep prefix sums nonnegative and end at zero");
}

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rat(num(rng), den(rng));
}

CheckResult series_ring_axioms() {
    Failure fail;
    std::mt19937 rng(12345);
    constexpr int N = 8;
    auto random_series = [&]() {
        Series s(N);
        for (int i = 0; i < N; ++i) s.set(i, random_rat(rng));
        return s;
    };
    for (int trial = 0; trial < 60 && !fail.failed; ++trial) {
        const Series a = random_series(), b = random_series(), c = random_series();
        if ((a + b) + c != a + (b + c)) fail("series addition is not associative");
        if (a + b != b + a) fail("series addition is not commutative");
        if (a * b != b * a) fail("series multiplication is not commutative");
        if ((a * b) * c != a * (b * c)) fail("series multiplication is not associative");
        if (a * (b + c) != a * b + a * c) fail("series multiplication does not distribute");
        if (a[0] != 0) {
            const Series prod = a * a.inverse();
            if (prod != Series::constant(Rat(1), N)) fail("series inverse is wrong");
        }
    }
    return result_of(fail, "univariate ring axioms on 60 seeded random triples");
}

CheckResult mseries_ring_axioms() {
    Failure fail;
    std::mt19937 rng(67890);
    constexpr int N = 5, M = 2;
    auto random_mseries = [&]() {
        MSeries s(M, N);
        std::uniform_int_distribution<int> e(0, N);
        for (int t = 0; t < 10; ++t) {
            const int e1 = e(rng), e2 = e(rng);
            if (e1 + e2 > N) continue;
            s.set({e1, e2}, random_rat(rng));
        }
        return s;
    };
    const MSeries one = MSeries::constant(Rat(1), M, N);
    for (int trial = 0; trial < 40 && !fail.failed; ++trial) {
        const MSeries a = random_mseries(), b = random_mseries(), c = random_mseries();
        if ((a + b) + c != a + (b + c)) fail("mseries addition is not associative");
        if (a * b != b * a) fail("mseries multiplication is not commutative");
        if ((a * b) * c != a * (b * c)) fail("mseries multiplication is not associative");
        if (a * (b + c) != a * b + a * c) fail("mseries multiplication does not distribute");
        if (a.coefficient({0, 0}) != 0 && a * a.inverse() != one)
            fail("mseries inverse is wrong");
    }
    return result_of(fail, "multivariate ring axioms on 40 seeded random triples");
}

CheckResult integrality() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        std::vector<MSeries> all = {gf::solve_u(S, kGfDeg), gf::v1_series(S, kGfDeg),
                                    gf::total_series(S, kGfDeg)};
        for (int i = 1; i <= 3; ++i) {
            all.push_back(gf::w_series(S, i, kGfDeg));
            all.push_back(gf::h_series(S, i, kGfDeg));
            all.push_back(gf::v_series(S, i, kGfDeg));
        }
        for (const MSeries& s : all)
            for (const auto& [e, c] : s.terms())
                if (!is_integer(c)) fail("non-integral coefficient in a counting series");
    }
    for (int k : {2, 3}) {
        const Series F = rowconvex::f_series(2, k, 12);
        for (int n = 0; n < 12; ++n)
            if (!is_integer(F[n])) fail("non-integral coefficient in F_2");
    }
    return result_of(fail, "all counting series have integer coefficients");
}

// ---------------------------------------------------- additional invariants

CheckResult restricted_transform_vs_enumeration() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        const MSeries restricted = gf::restricted_transform(gf::total_series(S, 5));
        for_each_nvec(S.size(), 5, [&](const std::vector<int>& nvec) {
            if (fail.failed) return;
            EnumSpec spec{S, nvec, ClassSpec::total(), true, 5};
            const Int got = count_towers(spec);
            const Rat c = restricted.coefficient(nvec);
            if (!is_integer(c) || numerator(c) != got)
                fail("restricted transform coefficient at ", nvec_name(nvec),
                     " differs from restricted enumeration for S=", widths_name(S));
        });
    }
    return result_of(fail, "restricted transform matches restricted enumeration, sum nvec <= 5");
}

CheckResult transforms_invert() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        const MSeries total = gf::total_series(S, 6);
        const MSeries back = gf::unrestricting_transform(gf::restricted_transform(total));
        if (!(back - total).is_zero())
            fail("unrestricting(restricted(T)) != T for S=", widths_name(S));
    }
    return result_of(fail, "the substitution transforms are mutually inverse, degree 6");
}

CheckResult wb_vs_enumeration_per_class() {
    Failure fail;
    for (const WidthList& S : {WidthList({2}), WidthList({2, 3})}) {
        for_each_nvec(S.size(), 5, [&](const std::vector<int>& nvec) {
            if (fail.failed) return;
            int n = 0;
            for (int c : nvec) n += c;
            for (int b = 1; b <= n; ++b) {
                EnumSpec spec{S, nvec, ClassSpec::wb(b), false, 5};
                std::set<std::string> seen;
                Int cnt = 0;
                for_each_tower(spec, [&](const Tower& t) {
                    ++cnt;
                    if (!is_member(t, ClassSpec::wb(b)))
                        fail("enumerated tower is not in its own class");
                    if (!seen.insert(io::tower_key(t)).second)
                        fail("duplicate tower emitted for W_b");
                });
                if (cnt != count_wb(S, nvec, b))
                    fail("W_b enumeration count mismatch at b=", b);
            }
        });
    }
    return result_of(fail, "per-class W_b enumeration is duplicate-free and matches the formula");
}

CheckResult u_count_vs_formula() {
    Failure fail;
    for (const WidthList& S : width_lists()) {
        for_each_nvec(S.size(), 5, [&](const std::vector<int>& nvec) {
            if (fail.failed) return;
            EnumSpec spec{S, nvec, ClassSpec::u(), false, 5};
            if (count_towers(spec) != count_u(S, nvec))
                fail("|U| != count_u for S=", widths_name(S), " nvec=", nvec_name(nvec));
        });
    }
    return result_of(fail, "U enumeration matches count_u, 4 width lists, sum nvec <= 5");
}

}  // namespace

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = {
        {"exact", 1, "closed-form-vs-enumeration", closed_form_vs_enumeration},
        {"exact", 2, "domino-totals", domino_totals},
        {"mseries", 2, "domino-restricted-transform", domino_restricted_transform},
        {"enumerate", 2, "domino-restricted-enumeration", domino_restricted_enumeration},
        {"enumerate", 3, "figure-counts", figure_counts},
        {"mseries", 4, "gf-fixed-point", gf_fixed_point},
        {"mseries", 4, "gf-h-recurrence", gf_h_recurrence},
        {"mseries", 4, "gf-v-decomposition", gf_v_decomposition},
        {"mseries", 4, "gf-w-closed-form", gf_w_closed_form},
        {"mseries", 4, "gf-v1-inverse", gf_v1_inverse},
        {"mseries", 4, "gf-w1-balance", gf_w1_balance},
        {"mseries", 4, "gf-euler-form", gf_euler_form},
        {"mseries", 4, "v-h-vs-enumerator", v_and_h_vs_enumerator},
        {"dyck", 5, "bijection-tower-to-path", bijection_tower_to_path},
        {"dyck", 5, "bijection-path-to-tower", bijection_path_to_tower},
        {"dyck", 5, "path-count-identity", path_count_identity},
        {"dyck", 5, "staircase-example", staircase_example},
        {"rowconvex", 6, "f-vs-dp", rowconvex_f_vs_dp},
        {"rowconvex", 6, "g-vs-dp", rowconvex_g_vs_dp},
        {"rowconvex", 6, "recurrence-residuals", rowconvex_recurrence_residuals},
        {"rowconvex", 6, "boundary-residuals", rowconvex_boundary_residuals},
        {"rowconvex", 6, "enumeration-vs-dp", rowconvex_enumeration_vs_dp},
        {"tower", 7, "canonicalize-idempotent", canonicalize_idempotent},
        {"tower", 7, "collapse-is-restricted", collapse_is_restricted},
        {"dyck", 7, "prefix-sums", dyck_prefix_sums},
        {"series", 7, "series-ring-axioms", series_ring_axioms},
        {"mseries", 7, "mseries-ring-axioms", mseries_ring_axioms},
        {"mseries", 7, "integrality", integrality},
        {"mseries", 0, "restricted-transform-vs-enumeration",
         restricted_transform_vs_enumeration},
        {"mseries", 0, "transforms-invert", transforms_invert},
        {"enumerate", 0, "wb-enumeration-per-class", wb_vs_enumeration_per_class},
        {"enumerate", 0, "u-count-vs-formula", u_count_vs_formula},
    };
    return checks;
}

std::vector<std::string> suites() {
    std::vector<std::string> out;
    for (const Check& c : registry())
        if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
    return out;
}

}  // namespace somino::checks
