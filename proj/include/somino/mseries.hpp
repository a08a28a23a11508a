#pragma once

#include <map>
#include <vector>

#include "somino/tower.hpp"
#include "somino/types.hpp"

namespace somino {

// Truncated multivariate power series over the rationals, graded and
// truncated by total degree.  In the tower generating functions the x-degree
// always equals the total y-degree, so only the y-exponent vectors are
// stored.
class MSeries {
public:
    MSeries(int nvars, int maxdeg);
    static MSeries constant(const Rat& c, int nvars, int maxdeg);
    static MSeries variable(int i, int nvars, int maxdeg);

    int nvars() const { return nvars_; }
    int maxdeg() const { return maxdeg_; }

    Rat coefficient(const std::vector<int>& exps) const;  // 0 when absent
    void set(const std::vector<int>& exps, Rat v);
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    bool is_zero() const;
    MSeries truncated(int maxdeg) const;

    MSeries& operator+=(const MSeries& o);
    MSeries& operator-=(const MSeries& o);
    friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
    friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
    friend MSeries operator*(const MSeries& a, const MSeries& b);
    friend MSeries operator*(const Rat& s, const MSeries& a);

    MSeries pow(int e) const;      // e >= 0
    MSeries inverse() const;       // nonzero constant term

    friend bool operator==(const MSeries&, const MSeries&) = default;

private:
    int nvars_;
    int maxdeg_;
    std::map<std::vector<int>, Rat> terms_;  // zero coefficients not stored

    void prune();
};

namespace gf {

// Fixed point of U = sum_i y_i (1 + U)^{s_i}; iterating maxdeg times fixes
// every coefficient of total degree <= maxdeg.
MSeries solve_u(const WidthList& S, int maxdeg);

// V_1 = (1 - sum_i y_i s_i (1+U)^{s_i - 1})^{-1}
MSeries v1_series(const WidthList& S, int maxdeg);

// V_s = V_1 (1+U)^{s-1}
MSeries v_series(const WidthList& S, int s, int maxdeg);

// H_s = (1+U)^s
MSeries h_series(const WidthList& S, int s, int maxdeg);

// W_1 = V_1 U / (1+U);  W_b = W_1 U^{b-1}
MSeries w_series(const WidthList& S, int b, int maxdeg);

// sum_{b>=1} W_b = W_1 / (1 - U)
MSeries total_series(const WidthList& S, int maxdeg);

// Scales each term by its total degree (the operator x d/dx in the collapsed
// grading).
MSeries euler(const MSeries& f);

// Simultaneous substitution y_i -> repl[i]; every replacement must have a
// zero constant term.
MSeries substitute(const MSeries& f, const std::vector<MSeries>& repl);

// y_i -> y_i / (1 + y_i): unrestricted counts become restricted ones.
MSeries restricted_transform(const MSeries& f);

// y_i -> y_i / (1 - y_i): inverse of the restricted transform.
MSeries unrestricting_transform(const MSeries& f);

}  // namespace gf

}  // namespace somino
