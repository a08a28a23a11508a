#include "somino/mseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace somino {

namespace {

int total_degree(const std::vector<int>& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void check_compatible(const MSeries& a, const MSeries& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("mseries arity mismatch");
}

}  // namespace

MSeries::MSeries(int nvars, int maxdeg) : nvars_(nvars), maxdeg_(maxdeg) {
    if (nvars < 1) throw std::invalid_argument("mseries needs at least one variable");
    if (maxdeg < 0) throw std::invalid_argument("mseries degree must be >= 0");
}

MSeries MSeries::constant(const Rat& c, int nvars, int maxdeg) {
    MSeries s(nvars, maxdeg);
    if (c != 0) s.terms_[std::vector<int>(nvars, 0)] = c;
    return s;
}

MSeries MSeries::variable(int i, int nvars, int maxdeg) {
    MSeries s(nvars, maxdeg);
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    if (maxdeg >= 1) {
        std::vector<int> e(nvars, 0);
        e[i] = 1;
        s.terms_[e] = 1;
    }
    return s;
}

Rat MSeries::coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MSeries::set(const std::vector<int>& exps, Rat v) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("exponent vector arity mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("exponents must be >= 0");
    if (total_degree(exps) > maxdeg_) return;
    if (v == 0)
        terms_.erase(exps);
    else
        terms_[exps] = std::move(v);
}

bool MSeries::is_zero() const { return terms_.empty(); }

MSeries MSeries::truncated(int maxdeg) const {
    MSeries s(nvars_, maxdeg);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= maxdeg) s.terms_[e] = c;
    return s;
}

void MSeries::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

MSeries& MSeries::operator+=(const MSeries& o) {
    check_compatible(*this, o);
    maxdeg_ = std::min(maxdeg_, o.maxdeg_);
    for (const auto& [e, c] : o.terms_)
        if (total_degree(e) <= maxdeg_) terms_[e] += c;
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0 || total_degree(it->first) > maxdeg_) ? terms_.erase(it)
                                                                    : std::next(it);
    return *this;
}

MSeries& MSeries::operator-=(const MSeries& o) {
    check_compatible(*this, o);
    MSeries neg = Rat(-1) * o;
    return *this += neg;
}

MSeries operator*(const MSeries& a, const MSeries& b) {
    check_compatible(a, b);
    MSeries r(a.nvars(), std::min(a.maxdeg(), b.maxdeg()));
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        if (da > r.maxdeg_) continue;
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > r.maxdeg_) continue;
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.terms_[e] += ca * cb;
        }
    }
    r.prune();
    return r;
}

MSeries operator*(const Rat& s, const MSeries& a) {
    MSeries r = a;
    if (s == 0) {
        r.terms_.clear();
        return r;
    }
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

MSeries MSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("mseries pow requires e >= 0");
    MSeries r = constant(Rat(1), nvars_, maxdeg_);
    MSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

MSeries MSeries::inverse() const {
    const Rat c0 = coefficient(std::vector<int>(nvars_, 0));
    if (c0 == 0)
        throw std::invalid_argument("mseries inverse requires a nonzero constant term");
    // 1/(c0 + P) where P has positive valuation: expand geometric series in
    // Q = -P/c0; total-degree truncation makes the loop finite.
    MSeries q = Rat(-1) / c0 * *this;
    q.set(std::vector<int>(nvars_, 0), Rat(0));
    MSeries power = constant(Rat(1), nvars_, maxdeg_);
    MSeries acc = constant(Rat(1), nvars_, maxdeg_);
    for (int d = 1; d <= maxdeg_; ++d) {
        power = power * q;
        if (power.is_zero()) break;
        acc += power;
    }
    return Rat(1) / c0 * acc;
}

namespace gf {

MSeries solve_u(const WidthList& S, int maxdeg) {
    const int m = S.size();
    const MSeries one = MSeries::constant(Rat(1), m, maxdeg);
    MSeries u(m, maxdeg);
    for (int it = 0; it < maxdeg; ++it) {
        MSeries next(m, maxdeg);
        const MSeries base = one + u;
        for (int i = 0; i < m; ++i)
            next += MSeries::variable(i, m, maxdeg) * base.pow(S[i]);
        u = std::move(next);
    }
    return u;
}

MSeries v1_series(const WidthList& S, int maxdeg) {
    const int m = S.size();
    const MSeries one = MSeries::constant(Rat(1), m, maxdeg);
    const MSeries base = one + solve_u(S, maxdeg);
    MSeries denom = one;
    for (int i = 0; i < m; ++i)
        denom -= Rat(S[i]) * (MSeries::variable(i, m, maxdeg) * base.pow(S[i] - 1));
    return denom.inverse();
}

MSeries v_series(const WidthList& S, int s, int maxdeg) {
    if (s < 1) throw std::invalid_argument("v_series requires s >= 1");
    const MSeries one = MSeries::constant(Rat(1), S.size(), maxdeg);
    return v1_series(S, maxdeg) * (one + solve_u(S, maxdeg)).pow(s - 1);
}

MSeries h_series(const WidthList& S, int s, int maxdeg) {
    if (s < 1) throw std::invalid_argument("h_series requires s >= 1");
    const MSeries one = MSeries::constant(Rat(1), S.size(), maxdeg);
    return (one + solve_u(S, maxdeg)).pow(s);
}

MSeries w_series(const WidthList& S, int b, int maxdeg) {
    if (b < 1) throw std::invalid_argument("w_series requires b >= 1");
    const MSeries one = MSeries::constant(Rat(1), S.size(), maxdeg);
    const MSeries u = solve_u(S, maxdeg);
    const MSeries w1 = v1_series(S, maxdeg) * u * (one + u).inverse();
    return w1 * u.pow(b - 1);
}

MSeries total_series(const WidthList& S, int maxdeg) {
    const MSeries one = MSeries::constant(Rat(1), S.size(), maxdeg);
    const MSeries u = solve_u(S, maxdeg);
    const MSeries w1 = v1_series(S, maxdeg) * u * (one + u).inverse();
    return w1 * (one - u).inverse();
}

MSeries euler(const MSeries& f) {
    MSeries r(f.nvars(), f.maxdeg());
    for (const auto& [e, c] : f.terms()) {
        const int d = std::accumulate(e.begin(), e.end(), 0);
        if (d != 0) r.set(e, Rat(d) * c);
    }
    return r;
}

MSeries substitute(const MSeries& f, const std::vector<MSeries>& repl) {
    if (static_cast<int>(repl.size()) != f.nvars())
        throw std::invalid_argument("substitute: one replacement per variable required");
    int maxdeg = f.maxdeg();
    for (const MSeries& r : repl) {
        if (r.nvars() != f.nvars())
            throw std::invalid_argument("substitute: replacement arity mismatch");
        if (r.coefficient(std::vector<int>(r.nvars(), 0)) != 0)
            throw std::invalid_argument("substitute: replacements need zero constant term");
        maxdeg = std::min(maxdeg, r.maxdeg());
    }

    // Horner in one variable at a time: f = sum_d y_v^d A_d with the A_d free
    // of y_v; recurse on the coefficients, then fold with the replacement.
    struct Rec {
        const std::vector<MSeries>& repl;
        int nvars;
        int maxdeg;

        MSeries run(const MSeries& g, int v) const {
            if (v == nvars) return g.truncated(maxdeg);
            int dmax = 0;
            for (const auto& [e, c] : g.terms()) dmax = std::max(dmax, e[v]);
            std::vector<MSeries> coeff(dmax + 1, MSeries(nvars, g.maxdeg()));
            for (const auto& [e, c] : g.terms()) {
                std::vector<int> rest = e;
                rest[v] = 0;
                coeff[e[v]].set(rest, c);
            }
            MSeries acc = run(coeff[dmax], v + 1);
            for (int d = dmax - 1; d >= 0; --d)
                acc = acc * repl[v].truncated(maxdeg) + run(coeff[d], v + 1);
            return acc;
        }
    };
    return Rec{repl, f.nvars(), maxdeg}.run(f, 0);
}

namespace {

MSeries geometric_transform(const MSeries& f, int sign) {
    // y / (1 -+ ... ): expansion y_i * sum_j (sign * y_i)^j
    std::vector<MSeries> repl;
    for (int i = 0; i < f.nvars(); ++i) {
        MSeries y = MSeries::variable(i, f.nvars(), f.maxdeg());
        MSeries denom = MSeries::constant(Rat(1), f.nvars(), f.maxdeg()) - Rat(sign) * y;
        repl.push_back(y * denom.inverse());
    }
    return substitute(f, repl);
}

}  // namespace

MSeries restricted_transform(const MSeries& f) { return geometric_transform(f, -1); }
MSeries unrestricting_transform(const MSeries& f) { return geometric_transform(f, +1); }

}  // namespace gf

}  // namespace somino
