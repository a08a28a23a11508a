#include "somino/exact.hpp"

#include <stdexcept>

namespace somino {

namespace {

void check_spec(const WidthList& widths, const std::vector<int>& nvec) {
    if (static_cast<int>(nvec.size()) != widths.size())
        throw std::invalid_argument("nvec length does not match width list");
    Int n = 0;
    for (int c : nvec) {
        if (c < 0) throw std::invalid_argument("nvec entries must be >= 0");
        n += c;
    }
    if (n == 0) throw std::invalid_argument("nvec must contain at least one block");
}

Int block_count(const std::vector<int>& nvec) {
    Int n = 0;
    for (int c : nvec) n += c;
    return n;
}

Int weighted_sum(const WidthList& widths, const std::vector<int>& nvec) {
    Int s = 0;
    for (int i = 0; i < widths.size(); ++i) s += Int(widths[i]) * nvec[i];
    return s;
}

Int arrangements(const std::vector<int>& nvec) {
    std::vector<Int> parts(nvec.begin(), nvec.end());
    return multinomial(block_count(nvec), parts);
}

}  // namespace

Int binomial(const Int& top, const Int& k) {
    if (top < 0) throw std::invalid_argument("binomial: top must be >= 0");
    if (k < 0 || k > top) return 0;
    Int kk = k;
    if (kk > top - kk) kk = top - kk;
    Int r = 1;
    for (Int i = 1; i <= kk; ++i) {
        r *= top - kk + i;
        r /= i;  // exact at every step: r is C(top-kk+i, i)
    }
    return r;
}

Int multinomial(const Int& n, const std::vector<Int>& parts) {
    if (n < 0) throw std::invalid_argument("multinomial: n must be >= 0");
    Int sum = 0;
    for (const Int& p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: parts must be >= 0");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts must sum to n");
    Int r = 1;
    Int rest = n;
    for (const Int& p : parts) {
        r *= binomial(rest, p);
        rest -= p;
    }
    return r;
}

Rat hyp2f1_terminating(const Rat& a, const Int& b, const Rat& c, const Rat& z) {
    if (b > 0) throw std::invalid_argument("2F1: b must be a nonpositive integer");
    const Int jmax = -b;
    Rat total = 0;
    Rat term = 1;
    for (Int j = 0;; ++j) {
        total += term;
        if (j == jmax) break;
        const Rat cj = c + Rat(j);
        if (cj == 0)
            throw std::invalid_argument("2F1: pole of (c)_j before termination");
        term *= (a + Rat(j)) * (Rat(b) + Rat(j)) / (cj * Rat(j + 1)) * z;
    }
    return total;
}

Int count_wb(const WidthList& widths, const std::vector<int>& nvec, int b) {
    check_spec(widths, nvec);
    const Int n = block_count(nvec);
    if (b < 1 || b > n)
        throw std::invalid_argument("count_wb: b must satisfy 1 <= b <= n");
    return arrangements(nvec) * binomial(weighted_sum(widths, nvec) - 1, n - b);
}

Int count_total_sum(const WidthList& widths, const std::vector<int>& nvec) {
    check_spec(widths, nvec);
    const Int n = block_count(nvec);
    Int total = 0;
    for (Int b = 1; b <= n; ++b)
        total += count_wb(widths, nvec, static_cast<int>(b));
    return total;
}

Int count_total_hyp(const WidthList& widths, const std::vector<int>& nvec) {
    check_spec(widths, nvec);
    const Int n = block_count(nvec);
    const Int ssum = weighted_sum(widths, nvec);
    const Rat c = Rat(1 + ssum - n);
    const Rat hyp = hyp2f1_terminating(Rat(1), 1 - n, c, Rat(-1));
    const Rat value = Rat(arrangements(nvec) * binomial(ssum - 1, n - 1)) * hyp;
    if (!is_integer(value))
        throw std::logic_error("count_total_hyp: non-integral result");
    return numerator(value);
}

Int count_total(const WidthList& widths, const std::vector<int>& nvec) {
    const Int a = count_total_sum(widths, nvec);
    const Int b = count_total_hyp(widths, nvec);
    if (a != b)
        throw std::logic_error("count_total: closed forms disagree");
    return a;
}

Int count_u(const WidthList& widths, const std::vector<int>& nvec) {
    check_spec(widths, nvec);
    const Int n = block_count(nvec);
    const Rat value = Rat(arrangements(nvec) * binomial(weighted_sum(widths, nvec), n - 1), n);
    if (!is_integer(value))
        throw std::logic_error("count_u: non-integral result");
    return numerator(value);
}

Int count_dyck(const HnSpec& spec) {
    Int lsum = 0, tsum = 0;
    std::vector<Int> parts;
    for (auto [t, l] : spec.pairs) {
        lsum += Int(t) * l;
        tsum += t;
        parts.emplace_back(t);
    }
    if (tsum == 0) throw std::invalid_argument("count_dyck: empty spec");
    parts.insert(parts.begin(), lsum);
    const Rat value = Rat(multinomial(tsum + lsum, parts), 1 + lsum);
    if (!is_integer(value))
        throw std::logic_error("count_dyck: non-integral result");
    return numerator(value);
}

}  // namespace somino
