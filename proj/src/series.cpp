#include "somino/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace somino {

Series::Series(int order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    c_.assign(order, Rat(0));
}

Series Series::constant(const Rat& c, int order) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::monomial(const Rat& c, int power, int order) {
    if (power < 0) throw std::invalid_argument("monomial power must be >= 0");
    Series s(order);
    if (power < order) s.c_[power] = c;
    return s;
}

bool Series::is_zero() const { return first_nonzero() == -1; }

int Series::first_nonzero() const {
    for (int i = 0; i < order(); ++i)
        if (c_[i] != 0) return i;
    return -1;
}

Series Series::truncated(int order) const {
    Series s(order);
    for (int i = 0; i < std::min(order, this->order()); ++i) s.c_[i] = c_[i];
    return s;
}

Series& Series::operator+=(const Series& o) {
    c_.resize(std::min(order(), o.order()));
    for (int i = 0; i < order(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    c_.resize(std::min(order(), o.order()));
    for (int i = 0; i < order(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j < n; ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

Series operator*(const Rat& s, const Series& a) {
    Series r = a;
    for (int i = 0; i < r.order(); ++i) r.c_[i] *= s;
    return r;
}

Series Series::inverse() const {
    if (c_[0] == 0)
        throw std::invalid_argument("series inverse requires a nonzero constant term");
    Series r(order());
    r.c_[0] = Rat(1) / c_[0];
    for (int i = 1; i < order(); ++i) {
        Rat acc = 0;
        for (int j = 1; j <= i; ++j) acc += c_[j] * r.c_[i - j];
        r.c_[i] = -acc / c_[0];
    }
    return r;
}

Series qpoch(const Rat& a, int shift, int j, int order) {
    if (j < 0 || shift < 0)
        throw std::invalid_argument("qpoch requires j >= 0 and shift >= 0");
    Series r = Series::constant(Rat(1), order);
    for (int i = 0; i < j; ++i) {
        Series factor = Series::constant(Rat(1), order);
        factor -= Series::monomial(a, shift + i, order);
        r = r * factor;
    }
    return r;
}

}  // namespace somino
