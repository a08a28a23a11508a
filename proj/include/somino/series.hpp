#pragma once

#include <vector>

#include "somino/types.hpp"

namespace somino {

// Truncated univariate power series over the rationals.  A series of order N
// represents coefficients of z^0..z^{N-1}; arithmetic truncates to the
// smaller operand order.
class Series {
public:
    explicit Series(int order);
    static Series constant(const Rat& c, int order);
    static Series monomial(const Rat& c, int power, int order);

    int order() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int i) const { return c_[i]; }
    void set(int i, Rat v) { c_[i] = std::move(v); }

    bool is_zero() const;
    int first_nonzero() const;  // -1 when identically zero

    Series truncated(int order) const;
    Series inverse() const;  // requires a nonzero constant term

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rat& s, const Series& a);
    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rat> c_;
};

// prod_{i=0}^{j-1} (1 - a z^{shift+i}), truncated to the given order.
Series qpoch(const Rat& a, int shift, int j, int order);

}  // namespace somino
