#pragma once

#include <string>
#include <vector>

#include "somino/tower.hpp"
#include "somino/types.hpp"

namespace somino {

// Alphabet specification for generalized Dyck paths: t_i occurrences of the
// up-letter l_i (a step of +l_i) together with n = sum t_i*l_i zeros (steps
// of -1).  The l_i are distinct positive integers.
struct HnSpec {
    std::vector<std::pair<int, int>> pairs;  // (t_i, l_i)

    HnSpec() = default;
    explicit HnSpec(std::vector<std::pair<int, int>> p);

    int zeros() const;        // n = sum t_i * l_i
    int up_letters() const;   // sum t_i
    int length() const { return zeros() + up_letters(); }
    bool has_letter(int l) const;

    friend bool operator==(const HnSpec&, const HnSpec&) = default;
};

struct DyckPath {
    HnSpec spec;
    std::vector<int> word;  // entries are 0 or one of the l_i

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

struct PathReport {
    bool ok = true;
    std::string detail;
};

// Letter multiset matches the spec, every prefix sum is nonnegative, and the
// total sum is zero.
PathReport validate_path(const DyckPath& p);

// The unique block order satisfying: (1) blocks can be dropped in this order
// (a block sharing a column with a lower block comes after it), and (2) the
// left border of each block lies strictly left of the right border of its
// predecessor.  Requires a tower in U.
std::vector<Block> order_blocks(const Tower& t);

// Diagonal-flip bijection from towers in U (all widths >= 2) to valid paths.
DyckPath tower_to_path(const Tower& t);

// Inverse map; the reconstructed tower is canonical and round-trips.  widths
// gives the resulting tower's width list (useful when some widths of the
// original list are unused); by default it is derived from the path itself.
Tower path_to_tower(const DyckPath& p);
Tower path_to_tower(const DyckPath& p, const WidthList& widths);

}  // namespace somino
