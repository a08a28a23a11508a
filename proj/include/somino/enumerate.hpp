#pragma once

#include <functional>
#include <vector>

#include "somino/tower.hpp"
#include "somino/types.hpp"

namespace somino {

struct EnumSpec {
    WidthList widths;
    std::vector<int> nvec;             // blocks per width, sum >= 1
    ClassSpec cls = ClassSpec::total();
    bool restricted = false;
    int cap = 8;                       // refuse jobs with sum(nvec) > cap
};

// Visits every tower of the family exactly once.  Free-standing families
// (wb/u/total) are produced in canonical position; platform families in
// absolute platform coordinates.  Visit order is deterministic but
// unspecified; enumerate_towers sorts.
void for_each_tower(const EnumSpec& spec, const std::function<void(const Tower&)>& visit);

// All towers, sorted by the lexicographic order of their serialized form.
std::vector<Tower> enumerate_towers(const EnumSpec& spec);

Int count_towers(const EnumSpec& spec);

// Row-convex towers of n width-k blocks on a platform of width l*k, in
// platform coordinates; n = 0 yields the single empty tower.
std::vector<Tower> enumerate_row_convex(int l, int n, int k, int cap = 8);
Int count_row_convex(int l, int n, int k, int cap = 8);

}  // namespace somino
