#pragma once

#include <vector>

#include "minabc/tree.hpp"

namespace minabc {

// Edge contribution sqrt((x+y-2)/(x*y)). Real arguments are allowed
// (the proofs evaluate it off the integer grid); both must be >= 1.
double edge_f(double x, double y);

// Sum of edge_f over the sorted edge list. n=1 gives 0.
double abc_index(const Tree& t);

struct DegreePairChange {
    double old_x, old_y;
    double new_x, new_y;
};

// Sum of -f(old) + f(new) over the affected edges.
double degree_change_delta(const std::vector<DegreePairChange>& changes);

}  // namespace minabc
