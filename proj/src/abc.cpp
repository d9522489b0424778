#include "minabc/abc.hpp"

#include <cmath>

namespace minabc {

double edge_f(double x, double y) {
    if (!(x >= 1.0) || !(y >= 1.0))
        throw DomainError("edge_f needs arguments >= 1");
    return std::sqrt((x + y - 2.0) / (x * y));
}

double abc_index(const Tree& t) {
    double sum = 0.0;
    for (auto [u, v] : t.edges())
        sum += edge_f(t.degree(u), t.degree(v));
    return sum;
}

double degree_change_delta(const std::vector<DegreePairChange>& changes) {
    double sum = 0.0;
    for (const auto& c : changes)
        sum += -edge_f(c.old_x, c.old_y) + edge_f(c.new_x, c.new_y);
    return sum;
}

}  // namespace minabc
