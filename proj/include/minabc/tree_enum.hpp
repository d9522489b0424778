#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "minabc/tree.hpp"

namespace minabc {

// Exhaustive free-tree generation, one representative per isomorphism
// class, by the Wright/Richmond/Odlyzko/McKay constant-amortized-time
// level-sequence successor. Soft cap keeps accidental huge runs out;
// raise it explicitly if you mean it.
inline constexpr int kDefaultEnumCap = 22;

void enumerate_free_trees(int n, const std::function<bool(const Tree&)>& yield,
                          int cap = kDefaultEnumCap);

std::int64_t count_free_trees(int n, int cap = kDefaultEnumCap);

// Lower-level split used by the parallel search kernel: the successor
// walk over canonical rooted level sequences is cheap and serial, the
// free-tree canonicity check per candidate is the expensive part and
// embarrassingly parallel.
void enumerate_bh_level_sequences(int n, const std::function<bool(const std::vector<int>&)>& yield);
bool levels_center_rooted(const std::vector<int>& levels);  // O(n), allocation-free
std::optional<Tree> free_tree_from_levels(const std::vector<int>& levels);

}  // namespace minabc
