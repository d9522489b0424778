#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "minabc/tree.hpp"

namespace minabc {

// Theorem-backed sequence pruning. Each toggle is a necessary condition
// for the sequence to realize a minimal-ABC tree; all are conservative
// for the global minimum value. Applied only for n >= 10 (the proved
// structural results assume order at least 10).
struct SequenceFilter {
    bool forbid_internal_degree2 = false;  // leaf count == sum of big degrees - 2(#big - 1)
    bool pendant_path_budget = false;      // #degree-2 <= #leaves + 1
    bool bk_count_caps = false;            // greedy tree obeys proved B_k caps

    static SequenceFilter none() { return {}; }
    static SequenceFilter all() { return {true, true, true}; }

    bool accepts(const DegreeSequence& ds) const;
};

// The greedy realization: root takes the largest degree, then each
// breadth-first level is filled with the largest remaining degrees,
// children of the highest-degree labeled vertex first. Minimizes the
// ABC index over all trees with the given sequence.
Tree greedy_tree(const DegreeSequence& ds);

// Uniform labeled tree conditioned on the degree multiset, via a random
// Pruefer sequence with each vertex v appearing degree(v)-1 times.
Tree random_tree_with_degrees(const DegreeSequence& ds, std::uint64_t seed);

// Yields every nonincreasing positive sequence of length n summing to
// 2(n-1) that passes the filter, in lexicographically decreasing order.
// Return false from the callback to stop early.
void enumerate_degree_sequences(int n, const SequenceFilter& filter,
                                const std::function<bool(const DegreeSequence&)>& yield);

std::int64_t count_degree_sequences(int n, const SequenceFilter& filter);

// Resumable stream: continues strictly after `last_emitted`. Checkpoints
// serialize as JSON {"n":..,"last_emitted":[..]}.
void enumerate_degree_sequences_after(int n, const std::vector<int>& last_emitted,
                                      const SequenceFilter& filter,
                                      const std::function<bool(const DegreeSequence&)>& yield);
std::string checkpoint_to_json(int n, const std::vector<int>& last_emitted);
std::pair<int, std::vector<int>> checkpoint_from_json(const std::string& json);

}  // namespace minabc
