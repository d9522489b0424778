#pragma once

#include <map>
#include <string>
#include <vector>

#include "minabc/tree.hpp"

namespace minabc {

// Structural census in the branch vocabulary. Pendant/internal paths
// need an attach vertex of degree > 2, so pure paths come back empty.
struct PendantPath {
    int attach;            // degree > 2 vertex
    int length;            // edges from attach to the leaf
    std::vector<int> path; // attach excluded, ends at the leaf
};

struct InternalPath {
    int end_a, end_b;      // degree > 2 endpoints
    int interior;          // number of degree-2 interior vertices (>= 1)
};

struct BranchProfile {
    std::vector<PendantPath> pendant_paths;
    std::vector<InternalPath> internal_paths;
    std::map<int, int> b_counts;          // k -> number of B_k roots
    std::map<int, int> b_roots_parent;    // B_k root vertex -> attach vertex (-1 standalone)
    std::map<int, int> b_root_k;          // B_k root vertex -> k
    int b3_star = 0;                      // degree-4 roots with arms 2,2,3
    std::vector<std::pair<int, int>> terminal_vertices;  // (vertex, k) with degree k >= 3
    std::vector<std::pair<int, int>> proper_tk_roots;    // (vertex, k)

    int b_count(int k) const {
        auto it = b_counts.find(k);
        return it == b_counts.end() ? 0 : it->second;
    }
};

BranchProfile analyze(const Tree& t);

struct CheckResult {
    bool pass = true;
    std::vector<int> witness;  // offending vertices, empty when passing
};

struct TheoremReport {
    CheckResult internal_paths_absent;
    CheckResult pendant_lengths_in_2_3;
    CheckResult at_most_one_length3;
    CheckResult no_bk_ge5;
    CheckResult b4_le_4;
    CheckResult b1_le_4;
    CheckResult b2_le_11;
    CheckResult per_parent_b2_le_6;       // parents other than the centroid root
    CheckResult no_b1_with_b4_same_parent;
    CheckResult no_b2_with_b4_same_parent;
    CheckResult at_most_one_proper_tk;
    // informational, never asserted
    bool conjecture_b1_le_3 = true;
    bool conjecture_b2_le_9 = true;
    int b1_observed = 0;
    int b2_observed = 0;

    bool all_asserted_pass() const;
    std::string to_json() const;
};

TheoremReport check_theorems(const Tree& t);

}  // namespace minabc
