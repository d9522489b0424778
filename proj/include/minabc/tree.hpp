#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minabc/errors.hpp"

namespace minabc {

using Edge = std::pair<int, int>;

// Undirected simple tree on vertices 0..n-1. Adjacency lists are kept
// sorted, so iteration order (and everything derived from it) is
// deterministic. Instances are immutable after construction; all
// operations below are pure.
class Tree {
  public:
    static Tree validate(int n, const std::vector<Edge>& edges);

    // Trusted constructor for generators that produce parent arrays.
    // parent[v] for v >= 1, parent of root ignored.
    static Tree from_parents(const std::vector<int>& parent);

    // Fast path for the enumerator: parents in preorder (parent[v] < v),
    // producing sorted adjacency directly; no validation pass.
    static Tree from_preorder_parents(const std::vector<int>& parent);

    int order() const { return n_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Sorted (u < v), lexicographic edge list.
    std::vector<Edge> edges() const;

    // Nonincreasing degree multiset.
    std::vector<int> degree_sequence() const;

    bool operator==(const Tree& other) const { return n_ == other.n_ && adj_ == other.adj_; }

  private:
    Tree() = default;
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Rooted access on top of an immutable Tree.
struct RootedView {
    RootedView(const Tree& t, int root);

    const Tree* tree;
    int root;
    std::vector<int> parent;                 // parent[root] == -1
    std::vector<std::vector<int>> children;  // sorted by vertex id
    std::vector<int> bfs_order;
};

// Nonincreasing positive degrees; sum must be 2(n-1).
struct DegreeSequence {
    std::vector<int> degrees;

    explicit DegreeSequence(std::vector<int> d);
    int order() const { return static_cast<int>(degrees.size()); }
};

std::string to_dot(const Tree& t);
std::string to_json_edges(const Tree& t);

}  // namespace minabc
