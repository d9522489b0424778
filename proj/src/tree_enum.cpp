#include "minabc/tree_enum.hpp"

#include <algorithm>

namespace minabc {

namespace {

// Beyer-Hedetniemi successor on canonical level sequences (root level
// 0), reverse-lexicographic order from the path down to the star. The
// explicit-p form replaces everything from position p on, which is the
// jump that skips whole families of off-center rootings at once.
bool bh_next_at(std::vector<int>& s, int p) {
    int n = static_cast<int>(s.size());
    while (p >= 1 && s[p] < 2) --p;
    if (p < 1) return false;
    int q = p - 1;
    while (s[q] != s[p] - 1) --q;
    for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
    return true;
}

bool bh_next(std::vector<int>& s) { return bh_next_at(s, static_cast<int>(s.size()) - 1); }

Tree tree_from_levels(const std::vector<int>& s) {
    int n = static_cast<int>(s.size());
    std::vector<int> parent(n, -1), stack;
    stack.reserve(n);
    for (int i = 0; i < n; ++i) {
        while (!stack.empty() && s[stack.back()] >= s[i]) stack.pop_back();
        if (!stack.empty()) parent[i] = stack.back();
        stack.push_back(i);
    }
    return Tree::from_preorder_parents(parent);
}

// Canonical (BH-maximal) level sequence of t rooted at r: children
// subsequences sorted in decreasing lexicographic order.
std::vector<int> canon_levels(const Tree& t, int v, int parent, int depth) {
    std::vector<std::vector<int>> subs;
    for (int w : t.neighbors(v))
        if (w != parent) subs.push_back(canon_levels(t, w, v, depth + 1));
    std::sort(subs.begin(), subs.end(), std::greater<std::vector<int>>());
    std::vector<int> out{depth};
    for (auto& s : subs) out.insert(out.end(), s.begin(), s.end());
    return out;
}

}  // namespace

void enumerate_bh_level_sequences(int n,
                                  const std::function<bool(const std::vector<int>&)>& yield) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i;  // the path
    for (;;) {
        if (!yield(s)) return;
        if (!bh_next(s)) return;
    }
}

// Walk only the center-rooted candidates: when the rest of the tree is
// too shallow (h2 < h1-1), every later sequence sharing the first
// subtree is also off-center, so the successor is applied inside the
// first subtree directly.
void enumerate_center_rooted(int n, const std::function<bool(const std::vector<int>&)>& yield) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    for (;;) {
        int h1 = 0, h2 = 0;
        int second = 0;
        for (int i = 1; i < n; ++i) {
            h1 = std::max(h1, s[i]);
            if (s[i] == 1 && i > 1 && second == 0) second = i;
        }
        if (second > 0)
            for (int i = second; i < n; ++i) h2 = std::max(h2, s[i]);
        if (h2 >= h1 - 1) {
            if (!yield(s)) return;
            if (!bh_next(s)) return;
        } else {
            // jump: change the first subtree itself
            int p = (second > 0 ? second : n) - 1;
            if (!bh_next_at(s, p)) return;
        }
    }
}

namespace {
// heights of the first subtree and of the rest, root-relative
std::pair<int, int> split_heights(const std::vector<int>& s) {
    int h1 = 0, h2 = 0;
    size_t second = 0;  // start of the second root subtree
    for (size_t i = 1; i < s.size(); ++i) {
        h1 = std::max(h1, s[i]);
        if (s[i] == 1 && i > 1 && second == 0) second = i;
    }
    if (second > 0)
        for (size_t i = second; i < s.size(); ++i) h2 = std::max(h2, s[i]);
    return {h1, h2};
}
}  // namespace

bool levels_center_rooted(const std::vector<int>& s) {
    // In a canonical sequence the leftmost chain is a deepest path, so
    // with H1 = height and H2 = max level outside the first subtree the
    // diameter is H1+H2 and the centers sit on positions {0} (H2 == H1)
    // or {0, 1} (H2 == H1-1). Everything else is rooted off-center.
    auto [h1, h2] = split_heights(s);
    return s.size() < 2 || h2 >= h1 - 1;
}

std::optional<Tree> free_tree_from_levels(const std::vector<int>& s) {
    if (!levels_center_rooted(s)) return std::nullopt;
    auto [h1, h2] = split_heights(s);
    Tree t = tree_from_levels(s);
    if (h2 == h1 - 1 && s.size() > 2) {
        // bicentral: keep the greater of the two center rootings
        if (s < canon_levels(t, 1, -1, 0)) return std::nullopt;
    }
    return t;
}

void enumerate_free_trees(int n, const std::function<bool(const Tree&)>& yield, int cap) {
    if (n < 1) return;
    if (n > cap)
        throw OrderTooLarge("n=" + std::to_string(n) + " above enumeration cap " + std::to_string(cap));
    if (n == 1) {
        yield(Tree::validate(1, {}));
        return;
    }
    enumerate_center_rooted(n, [&](const std::vector<int>& s) {
        if (auto t = free_tree_from_levels(s))
            if (!yield(*t)) return false;
        return true;
    });
}

std::int64_t count_free_trees(int n, int cap) {
    std::int64_t c = 0;
    enumerate_free_trees(n, [&](const Tree&) {
        ++c;
        return true;
    }, cap);
    return c;
}

}  // namespace minabc
