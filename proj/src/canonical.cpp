#include "minabc/canonical.hpp"

#include <algorithm>

namespace minabc {

std::vector<int> centroids(const Tree& t) {
    int n = t.order();
    if (n == 1) return {0};
    std::vector<int> size(n, 1), order;
    order.reserve(n);
    // iterative post-order from vertex 0
    std::vector<int> parent(n, -1), stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];

    std::vector<int> cents;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v];  // parent-side component
        for (int w : t.neighbors(v))
            if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
        if (heaviest <= n / 2) cents.push_back(v);
    }
    std::sort(cents.begin(), cents.end());
    return cents;
}

namespace {

// AHU code of the subtree at v (rooted at r), parenthesis alphabet.
std::string ahu(const Tree& t, int v, int parent) {
    std::vector<std::string> subs;
    for (int w : t.neighbors(v))
        if (w != parent) subs.push_back(ahu(t, w, v));
    std::sort(subs.begin(), subs.end());
    std::string out = "(";
    for (auto& s : subs) out += s;
    out += ")";
    return out;
}

std::string rooted_code(const Tree& t, int root) { return ahu(t, root, -1); }

// Preorder labeling with children visited in AHU order; breaks label
// dependence on the input numbering.
void relabel(const Tree& t, int v, int parent, std::vector<int>& label, int& next) {
    label[v] = next++;
    std::vector<std::pair<std::string, int>> subs;
    for (int w : t.neighbors(v))
        if (w != parent) subs.emplace_back(ahu(t, w, v), w);
    std::sort(subs.begin(), subs.end());
    for (auto& [code, w] : subs) relabel(t, w, v, label, next);
}

}  // namespace

std::string canonical_form(const Tree& t) {
    auto cs = centroids(t);
    std::string best = rooted_code(t, cs[0]);
    if (cs.size() == 2) {
        std::string other = rooted_code(t, cs[1]);
        if (other < best) best = other;
    }
    return best;
}

Tree canonical_copy(const Tree& t) {
    auto cs = centroids(t);
    int root = cs[0];
    if (cs.size() == 2 && rooted_code(t, cs[1]) < rooted_code(t, cs[0]))
        root = cs[1];
    std::vector<int> label(t.order(), -1);
    int next = 0;
    relabel(t, root, -1, label, next);
    std::vector<Edge> edges;
    for (auto [u, v] : t.edges()) {
        int a = label[u], b = label[v];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Tree::validate(t.order(), edges);
}

}  // namespace minabc
