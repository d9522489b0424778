#include "minabc/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace minabc {

Tree Tree::validate(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw NotATree("vertex count must be >= 1");
    if (static_cast<int>(edges.size()) > n - 1) throw CycleDetected("edge count exceeds n-1");
    if (static_cast<int>(edges.size()) < n - 1) throw Disconnected("edge count below n-1");

    Tree t;
    t.n_ = n;
    t.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw NotATree("vertex id out of range");
        if (u == v) throw SelfLoop("vertex " + std::to_string(u));
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = t.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw DuplicateEdge("at vertex " + std::to_string(v));
    }
    // Connectivity; with exactly n-1 edges a connected graph is a tree,
    // and a disconnected one must contain a cycle in some component.
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n) throw Disconnected(std::to_string(reached) + " of " + std::to_string(n) + " vertices reachable");
    return t;
}

Tree Tree::from_parents(const std::vector<int>& parent) {
    int n = static_cast<int>(parent.size());
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int v = 1; v < n; ++v) edges.emplace_back(parent[v], v);
    return validate(n, edges);
}

Tree Tree::from_preorder_parents(const std::vector<int>& parent) {
    int n = static_cast<int>(parent.size());
    Tree t;
    t.n_ = n;
    t.adj_.resize(n);
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
        ++deg[v];
        ++deg[parent[v]];
    }
    for (int v = 0; v < n; ++v) t.adj_[v].reserve(deg[v]);
    // parent[v] < v, so pushing parents first keeps every list sorted
    for (int v = 1; v < n; ++v) t.adj_[v].push_back(parent[v]);
    for (int v = 1; v < n; ++v) t.adj_[parent[v]].push_back(v);
    return t;
}

std::vector<Edge> Tree::edges() const {
    std::vector<Edge> out;
    out.reserve(n_ > 0 ? n_ - 1 : 0);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Tree::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

RootedView::RootedView(const Tree& t, int r) : tree(&t), root(r) {
    int n = t.order();
    parent.assign(n, -1);
    children.assign(n, {});
    bfs_order.clear();
    bfs_order.reserve(n);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(r);
    seen[r] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        bfs_order.push_back(v);
        for (int w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                children[v].push_back(w);
                q.push(w);
            }
    }
}

DegreeSequence::DegreeSequence(std::vector<int> d) : degrees(std::move(d)) {
    if (degrees.empty()) throw InfeasibleSequence("empty sequence");
    if (!std::is_sorted(degrees.begin(), degrees.end(), std::greater<int>()))
        std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    int n = order();
    for (int d0 : degrees)
        if (d0 < 1) throw InfeasibleSequence("nonpositive degree");
    if (sum != 2LL * (n - 1))
        throw InfeasibleSequence("degree sum " + std::to_string(sum) + " != 2(n-1)");
}

std::string to_dot(const Tree& t) {
    std::ostringstream os;
    os << "graph tree {\n";
    for (auto [u, v] : t.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json_edges(const Tree& t) {
    std::ostringstream os;
    os << "{\"n\":" << t.order() << ",\"edges\":[";
    bool first = true;
    for (auto [u, v] : t.edges()) {
        if (!first) os << ",";
        first = false;
        os << "[" << u << "," << v << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace minabc
