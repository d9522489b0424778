#include "minabc/branches.hpp"

#include <algorithm>
#include <sstream>

#include "minabc/canonical.hpp"

namespace minabc {

namespace {

// Follows the degree-2 chain starting at (from -> next); returns the
// chain (next..end). Terminates at the first vertex of degree != 2.
std::vector<int> walk_chain(const Tree& t, int from, int next) {
    std::vector<int> chain{next};
    int prev = from, cur = next;
    while (t.degree(cur) == 2) {
        int nxt = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
        chain.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return chain;
}

// Length of the pendant arm v->x (edges to the leaf) if x starts a
// degree-2 chain ending in a leaf; 0 otherwise.
int arm_length(const Tree& t, int v, int x) {
    if (t.degree(x) == 1) return 1;
    if (t.degree(x) != 2) return 0;
    auto chain = walk_chain(t, v, x);
    return t.degree(chain.back()) == 1 ? static_cast<int>(chain.size()) : 0;
}

}  // namespace

BranchProfile analyze(const Tree& t) {
    BranchProfile p;
    int n = t.order();
    if (n < 2) return p;

    // pendant and internal paths from every branching vertex
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) <= 2) continue;
        for (int x : t.neighbors(v)) {
            if (t.degree(x) == 1) {
                p.pendant_paths.push_back({v, 1, {x}});
            } else if (t.degree(x) == 2) {
                auto chain = walk_chain(t, v, x);
                int end = chain.back();
                if (t.degree(end) == 1) {
                    p.pendant_paths.push_back({v, static_cast<int>(chain.size()), chain});
                } else if (v < end) {  // record internal paths once
                    p.internal_paths.push_back({v, end, static_cast<int>(chain.size()) - 1});
                }
            }
        }
    }

    // B_k roots: degree k+1 with k length-2 arms and one other neighbor
    // of degree >= 3 (the attach), or a standalone root whose edges are
    // all length-2 arms. B_3^* : degree-4 root with arms 2,2,3.
    for (int v = 0; v < n; ++v) {
        int deg = t.degree(v);
        if (deg < 2) continue;
        int arms2 = 0, arms3 = 0, attach = -1, other = 0;
        for (int x : t.neighbors(v)) {
            int len = arm_length(t, v, x);
            if (len == 2) {
                ++arms2;
            } else if (len == 3) {
                ++arms3;
            } else {
                ++other;
                attach = x;
            }
        }
        if (arms2 == deg && arms2 >= 2) {  // standalone B_k tree
            p.b_counts[deg] += 1;
            p.b_roots_parent[v] = -1;
            p.b_root_k[v] = deg;
        } else if (arms2 == deg - 1 && other == 1 && t.degree(attach) >= 3) {
            p.b_counts[deg - 1] += 1;
            p.b_roots_parent[v] = attach;
            p.b_root_k[v] = deg - 1;
        }
        if (deg == 4 && arms2 == 2 && arms3 == 1) p.b3_star += 1;
    }

    // terminal vertices and proper T_k roots (rooted at the centroid)
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) < 3) continue;
        bool adj23 = false;
        for (int x : t.neighbors(v)) {
            int len = arm_length(t, v, x);
            if (len == 2 || len == 3) adj23 = true;
        }
        if (adj23) p.terminal_vertices.emplace_back(v, t.degree(v));
    }
    if (!p.terminal_vertices.empty()) {
        RootedView rv(t, centroids(t)[0]);
        for (auto [v, deg] : p.terminal_vertices) {
            int k = (v == rv.root) ? deg : deg - 1;
            bool proper = false;
            for (int c : rv.children[v])
                if (t.degree(c) >= 3) proper = true;
            if (proper) p.proper_tk_roots.emplace_back(v, k);
        }
    }
    return p;
}

bool TheoremReport::all_asserted_pass() const {
    return internal_paths_absent.pass && pendant_lengths_in_2_3.pass &&
           at_most_one_length3.pass && no_bk_ge5.pass && b4_le_4.pass && b1_le_4.pass &&
           b2_le_11.pass && per_parent_b2_le_6.pass && no_b1_with_b4_same_parent.pass &&
           no_b2_with_b4_same_parent.pass && at_most_one_proper_tk.pass;
}

TheoremReport check_theorems(const Tree& t) {
    BranchProfile p = analyze(t);
    TheoremReport r;
    auto fail = [](CheckResult& c, std::vector<int> w) {
        c.pass = false;
        c.witness = std::move(w);
    };

    for (const auto& ip : p.internal_paths)
        fail(r.internal_paths_absent, {ip.end_a, ip.end_b});

    int len3 = 0;
    for (const auto& pp : p.pendant_paths) {
        if (pp.length < 2 || pp.length > 3) fail(r.pendant_lengths_in_2_3, {pp.attach});
        if (pp.length == 3) ++len3;
    }
    if (len3 > 1) {
        std::vector<int> w;
        for (const auto& pp : p.pendant_paths)
            if (pp.length == 3) w.push_back(pp.attach);
        fail(r.at_most_one_length3, w);
    }

    for (const auto& [k, c] : p.b_counts)
        if (k >= 5 && c > 0) fail(r.no_bk_ge5, {k});
    if (p.b_count(4) > 4) fail(r.b4_le_4, {p.b_count(4)});
    if (p.b_count(1) > 4) fail(r.b1_le_4, {p.b_count(1)});
    if (p.b_count(2) > 11) fail(r.b2_le_11, {p.b_count(2)});

    int root = t.order() >= 2 ? centroids(t)[0] : 0;
    std::map<int, std::map<int, int>> per_parent;  // parent -> k -> count
    for (const auto& [v, k] : p.b_root_k) {
        int parent = p.b_roots_parent.at(v);
        if (parent >= 0) per_parent[parent][k] += 1;
    }
    for (const auto& [parent, counts] : per_parent) {
        auto get = [&](int k) {
            auto it = counts.find(k);
            return it == counts.end() ? 0 : it->second;
        };
        if (parent != root && get(2) > 6) fail(r.per_parent_b2_le_6, {parent});
        if (get(1) > 0 && get(4) > 0) fail(r.no_b1_with_b4_same_parent, {parent});
        if (get(2) > 0 && get(4) > 0) fail(r.no_b2_with_b4_same_parent, {parent});
    }

    if (p.proper_tk_roots.size() > 1) {
        std::vector<int> w;
        for (auto [v, k] : p.proper_tk_roots) w.push_back(v);
        fail(r.at_most_one_proper_tk, w);
    }

    r.b1_observed = p.b_count(1);
    r.b2_observed = p.b_count(2);
    r.conjecture_b1_le_3 = r.b1_observed <= 3;
    r.conjecture_b2_le_9 = r.b2_observed <= 9;
    return r;
}

namespace {
void emit(std::ostringstream& os, const char* name, const CheckResult& c, bool& first) {
    if (!first) os << ",";
    first = false;
    os << "\"" << name << "\":{\"pass\":" << (c.pass ? "true" : "false") << ",\"witness\":[";
    for (size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
    os << "]}";
}
}  // namespace

std::string TheoremReport::to_json() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    emit(os, "internal_paths_absent", internal_paths_absent, first);
    emit(os, "pendant_lengths_in_2_3", pendant_lengths_in_2_3, first);
    emit(os, "at_most_one_length3", at_most_one_length3, first);
    emit(os, "no_bk_ge5", no_bk_ge5, first);
    emit(os, "b4_le_4", b4_le_4, first);
    emit(os, "b1_le_4", b1_le_4, first);
    emit(os, "b2_le_11", b2_le_11, first);
    emit(os, "per_parent_b2_le_6", per_parent_b2_le_6, first);
    emit(os, "no_b1_with_b4_same_parent", no_b1_with_b4_same_parent, first);
    emit(os, "no_b2_with_b4_same_parent", no_b2_with_b4_same_parent, first);
    emit(os, "at_most_one_proper_tk", at_most_one_proper_tk, first);
    os << ",\"conjecture_b1_le_3\":" << (conjecture_b1_le_3 ? "true" : "false");
    os << ",\"conjecture_b2_le_9\":" << (conjecture_b2_le_9 ? "true" : "false");
    os << ",\"b1_observed\":" << b1_observed << ",\"b2_observed\":" << b2_observed << "}";
    return os.str();
}

}  // namespace minabc
