#include "minabc/degree_sequence.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include <nlohmann/json.hpp>

#include "minabc/branches.hpp"

namespace minabc {

Tree greedy_tree(const DegreeSequence& ds) {
    const auto& d = ds.degrees;  // nonincreasing
    int n = ds.order();
    if (n == 2) return Tree::validate(2, {{0, 1}});

    // Vertex i takes the i-th largest degree; BFS assignment order is by
    // vertex id, which is largest-degree-first within and across levels.
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::deque<std::pair<int, int>> open;  // (vertex, child slots left)
    open.emplace_back(0, d[0]);
    int next = 1;
    while (next < n) {
        if (open.empty()) throw InfeasibleSequence("ran out of slots");
        auto [v, slots] = open.front();
        open.pop_front();
        for (int s = 0; s < slots && next < n; ++s) {
            edges.emplace_back(v, next);
            open.emplace_back(next, d[next] - 1);
            ++next;
        }
    }
    return Tree::validate(n, edges);
}

Tree random_tree_with_degrees(const DegreeSequence& ds, std::uint64_t seed) {
    const auto& d = ds.degrees;
    int n = ds.order();
    if (n == 2) return Tree::validate(2, {{0, 1}});

    std::vector<int> pool;  // vertex v repeated d[v]-1 times
    pool.reserve(2 * (n - 1) - n);
    for (int v = 0; v < n; ++v)
        for (int k = 1; k < d[v]; ++k) pool.push_back(v);
    std::mt19937_64 rng(seed);
    std::shuffle(pool.begin(), pool.end(), rng);

    // standard Pruefer decode
    std::vector<int> deg(d.begin(), d.end());
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::vector<char> used(n, 0);
    // min-heap of current leaves
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push_back(v);
    std::make_heap(leaves.begin(), leaves.end(), std::greater<int>());
    for (int code : pool) {
        std::pop_heap(leaves.begin(), leaves.end(), std::greater<int>());
        int leaf = leaves.back();
        leaves.pop_back();
        edges.emplace_back(std::min(leaf, code), std::max(leaf, code));
        if (--deg[code] == 1) {
            leaves.push_back(code);
            std::push_heap(leaves.begin(), leaves.end(), std::greater<int>());
        }
    }
    // two vertices of degree 1 remain
    std::pop_heap(leaves.begin(), leaves.end(), std::greater<int>());
    int a = leaves.back();
    leaves.pop_back();
    std::pop_heap(leaves.begin(), leaves.end(), std::greater<int>());
    int b = leaves.back();
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Tree::validate(n, edges);
}

bool SequenceFilter::accepts(const DegreeSequence& ds) const {
    int n = ds.order();
    if (n < 10) return true;
    const auto& d = ds.degrees;
    int big = 0, deg2 = 0, leaves = 0;
    for (int x : d) {
        if (x >= 3) {
            ++big;
        } else if (x == 2) {
            ++deg2;
        } else {
            ++leaves;
        }
    }
    if (forbid_internal_degree2 && big >= 1) {
        // No internal paths and pendant paths of length >= 2 put every
        // degree-2 vertex on its own leaf's pendant path.
        if (deg2 < leaves) return false;
    }
    if (pendant_path_budget) {
        if (deg2 > leaves + 1) return false;
    }
    if (bk_count_caps && big >= 1) {
        BranchProfile p = analyze(greedy_tree(ds));
        if (p.b_count(1) > 4) return false;
        if (p.b_count(2) > 11) return false;
        if (p.b_count(4) > 4) return false;
        for (const auto& [k, c] : p.b_counts)
            if (k >= 5 && c > 0) return false;
    }
    return true;
}

namespace {

// Successor in lexicographically decreasing order: shrink the rightmost
// shrinkable prefix position and refill greedily. Returns false at the
// last partition.
bool partition_next(std::vector<int>& parts, int n, int total) {
    int idx = -1;
    int prefix = 0;
    for (int i = 0; i < n; ++i) {
        int tail = n - i - 1;
        int rem_after = total - prefix - (parts[i] - 1);
        if (parts[i] > 1 && rem_after >= tail &&
            rem_after <= static_cast<long long>(tail) * (parts[i] - 1))
            idx = i;
        prefix += parts[i];
    }
    if (idx < 0) return false;
    int head = 0;
    for (int i = 0; i < idx; ++i) head += parts[i];
    int v = parts[idx] - 1;
    parts.resize(idx);
    parts.push_back(v);
    int rem = total - head - v, left = n - idx - 1;
    while (left > 0) {
        int p = std::min(v, rem - (left - 1));
        parts.push_back(p);
        rem -= p;
        --left;
    }
    return true;
}

// Partitions of 2(n-1) into exactly n positive parts, each <= n-1,
// emitted in lexicographically decreasing order.
void enumerate_partitions(int n, const SequenceFilter& filter,
                          const std::function<bool(const DegreeSequence&)>& yield,
                          const std::vector<int>* resume_after = nullptr) {
    int total = 2 * (n - 1);
    std::vector<int> parts;
    parts.reserve(n);
    if (resume_after) {
        parts = *resume_after;
        if (!partition_next(parts, n, total)) return;
    } else {
        // first (lex-max) partition: greedy fill with n-1, n parts >= 1
        int rem = total, left = n;
        while (left > 0) {
            int p = std::min(n - 1, rem - (left - 1));
            parts.push_back(p);
            rem -= p;
            --left;
        }
    }
    for (;;) {
        DegreeSequence ds(parts);
        if (filter.accepts(ds))
            if (!yield(ds)) return;
        if (!partition_next(parts, n, total)) return;
    }
}

}  // namespace

void enumerate_degree_sequences(int n, const SequenceFilter& filter,
                                const std::function<bool(const DegreeSequence&)>& yield) {
    if (n < 2) return;  // no positive sequence sums to 0
    enumerate_partitions(n, filter, yield);
}

std::int64_t count_degree_sequences(int n, const SequenceFilter& filter) {
    std::int64_t c = 0;
    enumerate_degree_sequences(n, filter, [&](const DegreeSequence&) {
        ++c;
        return true;
    });
    return c;
}

void enumerate_degree_sequences_after(int n, const std::vector<int>& last_emitted,
                                      const SequenceFilter& filter,
                                      const std::function<bool(const DegreeSequence&)>& yield) {
    if (n < 2) return;
    enumerate_partitions(n, filter, yield, &last_emitted);
}

std::string checkpoint_to_json(int n, const std::vector<int>& last_emitted) {
    std::string s = "{\"n\":" + std::to_string(n) + ",\"last_emitted\":[";
    for (size_t i = 0; i < last_emitted.size(); ++i)
        s += (i ? "," : "") + std::to_string(last_emitted[i]);
    return s + "]}";
}

std::pair<int, std::vector<int>> checkpoint_from_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
        return {j.at("n").get<int>(), j.at("last_emitted").get<std::vector<int>>()};
    } catch (const nlohmann::json::exception& e) {
        throw StoreCorrupt(std::string("checkpoint: ") + e.what());
    }
}

}  // namespace minabc
