#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minabc/degree_sequence.hpp"
#include "minabc/tree.hpp"

namespace minabc {

struct SearchRecord {
    int n = 0;
    double abc = 0.0;
    std::string tree_g6;             // graph6 of the canonical witness
    std::vector<int> degree_sequence;
    std::string method;              // "brute" or "greedy-seq"
    double wall_time = 0.0;
    int ties = 0;

    std::string to_json() const;
    static SearchRecord from_json(const std::string& line);
};

struct SearchOptions {
    int workers = 1;     // OpenMP threads for the parallel kernels
    int enum_cap = 22;
    SequenceFilter filter;
    bool parallel = true;
};

// Minimum over all free trees of order n. Deterministic: ties counted,
// witness is the lexicographically least canonical form.
SearchRecord brute_force_min(int n, const SearchOptions& opts = {});

// Minimum over degree sequences of ABC(greedy_tree(ds)).
SearchRecord greedy_sequence_min(int n, const SearchOptions& opts = {});

// Serial reference implementations, kept for testing the parallel path.
SearchRecord brute_force_min_serial(int n, int enum_cap = 22);
SearchRecord greedy_sequence_min_serial(int n, const SequenceFilter& filter = {});

// JSON-lines result store, one SearchRecord per line, schema-versioned.
class ResultStore {
  public:
    explicit ResultStore(std::string path);
    std::optional<SearchRecord> lookup(int n, const std::string& method) const;
    void append(const SearchRecord& rec);
    const std::vector<SearchRecord>& records() const { return records_; }
    static std::string csv(const std::vector<SearchRecord>& recs);

  private:
    std::string path_;
    std::vector<SearchRecord> records_;
};

struct SweepOutcome {
    std::vector<SearchRecord> records;
    bool verified = true;  // cross-method/self checks held
};

// One record per order; resumable unless force. method: "brute",
// "greedy-seq" or "both" (cross-validates, persists both).
SweepOutcome sweep(int n_from, int n_to, const std::string& method, ResultStore* store,
                   const SearchOptions& opts = {}, bool force = false);

}  // namespace minabc
