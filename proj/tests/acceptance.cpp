// Acceptance suite: one line per criterion, exit 0 only if every
// criterion holds. Criterion 1 carries two flagged reference constants
// (see the notes in the bounds catalog); they are reported and counted
// as failures rather than hidden.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "minabc/abc.hpp"
#include "minabc/bounds.hpp"
#include "minabc/branches.hpp"
#include "minabc/canonical.hpp"
#include "minabc/degree_sequence.hpp"
#include "minabc/graph6.hpp"
#include "minabc/search.hpp"
#include "minabc/transform.hpp"
#include "minabc/tree_enum.hpp"

using namespace minabc;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1_golden() {
    auto t0 = std::chrono::steady_clock::now();
    auto outcomes = bounds::run_golden();
    int strict = 0, defects = 0, unexplained = 0;
    for (const auto& o : outcomes) {
        if (o.match) {
            ++strict;
        } else if (o.row->defect) {
            ++defects;
        } else {
            ++unexplained;
        }
    }
    double secs = seconds_since(t0);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "(%d/%d constants within 1e-6 in %.3fs; %d reference constants are flagged "
                  "as underivable from their expressions -- see catalog notes)",
                  strict, static_cast<int>(outcomes.size()), secs, defects);
    report(1, unexplained == 0 && defects == 0 && secs < 1.0, buf);
}

void criterion2_thresholds() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    ok &= bounds::smallest_negative_threshold("change-20-20", "du", 4, 200) == 14;
    ok &= bounds::smallest_negative_threshold("change-70", "du", 4, 200, {{"k1", 1}}) == 12;
    ok &= bounds::smallest_negative_threshold("change-20-2", "du", 4, 200) == 9;
    ok &= bounds::smallest_negative_threshold("change-70-2", "du", 4, 200, {{"k1", 1}}) == 7;
    double secs = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "(d(u)=14/12/9/7 in %.3fs)", secs);
    report(2, ok && secs < 1.0, buf);
}

std::vector<SearchRecord> g_brute;  // filled by criterion 3, reused by 6

void criterion3_oracle_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    SearchOptions opts;
    opts.workers = 4;
    std::int64_t n18_count = 0;
    for (int n = 4; n <= 18; ++n) {
        SearchRecord b = brute_force_min(n, opts);
        SearchRecord g = greedy_sequence_min(n, opts);
        g_brute.push_back(b);
        if (std::abs(b.abc - g.abc) > 1e-12) {
            ok = false;
            std::printf("  mismatch at n=%d: brute %.12f greedy %.12f\n", n, b.abc, g.abc);
        }
    }
    n18_count = count_free_trees(18);
    ok &= n18_count == 123867;
    // dedup oracle cross-check of the counts at n <= 12
    const std::int64_t tn[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 4; n <= 12; ++n) {
        std::set<std::string> forms;
        enumerate_free_trees(n, [&](const Tree& t) {
            forms.insert(canonical_form(t));
            return true;
        });
        ok &= static_cast<std::int64_t>(forms.size()) == tn[n];
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "(brute == greedy-seq for 4..18, t(18)=%lld, %.1fs < 300s)",
                  static_cast<long long>(n18_count), secs);
    report(3, ok && secs < 300.0, buf);
}

void criterion4_greedy_dominance() {
    std::mt19937_64 rng(20240809);
    bool ok = true;
    for (int s = 0; s < 500; ++s) {
        int n = 4 + static_cast<int>(rng() % 9);
        std::vector<int> degs(n, 1);
        int total = 2 * (n - 1) - n;
        while (total > 0) {
            int i = static_cast<int>(rng() % n);
            if (degs[i] < n - 1) {
                ++degs[i];
                --total;
            }
        }
        DegreeSequence ds(degs);
        double g = abc_index(greedy_tree(ds));
        for (int rep = 0; rep < 100; ++rep) {
            double r = abc_index(random_tree_with_degrees(ds, rng()));
            if (g > r + 1e-12) {
                ok = false;
                break;
            }
        }
    }
    report(4, ok, "(500 sequences x 100 random trees, greedy never exceeded)");
}

void criterion5_delta_soundness() {
    bool ok = true;
    int applications = 0;
    for (const auto& name : transformation_names()) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            auto inst = random_instance(name, seed * 9176 + 3);
            double before = abc_index(inst.tree);
            auto res = apply_transformation(inst.tree, inst.spec);
            double recomputed = abc_index(res.after) - before;
            ++applications;
            if (std::abs(res.predicted_delta - recomputed) >= 1e-12) {
                ok = false;
                std::printf("  %s seed %llu: predicted %.15f recomputed %.15f\n", name.c_str(),
                            static_cast<unsigned long long>(seed), res.predicted_delta,
                            recomputed);
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "(%d specs x 200 applications = %d, |diff| < 1e-12)",
                  static_cast<int>(transformation_names().size()), applications);
    report(5, ok, buf);
}

void criterion6_theorem_conformance() {
    bool ok = true;
    std::string notes;
    for (const auto& rec : g_brute) {
        Tree t = decode_graph6(rec.tree_g6);
        TheoremReport r = check_theorems(t);
        bool asserted = r.internal_paths_absent.pass && r.no_bk_ge5.pass && r.b4_le_4.pass &&
                        r.b1_le_4.pass && r.b2_le_11.pass && r.per_parent_b2_le_6.pass &&
                        r.no_b1_with_b4_same_parent.pass && r.no_b2_with_b4_same_parent.pass &&
                        r.at_most_one_proper_tk.pass;
        if (rec.n >= 10) asserted &= r.pendant_lengths_in_2_3.pass && r.at_most_one_length3.pass;
        if (!asserted) {
            ok = false;
            std::printf("  theorem failure on winner n=%d: %s\n", rec.n, r.to_json().c_str());
        }
        if (rec.n == 14) {
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "  n=14 winner: b1=%d (conjecture b1<=3 %s; the reported three-B1 "
                          "count at n=14 does not occur, by exhaustive search)",
                          r.b1_observed, r.conjecture_b1_le_3 ? "holds" : "violated");
            notes = buf;
        }
    }
    report(6, ok, "(winners 4..18 satisfy every proved structural theorem)");
    if (!notes.empty()) std::printf("%s\n", notes.c_str());
}

void criterion7_forbidden_tables() {
    auto rows = bounds::forbidden_configuration_table();
    auto get = [&](const std::string& ctx, int key) {
        for (const auto& r : rows)
            if (r.context == ctx && r.key == key) return r.min_k1;
        return -1;
    };
    bool ok = true;
    auto expect = [&](const std::string& ctx, int key, int want) {
        if (get(ctx, key) != want) {
            ok = false;
            std::printf("  %s k2=%d: got %d want %d\n", ctx.c_str(), key, get(ctx, key), want);
        }
    };
    for (int k2 : {1, 2, 3, 4}) expect("subtree", k2, 6);
    for (int k2 : {5, 6}) expect("subtree", k2, 5);
    for (int k2 : {7, 8}) expect("subtree", k2, 4);
    for (int k2 : {9, 10}) expect("subtree", k2, 3);
    expect("subtree", 11, 2);
    for (int k2 : {12, 13}) expect("subtree", k2, 1);
    expect("subtree-b2b1", 1, 5);
    for (int k2 : {2, 3}) expect("subtree-b2b1", k2, 4);
    expect("subtree-b2b1", 4, 3);
    for (int k2 : {5, 6}) expect("subtree-b2b1", k2, 2);
    for (int k2 : {7, 8}) expect("subtree-b2b1", k2, 1);
    report(7, ok, "(subtree and B2/B1 forbidden lists match the reference lists exactly)");
}

void criterion8_monotonicity() {
    bool ok = true;
    ok &= bounds::monotonicity_probe("change-20-20", "du", 4, 200).nonincreasing;
    ok &= bounds::monotonicity_probe("lemma-B2-30.g1", "dw", 3, 200).nonincreasing;
    ok &= bounds::monotonicity_probe("lemma-B2-30.g2", "dw", 13, 200).nonincreasing;
    // g(x,y) grid propositions
    for (int dx = 0; dx <= 2 && ok; ++dx)
        for (int dy = 0; dy <= 2 && ok; ++dy)
            for (int x = 2; x <= 50 && ok; ++x)
                for (int y = std::max(2, dy + 1); y <= 50 && ok; ++y) {
                    double g = -edge_f(x, y) + edge_f(x + dx, y - dy);
                    if (-edge_f(x + 1, y) + edge_f(x + 1 + dx, y - dy) < g - 1e-12) ok = false;
                    if (-edge_f(x, y + 1) + edge_f(x + dx, y + 1 - dy) > g + 1e-12) ok = false;
                }
    report(8, ok, "(change-20-20, lemma-B2-30 g1/g2, and the g(x,y) grids)");
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1_golden();
    criterion2_thresholds();
    criterion3_oracle_equivalence();
    criterion4_greedy_dominance();
    criterion5_delta_soundness();
    criterion6_theorem_conformance();
    criterion7_forbidden_tables();
    criterion8_monotonicity();
    std::printf("%d criterion failure(s)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
