#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "minabc/abc.hpp"
#include "minabc/degree_sequence.hpp"
#include "minabc/tree_enum.hpp"

using namespace minabc;
using doctest::Approx;

TEST_CASE("greedy forced trees") {
    Tree p4 = greedy_tree(DegreeSequence({2, 2, 1, 1}));
    CHECK(p4.degree_sequence() == std::vector<int>{2, 2, 1, 1});
    Tree star = greedy_tree(DegreeSequence({4, 1, 1, 1, 1}));
    CHECK(star.degree(0) == 4);
}

TEST_CASE("greedy realizes every sequence up to n=10 at the sequence minimum") {
    for (int n = 4; n <= 10; ++n) {
        // group the exhaustive enumeration by degree sequence
        std::map<std::vector<int>, double> best_by_ds;
        enumerate_free_trees(n, [&](const Tree& t) {
            auto ds = t.degree_sequence();
            double a = abc_index(t);
            auto it = best_by_ds.find(ds);
            if (it == best_by_ds.end() || a < it->second) best_by_ds[ds] = a;
            return true;
        });
        int seqs = 0;
        enumerate_degree_sequences(n, SequenceFilter::none(), [&](const DegreeSequence& ds) {
            ++seqs;
            Tree g = greedy_tree(ds);
            CHECK(g.degree_sequence() == ds.degrees);
            CHECK(abc_index(g) == Approx(best_by_ds.at(ds.degrees)).epsilon(1e-12));
            return true;
        });
        CHECK(seqs == static_cast<int>(best_by_ds.size()));
    }
}

TEST_CASE("sequence enumeration counts and order") {
    std::vector<std::vector<int>> got;
    enumerate_degree_sequences(4, SequenceFilter::none(), [&](const DegreeSequence& ds) {
        got.push_back(ds.degrees);
        return true;
    });
    CHECK(got == std::vector<std::vector<int>>{{3, 1, 1, 1}, {2, 2, 1, 1}});
    CHECK(count_degree_sequences(2, SequenceFilter::none()) == 1);
    // partitions of 18 into 10 positive parts = p(8) = 22 (oracle-fixed)
    CHECK(count_degree_sequences(10, SequenceFilter::none()) == 22);
    CHECK(count_degree_sequences(18, SequenceFilter::none()) == 231);
}

TEST_CASE("enumeration is lexicographically decreasing and exact") {
    for (int n : {6, 9, 12}) {
        std::vector<std::vector<int>> seqs;
        enumerate_degree_sequences(n, SequenceFilter::none(), [&](const DegreeSequence& ds) {
            seqs.push_back(ds.degrees);
            return true;
        });
        CHECK(std::is_sorted(seqs.begin(), seqs.end(), std::greater<std::vector<int>>()));
        std::set<std::vector<int>> uniq(seqs.begin(), seqs.end());
        CHECK(uniq.size() == seqs.size());
        for (const auto& s : seqs) {
            long long sum = 0;
            for (int d : s) sum += d;
            CHECK(sum == 2LL * (n - 1));
        }
    }
}

TEST_CASE("random trees hit the requested degree multiset") {
    DegreeSequence ds({3, 2, 2, 1, 1, 1});
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Tree t = random_tree_with_degrees(ds, seed);
        CHECK(t.degree_sequence() == ds.degrees);
    }
    // forced cases
    CHECK(random_tree_with_degrees(DegreeSequence({1, 1}), 5).order() == 2);
    CHECK(random_tree_with_degrees(DegreeSequence({2, 2, 1, 1}), 9).degree_sequence() ==
          std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("greedy dominance over random realizations") {
    std::mt19937_64 rng(2024);
    int sequences_tested = 0;
    while (sequences_tested < 500) {
        int n = 4 + static_cast<int>(rng() % 9);  // n <= 12
        // random composition into n positive parts summing to 2(n-1)
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
            CHECK(g <= r + 1e-12);
        }
        ++sequences_tested;
    }
}

TEST_CASE("greedy trees are triangle-free by construction") {
    // acyclic, so no three mutually adjacent vertices can exist at all
    enumerate_degree_sequences(9, SequenceFilter::none(), [&](const DegreeSequence& ds) {
        Tree g = greedy_tree(ds);
        for (auto [u, v] : g.edges())
            for (int w : g.neighbors(u))
                if (w != v) {
                    const auto& nb = g.neighbors(v);
                    CHECK(std::find(nb.begin(), nb.end(), w) == nb.end());
                }
        return true;
    });
}

TEST_CASE("filters are conservative and attributable") {
    // the n=10 winner's sequence has one degree-2 vertex per leaf
    SequenceFilter internal_only;
    internal_only.forbid_internal_degree2 = true;
    CHECK(internal_only.accepts(DegreeSequence({3, 3, 2, 2, 2, 2, 1, 1, 1, 1})));
    // too few degree-2 vertices: some leaf has no length-2 pendant path
    CHECK_FALSE(internal_only.accepts(DegreeSequence({4, 4, 2, 2, 1, 1, 1, 1, 1, 1})));
    CHECK_FALSE(internal_only.accepts(DegreeSequence({9, 1, 1, 1, 1, 1, 1, 1, 1, 1})));

    SequenceFilter budget;
    budget.pendant_path_budget = true;
    CHECK_FALSE(budget.accepts(DegreeSequence({2, 2, 2, 2, 2, 2, 2, 2, 1, 1})));  // path P10
    CHECK(budget.accepts(DegreeSequence({4, 4, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1})));

    // filters never apply below n = 10
    CHECK(budget.accepts(DegreeSequence({2, 2, 2, 2, 1, 1})));
}

TEST_CASE("checkpointed resume reproduces the tail of the stream") {
    std::vector<std::vector<int>> all;
    enumerate_degree_sequences(10, SequenceFilter::none(), [&](const DegreeSequence& ds) {
        all.push_back(ds.degrees);
        return true;
    });
    for (size_t cut : {size_t(1), size_t(7), all.size() - 1, all.size()}) {
        std::vector<std::vector<int>> tail;
        enumerate_degree_sequences_after(10, all[cut - 1], SequenceFilter::none(),
                                         [&](const DegreeSequence& ds) {
                                             tail.push_back(ds.degrees);
                                             return true;
                                         });
        CHECK(tail == std::vector<std::vector<int>>(all.begin() + cut, all.end()));
    }
    std::string j = checkpoint_to_json(10, all[6]);
    auto [n, last] = checkpoint_from_json(j);
    CHECK(n == 10);
    CHECK(last == all[6]);
    CHECK_THROWS_AS(checkpoint_from_json("{"), StoreCorrupt);
}

TEST_CASE("degree-7 root with five B2, one B1 and one bare path") {
    // explicit construction; the sequence contains one 7, five 3s,
    // degree-2 chain vertices and leaves
    std::vector<Edge> e;
    int next = 1;
    auto arm = [&](int parent) {
        e.emplace_back(parent, next);
        e.emplace_back(next, next + 1);
        next += 2;
    };
    for (int i = 0; i < 5; ++i) {  // five B2 children
        int r = next++;
        e.emplace_back(0, r);
        arm(r);
        arm(r);
    }
    int b1 = next++;  // one B1 child
    e.emplace_back(0, b1);
    arm(b1);
    arm(0);  // one bare length-2 path to reach degree 7
    Tree t = Tree::validate(next, e);
    CHECK(t.order() == 31);
    CHECK(t.degree(0) == 7);
    auto ds = t.degree_sequence();
    CHECK(std::count(ds.begin(), ds.end(), 7) == 1);
    CHECK(std::count(ds.begin(), ds.end(), 3) == 5);
    CHECK(std::count(ds.begin(), ds.end(), 2) == 13);
    CHECK(std::count(ds.begin(), ds.end(), 1) == 12);
}
