#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "minabc/canonical.hpp"
#include "minabc/tree_enum.hpp"

using namespace minabc;

namespace {
Tree relabel(const Tree& t, const std::vector<int>& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : t.edges())
        e.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    return Tree::validate(t.order(), e);
}
}  // namespace

TEST_CASE("relabeling invariance") {
    Tree p4a = Tree::validate(4, {{0, 1}, {1, 2}, {2, 3}});
    Tree p4b = Tree::validate(4, {{2, 0}, {0, 3}, {3, 1}});  // 2-0-3-1
    CHECK(canonical_form(p4a) == canonical_form(p4b));
    Tree star4 = Tree::validate(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_form(p4a) != canonical_form(star4));
}

TEST_CASE("random permutations preserve the canonical form") {
    std::mt19937_64 rng(7);
    enumerate_free_trees(9, [&](const Tree& t) {
        std::vector<int> perm(t.order());
        for (int i = 0; i < t.order(); ++i) perm[i] = i;
        for (int rep = 0; rep < 5; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(t, perm)) == canonical_form(t));
        }
        return true;
    });
}

TEST_CASE("all 11 trees on 7 vertices get distinct forms") {
    std::set<std::string> forms;
    enumerate_free_trees(7, [&](const Tree& t) {
        forms.insert(canonical_form(t));
        return true;
    });
    CHECK(forms.size() == 11);
}

TEST_CASE("canonical copy is isomorphism-stable") {
    std::mt19937_64 rng(11);
    enumerate_free_trees(8, [&](const Tree& t) {
        std::vector<int> perm(t.order());
        for (int i = 0; i < t.order(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_copy(relabel(t, perm)) == canonical_copy(t));
        return true;
    });
}

TEST_CASE("centroids") {
    Tree p4 = Tree::validate(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(centroids(p4) == std::vector<int>{1, 2});
    Tree p5 = Tree::validate(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(centroids(p5) == std::vector<int>{2});
}
