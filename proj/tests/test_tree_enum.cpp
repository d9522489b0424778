#include <doctest.h>

#include <random>
#include <set>

#include "minabc/canonical.hpp"
#include "minabc/degree_sequence.hpp"
#include "minabc/tree_enum.hpp"

using namespace minabc;

TEST_CASE("known free tree counts") {
    // t(n): 1,1,1,2,3,6,11,23,47,106,235,551,...
    const std::int64_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
    for (int n = 1; n <= 14; ++n) CHECK(count_free_trees(n) == expected[n]);
    CHECK(count_free_trees(15) == 7741);
}

TEST_CASE("no duplicates up to n=12") {
    for (int n = 4; n <= 12; ++n) {
        std::set<std::string> forms;
        std::int64_t emitted = 0;
        enumerate_free_trees(n, [&](const Tree& t) {
            ++emitted;
            forms.insert(canonical_form(t));
            return true;
        });
        CHECK(static_cast<std::int64_t>(forms.size()) == emitted);
    }
}

namespace {
// textbook Pruefer decode, independent of the library's generators
Tree pruefer_decode(int n, const std::vector<int>& code) {
    std::vector<int> deg(n, 1);
    for (int x : code) ++deg[x];
    std::vector<Edge> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int x : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Tree::validate(n, edges);
}
}  // namespace

TEST_CASE("completeness: emitted set equals the dedup of all Pruefer trees, n <= 9") {
    for (int n = 3; n <= 9; ++n) {
        std::set<std::string> oracle;
        std::vector<int> code(n - 2, 0);
        for (;;) {
            oracle.insert(canonical_form(pruefer_decode(n, code)));
            int i = n - 3;
            while (i >= 0 && code[i] == n - 1) code[i--] = 0;
            if (i < 0) break;
            ++code[i];
        }
        std::set<std::string> enumerated;
        enumerate_free_trees(n, [&](const Tree& t) {
            enumerated.insert(canonical_form(t));
            return true;
        });
        CHECK(enumerated == oracle);
    }
}

TEST_CASE("every emitted tree validates") {
    enumerate_free_trees(10, [&](const Tree& t) {
        CHECK(t.order() == 10);
        CHECK_NOTHROW(Tree::validate(t.order(), t.edges()));
        return true;
    });
}

TEST_CASE("cap is enforced and configurable") {
    CHECK_THROWS_AS(count_free_trees(23), OrderTooLarge);
    CHECK_THROWS_AS(count_free_trees(1000000), OrderTooLarge);
    CHECK(count_free_trees(5, 5) == 3);
}
