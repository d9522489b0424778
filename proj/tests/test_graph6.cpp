#include <doctest.h>

#include <random>

#include "minabc/canonical.hpp"
#include "minabc/degree_sequence.hpp"
#include "minabc/graph6.hpp"

using namespace minabc;

TEST_CASE("P2 encodes to the published bytes") {
    Tree p2 = Tree::validate(2, {{0, 1}});
    CHECK(encode_graph6(p2) == "A_");
    CHECK(decode_graph6("A_") == p2);
}

TEST_CASE("malformed inputs") {
    CHECK_THROWS_AS(decode_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS(decode_graph6("A"), MalformedGraph6);     // truncated
    CHECK_THROWS_AS(decode_graph6("A_x"), MalformedGraph6);   // trailing
    CHECK_THROWS_AS(decode_graph6("A\x1f"), MalformedGraph6); // byte out of range
    CHECK_THROWS_AS(decode_graph6("B_"), NotATree);           // triangle-ish bits / wrong count
}

TEST_CASE("decode rejects non-trees") {
    // triangle on 3 vertices: bits 11 1 -> 111000 -> 63+56 = 'w'
    CHECK_THROWS_AS(decode_graph6("Bw"), NotATree);
}

TEST_CASE("round trip on random degree-constrained trees") {
    std::mt19937_64 seeds(42);
    int checked = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        int n = 2 + static_cast<int>(seeds() % 49);
        // random tree via a random Pruefer sequence on a random sequence:
        // use the uniform labeled tree with degrees from a random partition
        std::vector<int> degs;
        {
            // greedy random composition of 2(n-1) into n parts
            int total = 2 * (n - 1);
            degs.assign(n, 1);
            total -= n;
            std::mt19937_64 rng(seeds());
            while (total > 0) {
                int i = static_cast<int>(rng() % n);
                if (degs[i] < n - 1) {
                    ++degs[i];
                    --total;
                }
            }
        }
        Tree t = random_tree_with_degrees(DegreeSequence(degs), seeds());
        Tree back = decode_graph6(encode_graph6(t));
        CHECK(back == t);  // labeled identity
        CHECK(canonical_form(back) == canonical_form(t));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("extended header for n > 62") {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < 100; ++i) e.emplace_back(i, i + 1);
    Tree p100 = Tree::validate(100, e);
    std::string s = encode_graph6(p100);
    CHECK(s[0] == '~');
    CHECK(decode_graph6(s) == p100);
}
