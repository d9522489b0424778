#pragma once

#include <string>

#include "minabc/tree.hpp"

namespace minabc {

// Centroid vertices (one or two, sorted).
std::vector<int> centroids(const Tree& t);

// AHU string of the tree rooted at the centroid; for bicentroidal trees
// the lexicographically smaller of the two rootings. Equal byte strings
// iff isomorphic.
std::string canonical_form(const Tree& t);

// Relabeling of t induced by the canonical rooting (preorder over
// AHU-sorted children). canonical_form-equal trees map to identical
// trees, so encode_graph6(canonical_copy(t)) is a canonical code.
Tree canonical_copy(const Tree& t);

}  // namespace minabc
