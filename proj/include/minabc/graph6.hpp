#pragma once

#include <string>

#include "minabc/tree.hpp"

namespace minabc {

// graph6, bit-exact per the nauty format description. n <= 62 uses the
// one-byte header, larger n the 4-byte '~' form (supported to 258047,
// far beyond anything this toolkit enumerates).
std::string encode_graph6(const Tree& t);

// Decodes and validates tree-ness (throws NotATree for non-trees,
// MalformedGraph6 for bad bytes).
Tree decode_graph6(const std::string& s);

}  // namespace minabc
