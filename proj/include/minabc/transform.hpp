#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minabc/tree.hpp"

namespace minabc {

// A proof transformation bound to concrete vertices. Anchors use the
// proofs' names (u, v, w, z, w1, w2, wk, ...); -1 marks an absent
// parent (root-case variants). Secondary actors (arm vertices, moved
// branch roots) are derived from the tree deterministically.
struct TransformationSpec {
    std::string name;
    std::map<std::string, int> anchors;
};

struct TransformationResult {
    Tree after;
    double predicted_delta;  // closed-form, degree arithmetic only
};

const std::vector<std::string>& transformation_names();

// Checks the structural preconditions, rewires a copy, and returns the
// transformed tree with the proof's closed-form ABC delta. The delta is
// computed from vertex degrees alone (never by re-summing the tree), so
// comparing it against abc(after) - abc(before) is a real consistency
// check on both the mechanics and the bookkeeping.
TransformationResult apply_transformation(const Tree& t, const TransformationSpec& spec);

// Randomized valid instance for a named transformation, for property
// tests and demos. Returns the host tree plus bound anchors.
struct TransformationInstance {
    Tree tree;
    TransformationSpec spec;
};
TransformationInstance random_instance(const std::string& name, std::uint64_t seed);

}  // namespace minabc
