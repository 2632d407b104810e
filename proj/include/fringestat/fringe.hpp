#pragma once

#include <cstdint>
#include <vector>

#include "fringestat/tree.hpp"

namespace fringestat {

// The two toll functions whose fringe sums reproduce whole-tree parameters.
// Both are {0,1}-valued by construction.
enum class Toll {
    independence,
    domination,
};

const char* toll_name(Toll t);

struct FringeSum {
    std::uint64_t value = 0;
    std::vector<std::uint8_t> per_node;
};

// F(T; f) = sum over v of f(T(v)), evaluated via the per-node DP flags
// rather than by materializing each fringe subtree.
//
// independence: per_node[v] = [v in the layered independent set of T(v)],
// and the sum equals independence(tree).value.
//
// domination: per_node[v] for v != root is the root-independent-membership
// flag ri[v]; the root instead gets the Property A indicator (some child
// subtree admits a root-dependent dominating set, or every child subtree has
// root-independent dominating sets that all exclude their root). The sum
// equals domination(tree).value.
FringeSum fringe_sum(const RootedTree& tree, Toll toll);

// Toll of a tree evaluated standalone at its root. as_global_root selects
// the Property A form of the domination toll; the independence toll does not
// distinguish the root.
bool toll_value_standalone(const RootedTree& tree, Toll toll, bool as_global_root);

// For every non-root v: extract T(v) as a standalone tree, evaluate the toll
// on its root (non-root form), compare with per_node[v] computed in situ.
// True iff all agree. Quadratic-ish; test sizes only.
bool toll_locality_check(const RootedTree& tree, Toll toll);

}  // namespace fringestat
