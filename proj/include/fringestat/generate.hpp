#pragma once

#include <cstdint>

#include "fringestat/rng.hpp"
#include "fringestat/tree.hpp"

namespace fringestat {

// Seeding contract: every sample is generated from an independent stream
// whose seed is rng::stream_seed(master, {replica}). Simulation harnesses
// prepend further indices (e.g. a size index) by pre-mixing the master, which
// composes to the same chain.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t replica = 0;

    std::uint64_t effective() const { return rng::stream_seed(master, {replica}); }
};

struct TreeSample {
    RootedTree tree;
    Model model;
    std::uint32_t n;
    std::uint64_t master_seed;
    std::uint64_t replica_index;
};

// Uniform random recursive tree: node i attaches to a uniform node in
// {0, ..., i-1}. Throws TreeError on n == 0.
TreeSample gen_recursive_tree(std::uint32_t n, Seed seed);

// Binary search tree of a uniform random permutation of {0, ..., n-1}
// (Fisher-Yates shuffle, then sequential insertion). Node i is the i-th
// inserted key, so generation order holds; left/right slots are recorded.
// Throws TreeError on n == 0.
TreeSample gen_bst(std::uint32_t n, Seed seed);

// Size of the root's left subtree, 0 if absent. BST samples only.
std::uint32_t left_subtree_size(const TreeSample& sample);

// Size of the component containing node 1 after removing the edge {0, 1},
// i.e. the subtree size of node 1. RRT samples with n >= 2 only.
std::uint32_t cut_size_at_vertex2(const TreeSample& sample);

}  // namespace fringestat
