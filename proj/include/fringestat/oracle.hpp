#pragma once

#include <cstdint>

#include "fringestat/tree.hpp"

namespace fringestat::oracle {

// Enumeration caps. Oracles reject larger inputs by throwing TreeError.
inline constexpr std::uint32_t kMaxSubsetN = 20;
inline constexpr std::uint32_t kMaxColoringN = 10;

// Maximum independent set size over all 2^n vertex subsets.
std::uint64_t brute_max_independent(const RootedTree& tree);

// Minimum size of a set S with every vertex outside S having >= k neighbors
// in S, over all 2^n subsets. S = V is always valid, so a value always
// exists. k >= 1.
std::uint64_t brute_min_dominating(const RootedTree& tree, std::uint32_t k);

// Chromatic number of the complement graph, by branching over colorings.
// Must equal brute_max_independent on trees.
std::uint64_t brute_clique_cover(const RootedTree& tree);

}  // namespace fringestat::oracle
