#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fringestat/tree.hpp"

namespace fringestat {

struct IndependenceResult {
    std::uint64_t value = 0;
    // in_set[v] holds iff no child of v is flagged (empty conjunction true:
    // leaves are flagged). The flagged set is the layered independent set
    // and is maximum.
    std::vector<std::uint8_t> in_set;
};

// Flag DP, one reverse generation-order pass, O(n).
IndependenceResult independence(const RootedTree& tree);

// Literal simulation of the stripping sequence: remove all leaves together
// with their parents, repeat, collect the leaves of every round. Quadratic
// in the worst case; exists as a second, independently coded route to the
// same flags and must agree with independence() per node.
IndependenceResult layered_stripping(const RootedTree& tree);

struct DominationResult {
    std::uint64_t value = 0;
    // Minimum dominating-set sizes of the fringe subtree T(v) with v
    // respectively in the set / out but dominated / out and exempt (i.e.
    // dominating T(v) minus v). d1 of a leaf is the sentinel n + 1, strictly
    // larger than any achievable set size.
    std::vector<std::uint32_t> d0, d1, d2;
    // rd[v]: T(v) minus v can be dominated with D(T(v)) - 1 vertices.
    // ri[v]: not rd[v], and some minimum dominating set of T(v) contains v.
    std::vector<std::uint8_t> rd, ri;
};

DominationResult domination(const RootedTree& tree);

// Minimum size of a set S such that every vertex outside S has at least k
// neighbors in S. k = 1 is the domination number. Throws TreeError on k = 0
// and on k > 3 for BST-tagged trees (nodes there have at most 3 neighbors,
// so any vertex of degree < k would be forced into S and the regime the
// model supports ends at 3).
std::uint64_t k_domination(const RootedTree& tree, std::uint32_t k);

struct ParameterReport {
    std::uint64_t n = 0;
    std::uint64_t I = 0;
    std::uint64_t D = 0;
    std::map<std::uint32_t, std::uint64_t> Dk;
    std::uint64_t M = 0;
    std::uint64_t VC = 0;
    std::optional<std::uint64_t> EC;  // absent for n = 1
    std::uint64_t CC = 0;
    std::int64_t lap1_mult = 0;
};

// I and D from the DPs; the remaining parameters via the tree identities
// M = n - I, VC = M, EC = I (n >= 2), CC = I, lap1_mult = 2I - n.
ParameterReport full_report(const RootedTree& tree, const std::vector<std::uint32_t>& k_list = {2});

// {"n":...,"I":...,"D":...,"Dk":{"2":...},"M":...,"VC":...,"EC":...|null,
//  "CC":...,"lap1_mult":...}. With flags, adds per-node arrays.
std::string report_to_json(const ParameterReport& report);
std::string report_to_json(const ParameterReport& report, const RootedTree& tree, bool with_flags);

}  // namespace fringestat
