#pragma once

// Shared fixtures for the unit and acceptance suites. Kept free of any test
// framework so both can include it.

#include <cstdint>
#include <vector>

#include "fringestat/params.hpp"
#include "fringestat/tree.hpp"

namespace fringestat::testutil {

// 0 - 1 - ... - n-1
inline RootedTree make_path(std::uint32_t n) {
    std::vector<NodeId> parent(n, kNoNode);
    for (std::uint32_t i = 1; i < n; ++i) parent[i] = i - 1;
    return RootedTree::build(Model::generic, std::move(parent));
}

// Root 0 with n-1 leaf children.
inline RootedTree make_star(std::uint32_t n) {
    std::vector<NodeId> parent(n, kNoNode);
    for (std::uint32_t i = 1; i < n; ++i) parent[i] = 0;
    return RootedTree::build(Model::generic, std::move(parent));
}

// Path of `spine` nodes, each carrying `legs` leaf children.
inline RootedTree make_caterpillar(std::uint32_t spine, std::uint32_t legs) {
    std::vector<NodeId> parent;
    std::vector<NodeId> spine_ids;
    parent.push_back(kNoNode);
    spine_ids.push_back(0);
    for (std::uint32_t s = 1; s < spine; ++s) {
        parent.push_back(spine_ids.back());
        spine_ids.push_back(static_cast<NodeId>(parent.size() - 1));
    }
    for (NodeId s : spine_ids)
        for (std::uint32_t l = 0; l < legs; ++l) parent.push_back(s);
    return RootedTree::build(Model::generic, std::move(parent));
}

// Upper 0.1% points of the chi-square distribution for 1..19 degrees of
// freedom. A correct sampler crosses these with probability 1e-3 per run.
inline constexpr double kChiSq999[20] = {
    0.0,      // unused
    10.8276, 13.8155, 16.2662, 18.4668, 20.515,  22.4577, 24.3219,
    26.1245, 27.8772, 29.5883, 31.2641, 32.9095, 34.5282, 36.1233,
    37.6973, 39.2524, 40.7902, 42.3124, 43.8202,
};

// The parameter identities every tree must satisfy: M = n - I, VC = M,
// EC = I for n >= 2 (absent otherwise), CC = I, lap1_mult = 2I - n.
inline bool affine_identities_hold(const ParameterReport& r) {
    if (r.M != r.n - r.I) return false;
    if (r.VC != r.M) return false;
    if (r.n >= 2) {
        if (!r.EC || *r.EC != r.I) return false;
    } else if (r.EC) {
        return false;
    }
    if (r.CC != r.I) return false;
    if (r.lap1_mult != 2 * static_cast<std::int64_t>(r.I) - static_cast<std::int64_t>(r.n))
        return false;
    return true;
}

}  // namespace fringestat::testutil
