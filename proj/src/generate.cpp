#include "fringestat/generate.hpp"

#include <numeric>
#include <utility>

namespace fringestat {

TreeSample gen_recursive_tree(std::uint32_t n, Seed seed) {
    if (n == 0) throw TreeError{"n must be >= 1"};
    rng::Xoshiro256ss gen(seed.effective());
    std::vector<NodeId> parent(n, 0);
    for (std::uint32_t i = 1; i < n; ++i)
        parent[i] = static_cast<NodeId>(gen.uniform_below(i));
    return TreeSample{RootedTree::build(Model::rrt, std::move(parent)), Model::rrt, n,
                      seed.master, seed.replica};
}

TreeSample gen_bst(std::uint32_t n, Seed seed) {
    if (n == 0) throw TreeError{"n must be >= 1"};
    rng::Xoshiro256ss gen(seed.effective());

    std::vector<std::uint32_t> key(n);
    std::iota(key.begin(), key.end(), 0);
    for (std::uint32_t i = n - 1; i >= 1; --i) {
        std::uint32_t j = static_cast<std::uint32_t>(gen.uniform_below(i + 1));
        std::swap(key[i], key[j]);
    }

    // key[i] is the i-th inserted key, so node indices are insertion order
    // and the generation-order invariant holds by construction.
    std::vector<NodeId> parent(n, 0);
    std::vector<NodeId> left(n, kNoNode);
    std::vector<NodeId> right(n, kNoNode);
    for (std::uint32_t i = 1; i < n; ++i) {
        NodeId cur = 0;
        for (;;) {
            NodeId& slot = key[i] < key[cur] ? left[cur] : right[cur];
            if (slot == kNoNode) {
                slot = i;
                parent[i] = cur;
                break;
            }
            cur = slot;
        }
    }
    return TreeSample{RootedTree::build_bst(std::move(parent), std::move(left), std::move(right)),
                      Model::bst, n, seed.master, seed.replica};
}

std::uint32_t left_subtree_size(const TreeSample& sample) {
    if (sample.model != Model::bst) throw TreeError{"left_subtree_size needs a bst sample"};
    NodeId l = sample.tree.left(0);
    if (l == kNoNode) return 0;
    return sample.tree.subtree_sizes()[l];
}

std::uint32_t cut_size_at_vertex2(const TreeSample& sample) {
    if (sample.model != Model::rrt) throw TreeError{"cut_size_at_vertex2 needs an rrt sample"};
    if (sample.n < 2) throw TreeError{"cut_size_at_vertex2 needs n >= 2"};
    return sample.tree.subtree_sizes()[1];
}

}  // namespace fringestat
