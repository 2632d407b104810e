#include "fringestat/oracle.hpp"

#include <bit>
#include <functional>

namespace fringestat::oracle {

namespace {

void check_budget(const RootedTree& tree, std::uint32_t cap, const char* what) {
    if (tree.n() > cap)
        throw TreeError{std::string(what) + " oracle accepts n <= " + std::to_string(cap) +
                        ", got " + std::to_string(tree.n())};
}

}  // namespace

std::uint64_t brute_max_independent(const RootedTree& tree) {
    check_budget(tree, kMaxSubsetN, "subset");
    const std::uint32_t n = tree.n();
    std::uint64_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (NodeId i = 1; i < n && ok; ++i)
            if ((mask >> i & 1u) && (mask >> tree.parent(i) & 1u)) ok = false;
        if (ok) best = std::max<std::uint64_t>(best, std::popcount(mask));
    }
    return best;
}

std::uint64_t brute_min_dominating(const RootedTree& tree, std::uint32_t k) {
    check_budget(tree, kMaxSubsetN, "subset");
    if (k == 0) throw TreeError{"k must be >= 1"};
    const std::uint32_t n = tree.n();
    std::vector<std::uint32_t> nbr(n, 0);
    for (NodeId i = 1; i < n; ++i) {
        nbr[i] |= 1u << tree.parent(i);
        nbr[tree.parent(i)] |= 1u << i;
    }
    std::uint64_t best = n;  // S = V is always valid
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const std::uint64_t size = std::popcount(mask);
        if (size >= best) continue;
        bool ok = true;
        for (NodeId v = 0; v < n && ok; ++v)
            if (!(mask >> v & 1u) && std::popcount(mask & nbr[v]) < static_cast<int>(k)) ok = false;
        if (ok) best = size;
    }
    return best;
}

std::uint64_t brute_clique_cover(const RootedTree& tree) {
    check_budget(tree, kMaxColoringN, "coloring");
    const std::uint32_t n = tree.n();
    // Proper colorings of the complement graph, branching vertex by vertex
    // with color classes as bitmasks.
    std::vector<std::uint32_t> adjc(n, 0);
    const std::uint32_t all = (1u << n) - 1;
    for (NodeId v = 0; v < n; ++v) adjc[v] = all & ~(1u << v);
    for (NodeId i = 1; i < n; ++i) {
        adjc[i] &= ~(1u << tree.parent(i));
        adjc[tree.parent(i)] &= ~(1u << i);
    }
    for (std::uint32_t t = 1; t <= n; ++t) {
        std::vector<std::uint32_t> cls(t, 0);
        std::function<bool(NodeId)> assign = [&](NodeId v) -> bool {
            if (v == n) return true;
            bool fresh_tried = false;
            for (std::uint32_t c = 0; c < t; ++c) {
                if (cls[c] == 0) {
                    // All empty classes are interchangeable.
                    if (fresh_tried) break;
                    fresh_tried = true;
                }
                if (cls[c] & adjc[v]) continue;
                cls[c] |= 1u << v;
                if (assign(v + 1)) return true;
                cls[c] &= ~(1u << v);
            }
            return false;
        };
        if (assign(0)) return t;
    }
    return n;
}

}  // namespace fringestat::oracle
