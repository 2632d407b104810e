#include "fringestat/fringe.hpp"

#include "fringestat/params.hpp"

namespace fringestat {

const char* toll_name(Toll t) {
    switch (t) {
        case Toll::independence: return "independence";
        case Toll::domination: return "domination";
    }
    return "?";
}

namespace {

bool property_a(const RootedTree& tree, const DominationResult& dom, NodeId root) {
    bool any_rd = false;
    bool all_ri_exclude = true;
    for (const NodeId* c = tree.children_begin(root); c != tree.children_end(root); ++c) {
        if (dom.rd[*c]) any_rd = true;
        if (dom.rd[*c] || dom.ri[*c]) all_ri_exclude = false;
    }
    // Vacuously true for a childless root: a single vertex dominates itself.
    return any_rd || all_ri_exclude;
}

}  // namespace

FringeSum fringe_sum(const RootedTree& tree, Toll toll) {
    FringeSum fs;
    if (toll == Toll::independence) {
        IndependenceResult ind = independence(tree);
        fs.per_node = std::move(ind.in_set);
    } else {
        DominationResult dom = domination(tree);
        fs.per_node = dom.ri;
        fs.per_node[0] = property_a(tree, dom, 0);
    }
    for (std::uint8_t f : fs.per_node) fs.value += f;
    return fs;
}

bool toll_value_standalone(const RootedTree& tree, Toll toll, bool as_global_root) {
    if (toll == Toll::independence) return independence(tree).in_set[0];
    DominationResult dom = domination(tree);
    if (as_global_root) return property_a(tree, dom, 0);
    return dom.ri[0];
}

bool toll_locality_check(const RootedTree& tree, Toll toll) {
    const FringeSum in_situ = fringe_sum(tree, toll);
    for (NodeId v = 1; v < tree.n(); ++v) {
        RootedTree sub = extract_fringe_subtree(tree, v);
        if (toll_value_standalone(sub, toll, false) != static_cast<bool>(in_situ.per_node[v]))
            return false;
    }
    return true;
}

}  // namespace fringestat
