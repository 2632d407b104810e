#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fringestat {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

enum class Model {
    bst,
    rrt,
    generic,
};

const char* model_name(Model m);

// Thrown on structurally invalid input (bad parent array, malformed tree
// file, slot inconsistency). The CLI maps it to a usage error.
struct TreeError {
    std::string message;
};

// Immutable rooted tree in generation order: node 0 is the root and
// parent[i] < i for every other node. That invariant makes a plain reverse
// index scan a valid bottom-up traversal, so the DP passes in this project
// need no recursion and no explicit postorder.
//
// Children are stored in CSR form (offsets + flat array) in increasing child
// index, which for generated trees is insertion order. BST trees additionally
// carry left/right slots, since the permutation construction distinguishes
// them even though none of the implemented parameters depend on slot order.
class RootedTree {
public:
    // parent[0] is ignored (stored as kNoNode); parent[i] < i required for
    // i >= 1. Throws TreeError on violation, on n == 0, on size mismatch,
    // and on a BST tag with more than two children at any node.
    static RootedTree build(Model model, std::vector<NodeId> parent);

    // BST variant with explicit slots. left/right must be consistent with
    // the parent array: every child is its parent's left or right slot.
    static RootedTree build_bst(std::vector<NodeId> parent,
                                std::vector<NodeId> left,
                                std::vector<NodeId> right);

    Model model() const { return model_; }
    std::uint32_t n() const { return n_; }

    NodeId parent(NodeId v) const { return parent_[v]; }
    const std::vector<NodeId>& parents() const { return parent_; }

    std::uint32_t child_count(NodeId v) const { return child_off_[v + 1] - child_off_[v]; }
    const NodeId* children_begin(NodeId v) const { return child_list_.data() + child_off_[v]; }
    const NodeId* children_end(NodeId v) const { return child_list_.data() + child_off_[v + 1]; }

    bool has_slots() const { return !left_.empty(); }
    NodeId left(NodeId v) const { return left_[v]; }
    NodeId right(NodeId v) const { return right_[v]; }

    // Children after parents is the defining property; reverse iteration of
    // [0, n) gives children before parents.
    std::vector<NodeId> postorder() const;

    // subtree_size[v] = 1 + sum over children; subtree_size[0] = n.
    std::vector<std::uint32_t> subtree_sizes() const;

private:
    RootedTree() = default;
    void build_children();

    Model model_ = Model::generic;
    std::uint32_t n_ = 0;
    std::vector<NodeId> parent_;
    std::vector<std::uint32_t> child_off_;
    std::vector<NodeId> child_list_;
    std::vector<NodeId> left_;
    std::vector<NodeId> right_;
};

// Copies the subtree rooted at v into a standalone tree. Kept node ids are
// relabelled by rank, which preserves generation order; the result is tagged
// generic because slot information is not carried over.
RootedTree extract_fringe_subtree(const RootedTree& tree, NodeId v);

// {"model":"bst"|"rrt"|"generic","n":<int>,"parent":[-1,...]}
std::string tree_to_json(const RootedTree& tree);
// Throws TreeError with a field diagnostic on malformed input. A tree parsed
// with model "bst" gets its slots synthesized in child-index order, because
// the interchange format carries only the parent array.
RootedTree tree_from_json(const std::string& text);
RootedTree tree_from_json_file(const std::string& path);

// Directed edges parent -> child, node labels are indices.
std::string tree_to_dot(const RootedTree& tree);

}  // namespace fringestat
