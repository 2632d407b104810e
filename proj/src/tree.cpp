#include "fringestat/tree.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace fringestat {

const char* model_name(Model m) {
    switch (m) {
        case Model::bst: return "bst";
        case Model::rrt: return "rrt";
        case Model::generic: return "generic";
    }
    return "?";
}

namespace {

void validate_parent(const std::vector<NodeId>& parent) {
    if (parent.empty()) throw TreeError{"tree must have at least one node"};
    for (std::size_t i = 1; i < parent.size(); ++i) {
        if (parent[i] >= i)
            throw TreeError{"parent[" + std::to_string(i) + "] = " + std::to_string(parent[i]) +
                            " violates generation order (must be < " + std::to_string(i) + ")"};
    }
}

}  // namespace

void RootedTree::build_children() {
    child_off_.assign(n_ + 1, 0);
    for (NodeId i = 1; i < n_; ++i) ++child_off_[parent_[i] + 1];
    for (NodeId v = 0; v < n_; ++v) child_off_[v + 1] += child_off_[v];
    child_list_.resize(n_ ? n_ - 1 : 0);
    std::vector<std::uint32_t> cursor(child_off_.begin(), child_off_.end() - 1);
    for (NodeId i = 1; i < n_; ++i) child_list_[cursor[parent_[i]]++] = i;
}

RootedTree RootedTree::build(Model model, std::vector<NodeId> parent) {
    validate_parent(parent);
    RootedTree t;
    t.model_ = model;
    t.n_ = static_cast<std::uint32_t>(parent.size());
    t.parent_ = std::move(parent);
    t.parent_[0] = kNoNode;
    t.build_children();
    if (model == Model::bst) {
        t.left_.assign(t.n_, kNoNode);
        t.right_.assign(t.n_, kNoNode);
        for (NodeId v = 0; v < t.n_; ++v) {
            std::uint32_t deg = t.child_count(v);
            if (deg > 2)
                throw TreeError{"bst node " + std::to_string(v) + " has " + std::to_string(deg) +
                                " children"};
            // Interchange files carry only the parent array, so slots are
            // synthesized by child appearance order. No computed parameter
            // depends on the assignment.
            const NodeId* c = t.children_begin(v);
            if (deg >= 1) t.left_[v] = c[0];
            if (deg == 2) t.right_[v] = c[1];
        }
    }
    return t;
}

RootedTree RootedTree::build_bst(std::vector<NodeId> parent,
                                 std::vector<NodeId> left,
                                 std::vector<NodeId> right) {
    validate_parent(parent);
    const std::size_t n = parent.size();
    if (left.size() != n || right.size() != n) throw TreeError{"slot arrays must have length n"};
    RootedTree t;
    t.model_ = Model::bst;
    t.n_ = static_cast<std::uint32_t>(n);
    t.parent_ = std::move(parent);
    t.parent_[0] = kNoNode;
    t.build_children();
    t.left_ = std::move(left);
    t.right_ = std::move(right);
    for (NodeId v = 0; v < t.n_; ++v) {
        std::uint32_t deg = t.child_count(v);
        if (deg > 2)
            throw TreeError{"bst node " + std::to_string(v) + " has " + std::to_string(deg) +
                            " children"};
        std::uint32_t slots = 0;
        for (const NodeId* c = t.children_begin(v); c != t.children_end(v); ++c) {
            if (t.left_[v] == *c || t.right_[v] == *c)
                ++slots;
            else
                throw TreeError{"child " + std::to_string(*c) + " of node " + std::to_string(v) +
                                " occupies no slot"};
        }
        std::uint32_t named = (t.left_[v] != kNoNode ? 1u : 0u) + (t.right_[v] != kNoNode ? 1u : 0u);
        if (slots != deg || named != deg)
            throw TreeError{"slots of node " + std::to_string(v) + " disagree with its children"};
    }
    return t;
}

std::vector<NodeId> RootedTree::postorder() const {
    // Reverse of a root-first traversal that pushes children in stored
    // order; children then appear before their parent and in stored order
    // among themselves.
    std::vector<NodeId> out;
    out.reserve(n_);
    std::vector<NodeId> stack;
    stack.push_back(0);
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (const NodeId* c = children_begin(v); c != children_end(v); ++c) stack.push_back(*c);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> RootedTree::subtree_sizes() const {
    std::vector<std::uint32_t> size(n_, 1);
    for (NodeId v = n_; v-- > 1;) size[parent_[v]] += size[v];
    return size;
}

RootedTree extract_fringe_subtree(const RootedTree& tree, NodeId v) {
    std::vector<NodeId> keep;
    std::vector<NodeId> stack{v};
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        keep.push_back(u);
        for (const NodeId* c = tree.children_begin(u); c != tree.children_end(u); ++c)
            stack.push_back(*c);
    }
    // Ranks preserve generation order, so the relabelled parent array is
    // again a valid input for build().
    std::sort(keep.begin(), keep.end());
    std::vector<NodeId> rank(tree.n(), kNoNode);
    for (std::size_t i = 0; i < keep.size(); ++i) rank[keep[i]] = static_cast<NodeId>(i);
    std::vector<NodeId> parent(keep.size(), kNoNode);
    for (std::size_t i = 1; i < keep.size(); ++i) parent[i] = rank[tree.parent(keep[i])];
    return RootedTree::build(Model::generic, std::move(parent));
}

std::string tree_to_json(const RootedTree& tree) {
    nlohmann::json j;
    j["model"] = model_name(tree.model());
    j["n"] = tree.n();
    std::vector<std::int64_t> parent(tree.n());
    parent[0] = -1;
    for (NodeId v = 1; v < tree.n(); ++v) parent[v] = tree.parent(v);
    j["parent"] = parent;
    return j.dump();
}

RootedTree tree_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw TreeError{std::string("tree file is not valid JSON: ") + e.what()};
    }
    if (!j.is_object()) throw TreeError{"tree file must hold a JSON object"};
    for (const char* key : {"model", "n", "parent"})
        if (!j.contains(key)) throw TreeError{std::string("tree object lacks field \"") + key + "\""};
    if (!j["model"].is_string()) throw TreeError{"field \"model\" must be a string"};
    std::string model_text = j["model"].get<std::string>();
    Model model;
    if (model_text == "bst")
        model = Model::bst;
    else if (model_text == "rrt")
        model = Model::rrt;
    else if (model_text == "generic")
        model = Model::generic;
    else
        throw TreeError{"field \"model\" must be one of bst, rrt, generic; got \"" + model_text + "\""};
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1)
        throw TreeError{"field \"n\" must be a positive integer"};
    std::int64_t n = j["n"].get<std::int64_t>();
    if (!j["parent"].is_array()) throw TreeError{"field \"parent\" must be an array"};
    const auto& arr = j["parent"];
    if (static_cast<std::int64_t>(arr.size()) != n)
        throw TreeError{"field \"parent\" has length " + std::to_string(arr.size()) +
                        ", expected n = " + std::to_string(n)};
    std::vector<NodeId> parent(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer())
            throw TreeError{"parent[" + std::to_string(i) + "] is not an integer"};
        std::int64_t p = arr[i].get<std::int64_t>();
        if (i == 0) {
            if (p != -1) throw TreeError{"parent[0] must be -1 (root)"};
            parent[0] = kNoNode;
        } else {
            if (p < 0 || p >= static_cast<std::int64_t>(i))
                throw TreeError{"parent[" + std::to_string(i) + "] = " + std::to_string(p) +
                                " out of range [0, " + std::to_string(i) + ")"};
            parent[i] = static_cast<NodeId>(p);
        }
    }
    return RootedTree::build(model, std::move(parent));
}

RootedTree tree_from_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TreeError{"cannot open tree file: " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return tree_from_json(buf.str());
}

std::string tree_to_dot(const RootedTree& tree) {
    std::ostringstream out;
    out << "digraph tree {\n";
    out << "  0;\n";
    for (NodeId v = 1; v < tree.n(); ++v)
        out << "  " << tree.parent(v) << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace fringestat
