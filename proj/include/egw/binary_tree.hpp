#ifndef EGW_BINARY_TREE_HPP
#define EGW_BINARY_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "egw/distance_sequence.hpp"
#include "egw/hypergraph.hpp"

namespace egw {

using NodeId = std::uint32_t;
constexpr NodeId kNoNode = 0xFFFFFFFFu;

/// Rooted ordered binary tree in an arena; every node has 0 or 2 children.
/// Node 0 is the root. Path ids ("", "L", "LR", ...) are derived from the shape.
class BinaryTree {
public:
    BinaryTree();  // single node

    static BinaryTree single() { return {}; }
    /// Full binary tree of height h (2^{h+1}-1 nodes).
    static BinaryTree full(unsigned h);
    /// New root with left subtree l and right subtree r.
    static BinaryTree join(const BinaryTree& l, const BinaryTree& r);

    std::size_t size() const { return nodes_.size(); }
    NodeId root() const { return 0; }
    NodeId left(NodeId v) const { return nodes_[v].left; }
    NodeId right(NodeId v) const { return nodes_[v].right; }
    NodeId parent(NodeId v) const { return nodes_[v].parent; }
    bool is_leaf(NodeId v) const { return nodes_[v].left == kNoNode; }

    /// Give leaf v two new leaf children; returns {left, right}.
    std::pair<NodeId, NodeId> split_leaf(NodeId v);
    /// Replace leaf v by a copy of sub (sub's root becomes v).
    void graft(NodeId v, const BinaryTree& sub);
    /// Grow a full tree of height h below leaf v; returns the new leaves left to right.
    std::vector<NodeId> grow_full(NodeId v, unsigned h);

    std::string path_id(NodeId v) const;
    std::vector<unsigned> depths() const;
    /// Preorder, left before right.
    std::vector<NodeId> preorder() const;
    /// Leaves left to right.
    std::vector<NodeId> leaves() const;
    std::size_t num_leaves() const;

    void reserve(std::size_t n) { nodes_.reserve(n); }

private:
    struct Node {
        NodeId left = kNoNode, right = kNoNode, parent = kNoNode;
    };
    std::vector<Node> nodes_;
};

struct TreeHypergraph {
    Hypergraph graph;   // vertex index = node index, id = path id
    bool in_class_cn;   // every leaf has depth >= n-1
};

/// Edges are the n-node downward paths ending at a leaf.
TreeHypergraph hyperedges_of_tree(const BinaryTree& t, unsigned n);

/// Ground-truth sequence of node v by traversal, for s = 2^log_s.
DistanceSequence distance_sequence_bruteforce(const BinaryTree& t, NodeId v, unsigned n,
                                              unsigned log_s);

/// Per-node sequences computed bottom-up with join_under_root.
std::vector<DistanceSequence> distance_sequences_by_combinators(const BinaryTree& t, unsigned n,
                                                                unsigned log_s);

struct TreeReport {
    unsigned min_leaf_depth = 0;
    std::uint64_t max_degree = 0;          // leaves within distance n-1, maximized
    std::vector<std::uint64_t> degree;     // per node
    bool passes = false;
};

/// Degree of v = leaf descendants within distance n-1. Passes iff every leaf has depth
/// >= n-1 and every degree <= s.
TreeReport verify_tree(const BinaryTree& t, unsigned n, std::uint64_t s);

struct SiblingPairing {
    NodeId first_move;  // the root
    Pairing pairing;
};

SiblingPairing sibling_pairing(const BinaryTree& t);
PairingStrategyMaker as_strategy(const SiblingPairing& p);

}  // namespace egw

#endif
