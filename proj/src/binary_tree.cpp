#include "egw/binary_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace egw {

BinaryTree::BinaryTree() : nodes_(1) {}

BinaryTree BinaryTree::full(unsigned h) {
    if (h > 30) throw std::length_error("full tree of height " + std::to_string(h) + " is too large");
    BinaryTree t;
    t.nodes_.reserve((std::size_t{2} << h) - 1);
    t.grow_full(0, h);
    return t;
}

BinaryTree BinaryTree::join(const BinaryTree& l, const BinaryTree& r) {
    BinaryTree t;
    t.reserve(1 + l.size() + r.size());
    auto [a, b] = t.split_leaf(0);
    t.graft(a, l);
    t.graft(b, r);
    return t;
}

std::pair<NodeId, NodeId> BinaryTree::split_leaf(NodeId v) {
    if (!is_leaf(v)) throw std::logic_error("split_leaf on an internal node");
    auto l = static_cast<NodeId>(nodes_.size());
    auto r = l + 1;
    nodes_.push_back({kNoNode, kNoNode, v});
    nodes_.push_back({kNoNode, kNoNode, v});
    nodes_[v].left = l;
    nodes_[v].right = r;
    return {l, r};
}

void BinaryTree::graft(NodeId v, const BinaryTree& sub) {
    if (!is_leaf(v)) throw std::logic_error("graft on an internal node");
    // Copy in preorder so ids stay grouped by subtree.
    std::vector<std::pair<NodeId, NodeId>> stack{{sub.root(), v}};
    while (!stack.empty()) {
        auto [s, d] = stack.back();
        stack.pop_back();
        if (sub.is_leaf(s)) continue;
        auto [l, r] = split_leaf(d);
        stack.push_back({sub.right(s), r});
        stack.push_back({sub.left(s), l});
    }
}

std::vector<NodeId> BinaryTree::grow_full(NodeId v, unsigned h) {
    std::vector<NodeId> level{v};
    for (unsigned k = 0; k < h; ++k) {
        std::vector<NodeId> next;
        next.reserve(level.size() * 2);
        for (NodeId u : level) {
            auto [l, r] = split_leaf(u);
            next.push_back(l);
            next.push_back(r);
        }
        level = std::move(next);
    }
    return level;
}

std::string BinaryTree::path_id(NodeId v) const {
    std::string s;
    while (v != root()) {
        NodeId p = parent(v);
        s.push_back(left(p) == v ? 'L' : 'R');
        v = p;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::vector<unsigned> BinaryTree::depths() const {
    std::vector<unsigned> d(size(), 0);
    for (NodeId v : preorder())
        if (v != root()) d[v] = d[parent(v)] + 1;
    return d;
}

std::vector<NodeId> BinaryTree::preorder() const {
    std::vector<NodeId> out;
    out.reserve(size());
    std::vector<NodeId> stack{root()};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        out.push_back(v);
        if (!is_leaf(v)) {
            stack.push_back(right(v));
            stack.push_back(left(v));
        }
    }
    return out;
}

std::vector<NodeId> BinaryTree::leaves() const {
    std::vector<NodeId> out;
    for (NodeId v : preorder())
        if (is_leaf(v)) out.push_back(v);
    return out;
}

std::size_t BinaryTree::num_leaves() const { return (size() + 1) / 2; }

TreeHypergraph hyperedges_of_tree(const BinaryTree& t, unsigned n) {
    if (n == 0) throw std::invalid_argument("hyperedges_of_tree needs n >= 1");
    const auto depth = t.depths();

    // Path ids: each node's id extends its parent's.
    std::vector<NodeId> order = t.preorder();
    std::size_t total = 0;
    for (NodeId v = 0; v < t.size(); ++v) total += depth[v];
    IdTable ids;
    ids.reserve(t.size(), total);
    {
        std::vector<std::string> tmp(t.size());
        for (NodeId v : order) {
            if (v == t.root()) continue;
            NodeId p = t.parent(v);
            tmp[v] = tmp[p];
            tmp[v].push_back(t.left(p) == v ? 'L' : 'R');
        }
        for (NodeId v = 0; v < t.size(); ++v) ids.push_back(tmp[v]);
    }

    bool cn = true;
    std::vector<Vertex> data;
    std::vector<std::uint64_t> offsets{0};
    for (NodeId v : order) {
        if (!t.is_leaf(v)) continue;
        if (depth[v] + 1 < n) {
            cn = false;
            continue;
        }
        NodeId u = v;
        for (unsigned k = 0; k < n; ++k) {
            data.push_back(u);
            u = t.parent(u);
        }
        offsets.push_back(data.size());
    }
    return {Hypergraph(std::move(ids), std::move(data), std::move(offsets),
                       {.allow_duplicate_edges = false, .check_unique_ids = false}),
            cn};
}

DistanceSequence distance_sequence_bruteforce(const BinaryTree& t, NodeId v, unsigned n,
                                              unsigned log_s) {
    std::vector<BigInt> counts(n, 0);
    std::vector<std::pair<NodeId, unsigned>> stack{{v, 0}};
    while (!stack.empty()) {
        auto [u, d] = stack.back();
        stack.pop_back();
        if (d >= n) continue;
        if (t.is_leaf(u)) {
            counts[d] += 1;
            continue;
        }
        stack.push_back({t.left(u), d + 1});
        stack.push_back({t.right(u), d + 1});
    }
    return DistanceSequence::from_leaf_counts(n, log_s, counts);
}

std::vector<DistanceSequence> distance_sequences_by_combinators(const BinaryTree& t, unsigned n,
                                                                unsigned log_s) {
    std::vector<DistanceSequence> out(t.size());
    auto order = t.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        NodeId v = *it;
        out[v] = t.is_leaf(v) ? DistanceSequence::single_node(n, log_s)
                              : join_under_root(out[t.left(v)], out[t.right(v)]);
    }
    return out;
}

TreeReport verify_tree(const BinaryTree& t, unsigned n, std::uint64_t s) {
    TreeReport rep;
    rep.degree.assign(t.size(), 0);
    const auto depth = t.depths();
    unsigned min_leaf = ~0u;
    for (NodeId v = 0; v < t.size(); ++v) {
        if (!t.is_leaf(v)) continue;
        min_leaf = std::min(min_leaf, depth[v]);
        NodeId u = v;
        for (unsigned k = 0; k < n && u != kNoNode; ++k) {
            ++rep.degree[u];
            u = t.parent(u);
        }
    }
    rep.min_leaf_depth = min_leaf;
    for (auto d : rep.degree) rep.max_degree = std::max(rep.max_degree, d);
    rep.passes = n >= 1 && rep.min_leaf_depth + 1 >= n && rep.max_degree <= s;
    return rep;
}

SiblingPairing sibling_pairing(const BinaryTree& t) {
    SiblingPairing p{t.root(), {}};
    for (NodeId v : t.preorder())
        if (!t.is_leaf(v)) p.pairing.pairs.emplace_back(t.left(v), t.right(v));
    return p;
}

PairingStrategyMaker as_strategy(const SiblingPairing& p) {
    return {p.first_move, p.pairing};
}

}  // namespace egw
