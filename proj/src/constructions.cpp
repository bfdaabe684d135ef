#include "egw/constructions.hpp"

#include <stdexcept>

namespace egw {

unsigned floor_log2(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("floor_log2(0)");
    unsigned k = 0;
    while (x >>= 1) ++k;
    return k;
}

Hypergraph complete_tree_game(unsigned n) {
    if (n == 0) throw std::invalid_argument("complete_tree_game needs n >= 1");
    return hyperedges_of_tree(BinaryTree::full(n - 1), n).graph;
}

BinaryTree neighborhood_counterexample(unsigned n) {
    if (n < 3) throw std::invalid_argument("neighborhood_counterexample needs n >= 3");
    BinaryTree t = BinaryTree::full(n - 2);
    for (NodeId u : t.leaves()) {
        auto [v, w] = t.split_leaf(u);
        (void)v;
        for (NodeId u2 : t.grow_full(w, n - 3)) {
            auto [v2, w2] = t.split_leaf(u2);
            (void)v2;
            t.grow_full(w2, n - 2);
        }
    }
    return t;
}

std::uint64_t regular_weak_budget(unsigned n) {
    if (n + 1 >= 64) throw std::overflow_error("regular_weak budget overflows 64 bits");
    return (std::uint64_t{1} << (n + 1)) >> floor_log2(n);
}

BinaryTree regular_weak(unsigned n) {
    if (n < 4) throw std::invalid_argument("regular_weak needs n >= 4");
    const unsigned block = (1u << floor_log2(n)) / 2;
    BinaryTree t = BinaryTree::full(n - 1);
    auto leaves = t.leaves();
    for (std::size_t k = 0; k < leaves.size(); ++k)
        t.grow_full(leaves[k], static_cast<unsigned>(k % block));
    return t;
}

}  // namespace egw
