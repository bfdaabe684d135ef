#ifndef EGW_CONSTRUCTIONS_HPP
#define EGW_CONSTRUCTIONS_HPP

#include <cstdint>

#include "egw/binary_tree.hpp"
#include "egw/hypergraph.hpp"

namespace egw {

/// H_T of the full binary tree with n levels (height n-1).
Hypergraph complete_tree_game(unsigned n);

/// Tree whose path hypergraph has every leaf at depth >= n-1 and maximum
/// neighborhood 2^{n-2} + 2^{n-3}. Requires n >= 3.
BinaryTree neighborhood_counterexample(unsigned n);

/// Full tree of height n-1 whose leaves, cut into blocks of 2^{floor(log n)}/2,
/// carry a full subtree of height i on the i-th leaf of each block. Requires n >= 4.
BinaryTree regular_weak(unsigned n);

unsigned floor_log2(std::uint64_t x);
/// Degree budget for regular_weak: 2^{n+1} / 2^{floor(log n)}.
std::uint64_t regular_weak_budget(unsigned n);

}  // namespace egw

#endif
