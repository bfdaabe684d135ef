#ifndef EGW_SAT_BRIDGE_HPP
#define EGW_SAT_BRIDGE_HPP

#include <utility>
#include <vector>

#include "egw/cnf.hpp"
#include "egw/hypergraph.hpp"

namespace egw {

/// Formula side of a pairing game. Variable i (1-based) belongs to var_pairs[i-1] = (a, b);
/// x_i true means Breaker holds a, false means Breaker holds b.
struct GameFormula {
    CnfFormula formula;
    std::vector<std::pair<Vertex, Vertex>> var_pairs;
    bool maker_wins_immediately = false;  // the first move alone completes an edge
    std::size_t dropped_edges = 0;         // edges Breaker always blocks
};

/// One clause per edge of a k-uniform board under a pure pairing with no leftover.
/// Pairs are ordered by their lexicographically smaller id, which becomes the positive literal.
/// Throws on a non-uniform board, a bad pairing, or (unless allowed) an edge holding both
/// members of a pair.
GameFormula hypergraph_to_cnf(const Hypergraph& h, const PairingStrategyMaker& p,
                              bool allow_tautology = false);

/// Breaker wins against the pairing strategy iff the returned formula is satisfiable.
/// Works for any pairing strategy: the first move is Maker's, a leftover vertex is
/// conceded to Breaker, and edges holding both members of a pair are dropped.
GameFormula pairing_game_formula(const Hypergraph& h, const PairingStrategyMaker& p);

struct BoardFromCnf {
    Hypergraph graph;                 // vertices x1, ~x1, x2, ~x2, ...
    PairingStrategyMaker strategy;    // pure, x_i paired with ~x_i
};

/// Literal vertices, one edge per clause. Requires equal clause widths and no tautology.
BoardFromCnf cnf_to_hypergraph(const CnfFormula& f);

/// Two disjoint copies of the board; the pure pairing uses the pairs of p in both copies
/// and pairs the first move (and leftover) with its copy.
struct DoubledGame {
    DoubledHypergraph doubled;
    PairingStrategyMaker pure;
};

DoubledGame double_with_pairing(const Hypergraph& h, const PairingStrategyMaker& p);

}  // namespace egw

#endif
