#ifndef EGW_GAME_HPP
#define EGW_GAME_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "egw/binary_tree.hpp"
#include "egw/hypergraph.hpp"

namespace egw {

enum class Player : std::uint8_t { Maker, Breaker };
enum class Owner : std::uint8_t { Free, Maker, Breaker };

const char* to_string(Player p);
inline Player other(Player p) { return p == Player::Maker ? Player::Breaker : Player::Maker; }

class IllegalMove : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Move {
    Player player;
    Vertex vertex;
    bool operator==(const Move&) const = default;
};

/// Position of a Maker-Breaker game. Keeps per-edge counts so that a Maker win is
/// detected in O(degree) per move. Moves can be undone.
class GameState {
public:
    explicit GameState(const Hypergraph& board, Player starter = Player::Maker);

    const Hypergraph& board() const { return *board_; }
    Owner owner(Vertex v) const { return owner_[v]; }
    bool is_free(Vertex v) const { return owner_[v] == Owner::Free; }
    Player to_move() const { return to_move_; }
    Player starter() const { return starter_; }
    const std::vector<Move>& history() const { return history_; }
    std::optional<Vertex> last_move_of(Player p) const;
    bool has_moved(Player p) const;
    std::size_t free_count() const { return free_; }

    /// Some edge is entirely Maker's.
    bool maker_completed() const { return completed_ > 0; }
    bool exhausted() const { return free_ == 0; }
    bool over() const { return maker_completed() || exhausted(); }

    /// Claim v for the player to move. Throws IllegalMove on an unknown or claimed vertex.
    void claim(Vertex v);
    void undo();

private:
    const Hypergraph* board_;
    std::vector<Owner> owner_;
    std::vector<std::uint32_t> maker_count_;
    std::size_t completed_ = 0;
    std::size_t free_;
    Player starter_;
    Player to_move_;
    std::vector<Move> history_;
};

class Strategy {
public:
    virtual ~Strategy() = default;
    /// Must return a free vertex while one exists.
    virtual Vertex choose(const GameState& s) const = 0;
    virtual std::string name() const = 0;
};

Vertex lowest_free(const GameState& s);

/// Maker on a tree board: root first, then a child of the deepest node of its chain whose
/// subtree holds no Breaker vertex. Vertex index must equal node index.
class TreeDescentStrategy : public Strategy {
public:
    /// Throws unless every leaf has depth >= n-1.
    TreeDescentStrategy(const BinaryTree& tree, unsigned n);
    Vertex choose(const GameState& s) const override;
    std::string name() const override { return "tree-descent"; }

private:
    const BinaryTree* tree_;
};

/// Maker answers Breaker's move with its partner. Fallback: first move, leftover,
/// lowest vertex of an untouched pair, lowest free vertex.
class PairingStrategy : public Strategy {
public:
    PairingStrategy(const Hypergraph& board, PairingStrategyMaker p);
    Vertex choose(const GameState& s) const override;
    std::string name() const override { return pure() ? "pure-pairing" : "pairing"; }
    bool pure() const { return p_.pure(); }
    const PairingStrategyMaker& plan() const { return p_; }

private:
    PairingStrategyMaker p_;
    std::vector<Vertex> partner_;
    std::vector<std::pair<Vertex, Vertex>> pairs_by_low_;  // pairs sorted by their lower vertex
};

/// Breaker minimizing the potential sum over edges without Breaker vertices of
/// 2^{-(free vertices of the edge)}: picks the vertex with the largest such sum through
/// it, ties to the lowest index.
class ErdosSelfridgeBreaker : public Strategy {
public:
    Vertex choose(const GameState& s) const override;
    std::string name() const override { return "erdos-selfridge"; }
};

/// Uniform choice among free vertices, seeded by (seed, history).
class RandomStrategy : public Strategy {
public:
    explicit RandomStrategy(std::uint64_t seed) : seed_(seed) {}
    Vertex choose(const GameState& s) const override;
    std::string name() const override { return "random"; }

private:
    std::uint64_t seed_;
};

/// Claims the lowest free vertex of a target set, else the lowest free vertex.
class TargetSetStrategy : public Strategy {
public:
    explicit TargetSetStrategy(std::vector<Vertex> targets);
    Vertex choose(const GameState& s) const override;
    std::string name() const override { return "target-set"; }

private:
    std::vector<Vertex> targets_;  // ascending
};

class LowestFreeStrategy : public Strategy {
public:
    Vertex choose(const GameState& s) const override { return lowest_free(s); }
    std::string name() const override { return "lowest-free"; }
};

struct GameResult {
    Player winner = Player::Breaker;
    std::vector<Move> transcript;
    std::optional<std::string> forfeit;  // set when a strategy returned an illegal vertex
};

GameResult play(const Hypergraph& board, const Strategy& maker, const Strategy& breaker,
                Player starter = Player::Maker);

/// Replays a transcript and returns the winner; throws IllegalMove on a bad transcript.
Player replay(const Hypergraph& board, const std::vector<Move>& transcript, Player starter = Player::Maker);

class BoardTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveResult {
    Player winner = Player::Breaker;
    std::size_t states = 0;  // memo entries
};

constexpr std::size_t kDefaultSolverVertexLimit = 24;

/// Minimax over (Maker set, Breaker set) with a transposition table.
SolveResult solve_exhaustive(const Hypergraph& board, Player starter = Player::Maker,
                             std::size_t vertex_limit = kDefaultSolverVertexLimit);

struct AdversaryResult {
    bool strategy_wins = false;               // against every opponent line
    std::optional<std::vector<Move>> refutation;  // an opponent line beating the strategy
    std::size_t leaves = 0;
};

/// Explores every opponent move against a fixed strategy playing `side`.
AdversaryResult adversary_search(const Hypergraph& board, const Strategy& strategy, Player side,
                                 Player starter = Player::Maker, std::size_t leaf_limit = 50'000'000);

/// Tree the board came from, for the structural checker.
struct TreeBoard {
    const BinaryTree* tree;
    unsigned n;
};

struct PairingVerdict {
    bool maker_wins = false;
    std::optional<bool> structural;      // tree board + sibling pairing + leaf depths
    std::optional<bool> side_selection;  // all Breaker selections, at most 2^20
    std::optional<bool> reduction;       // formula unsatisfiable
    std::optional<std::vector<Vertex>> breaker_selection;  // Breaker's winning vertex set
    std::vector<std::string> notes;
};

class CheckerDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct PairingCheckLimits {
    unsigned max_selection_pairs = 20;
    unsigned max_formula_vars = 64;
};

/// Does Maker's pairing strategy win? Runs every applicable checker and throws
/// CheckerDisagreement if two of them differ. Throws if none applies.
PairingVerdict verify_pairing_wins(const Hypergraph& board, const PairingStrategyMaker& p,
                                   std::optional<TreeBoard> tree = std::nullopt,
                                   const PairingCheckLimits& limits = {});

}  // namespace egw

#endif
