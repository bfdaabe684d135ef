#include "egw/game.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>

#include "egw/dyadic.hpp"
#include "egw/sat_bridge.hpp"

namespace egw {

const char* to_string(Player p) { return p == Player::Maker ? "Maker" : "Breaker"; }

// GameState

GameState::GameState(const Hypergraph& board, Player starter)
    : board_(&board),
      owner_(board.num_vertices(), Owner::Free),
      maker_count_(board.num_edges(), 0),
      free_(board.num_vertices()),
      starter_(starter),
      to_move_(starter) {}

std::optional<Vertex> GameState::last_move_of(Player p) const {
    for (auto it = history_.rbegin(); it != history_.rend(); ++it)
        if (it->player == p) return it->vertex;
    return std::nullopt;
}

bool GameState::has_moved(Player p) const {
    return std::any_of(history_.begin(), history_.end(), [p](const Move& m) { return m.player == p; });
}

void GameState::claim(Vertex v) {
    if (v >= owner_.size())
        throw IllegalMove(std::string(to_string(to_move_)) + " chose unknown vertex " + std::to_string(v));
    if (owner_[v] != Owner::Free)
        throw IllegalMove(std::string(to_string(to_move_)) + " chose claimed vertex " + std::string(board_->id(v)));
    if (to_move_ == Player::Maker) {
        owner_[v] = Owner::Maker;
        for (auto e : board_->incident(v))
            if (++maker_count_[e] == board_->edge(e).size()) ++completed_;
    } else {
        owner_[v] = Owner::Breaker;
    }
    --free_;
    history_.push_back({to_move_, v});
    to_move_ = other(to_move_);
}

void GameState::undo() {
    if (history_.empty()) throw IllegalMove("undo on the initial position");
    Move m = history_.back();
    history_.pop_back();
    if (m.player == Player::Maker)
        for (auto e : board_->incident(m.vertex))
            if (maker_count_[e]-- == board_->edge(e).size()) --completed_;
    owner_[m.vertex] = Owner::Free;
    ++free_;
    to_move_ = m.player;
}

Vertex lowest_free(const GameState& s) {
    for (Vertex v = 0; v < s.board().num_vertices(); ++v)
        if (s.is_free(v)) return v;
    return kNoVertex;
}

// Strategies

TreeDescentStrategy::TreeDescentStrategy(const BinaryTree& tree, unsigned n) : tree_(&tree) {
    auto depth = tree.depths();
    for (NodeId v = 0; v < tree.size(); ++v)
        if (tree.is_leaf(v) && depth[v] + 1 < n)
            throw std::invalid_argument("tree descent needs every leaf at depth >= n-1; leaf " + tree.path_id(v) +
                                        " has depth " + std::to_string(depth[v]));
}

Vertex TreeDescentStrategy::choose(const GameState& s) const {
    const BinaryTree& t = *tree_;
    if (s.board().num_vertices() != t.size()) throw std::invalid_argument("tree descent: board is not this tree");
    NodeId root = t.root();
    if (s.is_free(root)) return root;
    if (s.owner(root) != Owner::Maker) return lowest_free(s);
    NodeId m = root;
    while (!t.is_leaf(m)) {
        if (s.owner(t.left(m)) == Owner::Maker) m = t.left(m);
        else if (s.owner(t.right(m)) == Owner::Maker) m = t.right(m);
        else break;
    }
    if (t.is_leaf(m)) return lowest_free(s);
    bool tainted_left = false, tainted_right = false;
    for (const Move& mv : s.history()) {
        if (mv.player != Player::Breaker) continue;
        for (NodeId u = mv.vertex; u != kNoNode; u = t.parent(u)) {
            if (t.parent(u) == m) {
                (u == t.left(m) ? tainted_left : tainted_right) = true;
                break;
            }
        }
    }
    if (!tainted_left && s.is_free(t.left(m))) return t.left(m);
    if (!tainted_right && s.is_free(t.right(m))) return t.right(m);
    return lowest_free(s);
}

PairingStrategy::PairingStrategy(const Hypergraph& board, PairingStrategyMaker p) : p_(std::move(p)) {
    validate_pairing_strategy(p_, board.num_vertices());
    partner_ = partner_map(p_.pairing, board.num_vertices());
    for (auto [a, b] : p_.pairing.pairs) pairs_by_low_.push_back(a < b ? std::pair{a, b} : std::pair{b, a});
    std::sort(pairs_by_low_.begin(), pairs_by_low_.end());
}

Vertex PairingStrategy::choose(const GameState& s) const {
    if (p_.first_move && !s.has_moved(Player::Maker) && s.is_free(*p_.first_move)) return *p_.first_move;
    if (auto b = s.last_move_of(Player::Breaker)) {
        Vertex q = partner_[*b];
        if (q != kNoVertex && s.is_free(q)) return q;
    }
    if (p_.pairing.leftover && s.is_free(*p_.pairing.leftover)) return *p_.pairing.leftover;
    for (auto [a, b] : pairs_by_low_)
        if (s.is_free(a) && s.is_free(b)) return a;
    return lowest_free(s);
}

Vertex ErdosSelfridgeBreaker::choose(const GameState& s) const {
    const Hypergraph& h = s.board();
    std::size_t k = 0;
    for (std::size_t e = 0; e < h.num_edges(); ++e) k = std::max(k, h.edge(e).size());
    // Free vertex count per edge, or -1 once Breaker touches it.
    std::vector<long> live_free(h.num_edges());
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        long f = 0;
        for (Vertex v : h.edge(e)) {
            if (s.owner(v) == Owner::Breaker) {
                f = -1;
                break;
            }
            if (s.is_free(v)) ++f;
        }
        live_free[e] = f;
    }
    Vertex best = kNoVertex;
    BigInt best_score = -1;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        if (!s.is_free(v)) continue;
        BigInt score = 0;
        for (auto e : h.incident(v))
            if (live_free[e] >= 0) score += BigInt(1) << (k - static_cast<std::size_t>(live_free[e]));
        if (score > best_score) {
            best_score = score;
            best = v;
        }
    }
    return best;
}

Vertex RandomStrategy::choose(const GameState& s) const {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
    for (const Move& m : s.history()) words.push_back(m.vertex);
    std::seed_seq seq(words.begin(), words.end());
    std::mt19937_64 rng(seq);
    std::size_t nfree = s.free_count();
    if (nfree == 0) return kNoVertex;
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, nfree - 1)(rng);
    for (Vertex v = 0; v < s.board().num_vertices(); ++v)
        if (s.is_free(v) && pick-- == 0) return v;
    return kNoVertex;
}

TargetSetStrategy::TargetSetStrategy(std::vector<Vertex> targets) : targets_(std::move(targets)) {
    std::sort(targets_.begin(), targets_.end());
}

Vertex TargetSetStrategy::choose(const GameState& s) const {
    for (Vertex v : targets_)
        if (v < s.board().num_vertices() && s.is_free(v)) return v;
    return lowest_free(s);
}

// Play

GameResult play(const Hypergraph& board, const Strategy& maker, const Strategy& breaker, Player starter) {
    GameState s(board, starter);
    GameResult r;
    while (!s.over()) {
        Player p = s.to_move();
        Vertex v = (p == Player::Maker ? maker : breaker).choose(s);
        try {
            s.claim(v);
        } catch (const IllegalMove& e) {
            r.forfeit = std::string(e.what()) + " (" + (p == Player::Maker ? maker : breaker).name() + ")";
            r.winner = other(p);
            r.transcript = s.history();
            return r;
        }
    }
    r.winner = s.maker_completed() ? Player::Maker : Player::Breaker;
    r.transcript = s.history();
    return r;
}

Player replay(const Hypergraph& board, const std::vector<Move>& transcript, Player starter) {
    GameState s(board, starter);
    for (std::size_t i = 0; i < transcript.size(); ++i) {
        if (s.over()) throw IllegalMove("move " + std::to_string(i) + " after the game ended");
        if (transcript[i].player != s.to_move())
            throw IllegalMove("move " + std::to_string(i) + " by " + to_string(transcript[i].player) + " out of turn");
        s.claim(transcript[i].vertex);
    }
    if (!s.over()) throw IllegalMove("transcript ends before the game is decided");
    return s.maker_completed() ? Player::Maker : Player::Breaker;
}

// Exhaustive solver

namespace {

class Solver {
public:
    explicit Solver(const Hypergraph& h) {
        for (std::size_t e = 0; e < h.num_edges(); ++e) {
            std::uint32_t m = 0;
            for (Vertex v : h.edge(e)) m |= std::uint32_t{1} << v;
            edges_.push_back(m);
        }
    }

    bool maker_wins(std::uint32_t maker, std::uint32_t breaker, bool maker_to_move) {
        std::uint64_t key = maker | (std::uint64_t{breaker} << 24) | (std::uint64_t{maker_to_move} << 48);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = evaluate(maker, breaker, maker_to_move);
        memo_.emplace(key, r);
        return r;
    }

    std::size_t states() const { return memo_.size(); }

private:
    bool evaluate(std::uint32_t maker, std::uint32_t breaker, bool maker_to_move) {
        std::uint32_t live = 0;
        bool threat = false;
        for (std::uint32_t e : edges_) {
            if ((e & ~maker) == 0) return true;
            if (e & breaker) continue;
            std::uint32_t rest = e & ~maker;
            live |= rest;
            if (std::popcount(rest) == 1) threat = true;
        }
        // Vertices outside every live edge never matter for either side.
        if (live == 0) return false;
        if (maker_to_move) {
            if (threat) return true;
            for (std::uint32_t m = live; m; m &= m - 1)
                if (maker_wins(maker | (m & -m), breaker, false)) return true;
            return false;
        }
        for (std::uint32_t m = live; m; m &= m - 1)
            if (!maker_wins(maker, breaker | (m & -m), true)) return false;
        return true;
    }

    std::vector<std::uint32_t> edges_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

SolveResult solve_exhaustive(const Hypergraph& board, Player starter, std::size_t vertex_limit) {
    const std::size_t cap = std::min<std::size_t>(vertex_limit, 24);
    if (board.num_vertices() > cap)
        throw BoardTooLarge("solver: board has " + std::to_string(board.num_vertices()) + " vertices, limit is " +
                            std::to_string(cap));
    Solver s(board);
    bool mw = s.maker_wins(0, 0, starter == Player::Maker);
    return {mw ? Player::Maker : Player::Breaker, s.states()};
}

// Adversary search

namespace {

struct AdversaryWalk {
    const Strategy& strategy;
    Player side;
    std::size_t limit;
    std::size_t leaves = 0;
    std::optional<std::vector<Move>> refutation;

    // True if the strategy wins from s against every continuation.
    bool walk(GameState& s) {
        if (s.over()) {
            if (++leaves > limit) throw BoardTooLarge("adversary search exceeded " + std::to_string(limit) + " leaves");
            Player w = s.maker_completed() ? Player::Maker : Player::Breaker;
            if (w != side) refutation = s.history();
            return w == side;
        }
        if (s.to_move() == side) {
            Vertex v = strategy.choose(s);
            if (v >= s.board().num_vertices() || !s.is_free(v)) {
                refutation = s.history();
                return false;
            }
            s.claim(v);
            bool ok = walk(s);
            s.undo();
            return ok;
        }
        for (Vertex v = 0; v < s.board().num_vertices(); ++v) {
            if (!s.is_free(v)) continue;
            s.claim(v);
            bool ok = walk(s);
            s.undo();
            if (!ok) return false;
        }
        return true;
    }
};

}  // namespace

AdversaryResult adversary_search(const Hypergraph& board, const Strategy& strategy, Player side, Player starter,
                                 std::size_t leaf_limit) {
    GameState s(board, starter);
    AdversaryWalk w{strategy, side, leaf_limit, 0, std::nullopt};
    AdversaryResult r;
    r.strategy_wins = w.walk(s);
    r.refutation = std::move(w.refutation);
    r.leaves = w.leaves;
    return r;
}

// Pairing verification

namespace {

std::optional<bool> structural_check(const Hypergraph& board, const PairingStrategyMaker& p, const TreeBoard& tb,
                                     std::vector<std::string>& notes) {
    const BinaryTree& t = *tb.tree;
    if (board.num_vertices() != t.size()) {
        notes.push_back("structural: board vertex count differs from the tree");
        return std::nullopt;
    }
    TreeHypergraph th = hyperedges_of_tree(t, tb.n);
    auto edge_list = [](const Hypergraph& h) {
        std::vector<std::vector<Vertex>> out;
        for (std::size_t e = 0; e < h.num_edges(); ++e) out.emplace_back(h.edge(e).begin(), h.edge(e).end());
        std::sort(out.begin(), out.end());
        return out;
    };
    if (edge_list(board) != edge_list(th.graph)) {
        notes.push_back("structural: board is not the path hypergraph of the tree");
        return std::nullopt;
    }
    if (!th.in_class_cn) {
        notes.push_back("structural: some leaf is shallower than n-1");
        return std::nullopt;
    }
    SiblingPairing sp = sibling_pairing(t);
    auto norm = [](const Pairing& q) {
        std::vector<std::pair<Vertex, Vertex>> v;
        for (auto [a, b] : q.pairs) v.push_back(a < b ? std::pair{a, b} : std::pair{b, a});
        std::sort(v.begin(), v.end());
        return v;
    };
    if (p.first_move != std::optional<Vertex>(sp.first_move) || norm(p.pairing) != norm(sp.pairing) ||
        p.pairing.leftover != sp.pairing.leftover) {
        notes.push_back("structural: pairing is not the sibling pairing with the root first");
        return std::nullopt;
    }
    notes.push_back("structural: tree board, every leaf at depth >= n-1, sibling pairing, root first");
    return true;
}

std::optional<bool> selection_check(const Hypergraph& board, const PairingStrategyMaker& p, unsigned max_pairs,
                                    std::optional<std::vector<Vertex>>& selection, std::vector<std::string>& notes) {
    const auto& pairs = p.pairing.pairs;
    if (pairs.size() > max_pairs) {
        notes.push_back("side-selection: skipped, " + std::to_string(pairs.size()) + " pairs > " +
                        std::to_string(max_pairs));
        return std::nullopt;
    }
    const std::size_t m = board.num_edges();
    std::vector<bool> breaker(board.num_vertices(), false);
    if (p.pairing.leftover) breaker[*p.pairing.leftover] = true;
    for (auto [a, b] : pairs) breaker[b] = true;
    std::vector<std::uint32_t> bcount(m, 0);
    std::size_t complete = 0;
    for (std::size_t e = 0; e < m; ++e) {
        for (Vertex v : board.edge(e)) bcount[e] += breaker[v];
        if (bcount[e] == 0) ++complete;
    }
    auto move = [&](Vertex v, bool to_breaker) {
        breaker[v] = to_breaker;
        for (auto e : board.incident(v)) {
            if (to_breaker) {
                if (bcount[e]++ == 0) --complete;
            } else if (--bcount[e] == 0) {
                ++complete;
            }
        }
    };
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t t = 0; t < total; ++t) {
        if (t > 0) {
            auto i = static_cast<std::size_t>(std::countr_zero(t));
            auto [a, b] = pairs[i];
            bool a_to_breaker = !breaker[a];
            move(a, a_to_breaker);
            move(b, !a_to_breaker);
        }
        if (complete == 0) {
            std::vector<Vertex> sel;
            for (Vertex v = 0; v < board.num_vertices(); ++v)
                if (breaker[v]) sel.push_back(v);
            selection = std::move(sel);
            notes.push_back("side-selection: Breaker selection found after " + std::to_string(t + 1) + " of " +
                            std::to_string(total));
            return false;
        }
    }
    notes.push_back("side-selection: all " + std::to_string(total) + " Breaker selections leave a Maker edge");
    return true;
}

std::optional<bool> reduction_check(const Hypergraph& board, const PairingStrategyMaker& p, unsigned max_vars,
                                    std::optional<std::vector<Vertex>>& selection, std::vector<std::string>& notes) {
    if (p.pairing.pairs.size() > max_vars) {
        notes.push_back("reduction: skipped, " + std::to_string(p.pairing.pairs.size()) + " variables > " +
                        std::to_string(max_vars));
        return std::nullopt;
    }
    GameFormula g = pairing_game_formula(board, p);
    if (g.maker_wins_immediately) {
        notes.push_back("reduction: the first move alone completes an edge");
        return true;
    }
    DpllLimits lim;
    lim.max_vars = max_vars;
    DpllResult r = dpll_sat(g.formula, lim);
    notes.push_back("reduction: " + std::to_string(g.formula.num_vars) + " variables, " +
                    std::to_string(g.formula.clauses.size()) + " clauses, " + (r.sat ? "satisfiable" : "unsatisfiable"));
    if (!r.sat) return true;
    std::vector<Vertex> sel;
    if (p.pairing.leftover) sel.push_back(*p.pairing.leftover);
    for (std::size_t i = 0; i < g.var_pairs.size(); ++i)
        sel.push_back(r.model[i + 1] ? g.var_pairs[i].first : g.var_pairs[i].second);
    std::sort(sel.begin(), sel.end());
    selection = std::move(sel);
    return false;
}

}  // namespace

PairingVerdict verify_pairing_wins(const Hypergraph& board, const PairingStrategyMaker& p,
                                   std::optional<TreeBoard> tree, const PairingCheckLimits& limits) {
    validate_pairing_strategy(p, board.num_vertices());
    PairingVerdict v;
    if (tree) v.structural = structural_check(board, p, *tree, v.notes);
    std::optional<std::vector<Vertex>> sel_a, sel_b;
    v.side_selection = selection_check(board, p, limits.max_selection_pairs, sel_a, v.notes);
    v.reduction = reduction_check(board, p, limits.max_formula_vars, sel_b, v.notes);

    std::optional<bool> consensus;
    for (const auto& r : {v.structural, v.side_selection, v.reduction}) {
        if (!r) continue;
        if (consensus && *consensus != *r) {
            auto show = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; };
            throw CheckerDisagreement(std::string("pairing checkers disagree: structural=") + show(v.structural) +
                                      " side-selection=" + show(v.side_selection) + " reduction=" +
                                      show(v.reduction));
        }
        consensus = r;
    }
    if (!consensus) throw BoardTooLarge("no pairing checker applies to this board");
    v.maker_wins = *consensus;
    if (!v.maker_wins) v.breaker_selection = sel_b ? std::move(sel_b) : std::move(sel_a);
    return v;
}

}  // namespace egw
