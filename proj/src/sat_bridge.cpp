#include "egw/sat_bridge.hpp"

#include <algorithm>
#include <cstdlib>

namespace egw {

namespace {

// Pairs oriented so the lexicographically smaller id comes first, sorted by that id.
std::vector<std::pair<Vertex, Vertex>> canonical_pairs(const Hypergraph& h, const Pairing& p) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(p.pairs.size());
    for (auto [a, b] : p.pairs) out.push_back(h.id(b) < h.id(a) ? std::pair{b, a} : std::pair{a, b});
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return h.id(x.first) < h.id(y.first); });
    return out;
}

// Literal for each vertex: +i for the first member of pair i, -i for the second, 0 otherwise.
std::vector<Literal> literal_map(const std::vector<std::pair<Vertex, Vertex>>& pairs, std::size_t nv) {
    std::vector<Literal> lit(nv, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        lit[pairs[i].first] = static_cast<Literal>(i + 1);
        lit[pairs[i].second] = -static_cast<Literal>(i + 1);
    }
    return lit;
}

std::string pad(unsigned i, std::size_t width) {
    std::string s = std::to_string(i);
    return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

}  // namespace

GameFormula hypergraph_to_cnf(const Hypergraph& h, const PairingStrategyMaker& p, bool allow_tautology) {
    if (!p.pure()) throw CnfError("hypergraph_to_cnf needs a pure pairing (no first move)");
    if (p.pairing.leftover) throw CnfError("hypergraph_to_cnf needs a pairing without leftover vertex");
    validate_pairing_strategy(p, h.num_vertices());
    if (h.num_edges() > 0 && !h.uniformity()) throw CnfError("hypergraph_to_cnf needs a uniform board");

    GameFormula g;
    g.var_pairs = canonical_pairs(h, p.pairing);
    g.formula.num_vars = static_cast<unsigned>(g.var_pairs.size());
    auto lit = literal_map(g.var_pairs, h.num_vertices());
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        Clause c;
        for (Vertex v : h.edge(e)) c.push_back(lit[v]);
        if (is_tautology(c) && !allow_tautology)
            throw CnfError("edge " + std::to_string(e) + " contains both members of a pair");
        g.formula.clauses.push_back(std::move(c));
    }
    return g;
}

GameFormula pairing_game_formula(const Hypergraph& h, const PairingStrategyMaker& p) {
    validate_pairing_strategy(p, h.num_vertices());
    GameFormula g;
    g.var_pairs = canonical_pairs(h, p.pairing);
    g.formula.num_vars = static_cast<unsigned>(g.var_pairs.size());
    auto lit = literal_map(g.var_pairs, h.num_vertices());
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        Clause c;
        bool blocked = false;
        for (Vertex v : h.edge(e)) {
            if (p.first_move && v == *p.first_move) continue;
            if (p.pairing.leftover && v == *p.pairing.leftover) {
                blocked = true;
                break;
            }
            c.push_back(lit[v]);
        }
        if (!blocked && is_tautology(c)) blocked = true;
        if (blocked) {
            ++g.dropped_edges;
            continue;
        }
        if (c.empty()) g.maker_wins_immediately = true;
        g.formula.clauses.push_back(std::move(c));
    }
    return g;
}

BoardFromCnf cnf_to_hypergraph(const CnfFormula& f) {
    validate(f, false);
    for (std::size_t i = 1; i < f.clauses.size(); ++i)
        if (f.clauses[i].size() != f.clauses[0].size())
            throw CnfError("cnf_to_hypergraph needs equal clause widths; clause " + std::to_string(i) + " has " +
                           std::to_string(f.clauses[i].size()) + ", clause 0 has " +
                           std::to_string(f.clauses[0].size()));
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        if (f.clauses[i].empty()) throw CnfError("cnf_to_hypergraph: clause " + std::to_string(i) + " is empty");

    std::size_t width = std::to_string(std::max(1u, f.num_vars)).size();
    IdTable ids;
    ids.reserve(2 * f.num_vars, 2 * f.num_vars * (width + 2));
    BoardFromCnf out;
    for (unsigned v = 1; v <= f.num_vars; ++v) {
        ids.push_back("x" + pad(v, width));
        ids.push_back("~x" + pad(v, width));
        out.strategy.pairing.pairs.push_back({2 * (v - 1), 2 * (v - 1) + 1});
    }
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) {
        std::vector<Vertex> e;
        for (Literal l : c) e.push_back(2 * (static_cast<Vertex>(std::abs(l)) - 1) + (l < 0 ? 1 : 0));
        edges.push_back(std::move(e));
    }
    HypergraphOptions opt;
    opt.allow_duplicate_edges = true;
    out.graph = Hypergraph(std::move(ids), edges, opt);
    return out;
}

DoubledGame double_with_pairing(const Hypergraph& h, const PairingStrategyMaker& p) {
    validate_pairing_strategy(p, h.num_vertices());
    DoubledGame d{disjoint_double(h), {}};
    const auto& cp = d.doubled.copy_of;
    for (auto [a, b] : p.pairing.pairs) d.pure.pairing.pairs.push_back({a, b});
    for (auto [a, b] : p.pairing.pairs) d.pure.pairing.pairs.push_back({cp[a], cp[b]});
    if (p.first_move) d.pure.pairing.pairs.push_back({*p.first_move, cp[*p.first_move]});
    if (p.pairing.leftover) d.pure.pairing.pairs.push_back({*p.pairing.leftover, cp[*p.pairing.leftover]});
    return d;
}

}  // namespace egw
