// Random instance generators and brute-force oracles shared by the unit tests.
#ifndef EGW_TESTS_GEN_HPP
#define EGW_TESTS_GEN_HPP

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "egw/binary_tree.hpp"
#include "egw/cnf.hpp"
#include "egw/hypergraph.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<std::string> vertex_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
    return v;
}

/// Distinct random edges with sizes in [lo, hi] over nv vertices.
inline egw::Hypergraph hypergraph(Rng& rng, std::size_t nv, std::size_t ne, std::size_t lo, std::size_t hi) {
    std::set<std::vector<egw::Vertex>> edges;
    std::size_t attempts = 0;
    while (edges.size() < ne && attempts++ < 50 * ne + 50) {
        std::size_t k = uniform(rng, lo, std::min(hi, nv));
        std::vector<egw::Vertex> all(nv);
        for (std::size_t i = 0; i < nv; ++i) all[i] = static_cast<egw::Vertex>(i);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(k);
        std::sort(all.begin(), all.end());
        edges.insert(all);
    }
    return egw::Hypergraph(egw::IdTable(vertex_names(nv)), {edges.begin(), edges.end()});
}

/// Random full pairing of 0..nv-1 (nv even).
inline egw::Pairing pairing(Rng& rng, std::size_t nv) {
    std::vector<egw::Vertex> all(nv);
    for (std::size_t i = 0; i < nv; ++i) all[i] = static_cast<egw::Vertex>(i);
    std::shuffle(all.begin(), all.end(), rng);
    egw::Pairing p;
    for (std::size_t i = 0; i + 1 < nv; i += 2) p.pairs.push_back({all[i], all[i + 1]});
    if (nv % 2) p.leftover = all.back();
    return p;
}

/// Split random leaves until the tree has at least `nodes` nodes.
inline egw::BinaryTree tree(Rng& rng, std::size_t nodes) {
    egw::BinaryTree t;
    std::vector<egw::NodeId> leaves{t.root()};
    while (t.size() < nodes) {
        std::size_t i = uniform(rng, 0, leaves.size() - 1);
        egw::NodeId v = leaves[i];
        leaves[i] = leaves.back();
        leaves.pop_back();
        auto [l, r] = t.split_leaf(v);
        leaves.push_back(l);
        leaves.push_back(r);
    }
    return t;
}

inline egw::CnfFormula kcnf(Rng& rng, unsigned k, unsigned nvars, std::size_t nclauses) {
    egw::CnfFormula f{nvars, {}};
    for (std::size_t c = 0; c < nclauses; ++c) {
        std::vector<int> vars(nvars);
        for (unsigned i = 0; i < nvars; ++i) vars[i] = static_cast<int>(i + 1);
        std::shuffle(vars.begin(), vars.end(), rng);
        egw::Clause cl;
        for (unsigned i = 0; i < k; ++i) cl.push_back(uniform(rng, 0, 1) ? vars[i] : -vars[i]);
        f.clauses.push_back(cl);
    }
    return f;
}

/// Satisfiability by trying every assignment.
inline bool brute_sat(const egw::CnfFormula& f) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.num_vars); ++m) {
        std::vector<bool> a(f.num_vars + 1);
        for (unsigned v = 1; v <= f.num_vars; ++v) a[v] = (m >> (v - 1)) & 1;
        if (egw::evaluate(f, a)) return true;
    }
    return false;
}

inline std::vector<std::size_t> brute_degrees(const egw::Hypergraph& h) {
    std::vector<std::size_t> d(h.num_vertices(), 0);
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        for (egw::Vertex v : h.edge(e)) ++d[v];
    return d;
}

inline std::vector<std::size_t> brute_neighborhoods(const egw::Hypergraph& h) {
    std::vector<std::size_t> nb(h.num_edges(), 0);
    for (std::size_t a = 0; a < h.num_edges(); ++a)
        for (std::size_t b = 0; b < h.num_edges(); ++b) {
            if (a == b) continue;
            bool meet = false;
            for (egw::Vertex x : h.edge(a))
                for (egw::Vertex y : h.edge(b))
                    if (x == y) meet = true;
            nb[a] += meet;
        }
    return nb;
}

inline std::size_t max_of(const std::vector<std::size_t>& v) {
    return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

}  // namespace gen

#endif
