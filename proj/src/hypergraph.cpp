#include "egw/hypergraph.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace egw {

IdTable::IdTable(const std::vector<std::string>& ids) {
    std::size_t total = 0;
    for (const auto& s : ids) total += s.size();
    reserve(ids.size(), total);
    for (const auto& s : ids) push_back(s);
}

void IdTable::push_back(std::string_view id) {
    chars_.append(id);
    offsets_.push_back(chars_.size());
}

void IdTable::reserve(std::size_t count, std::size_t total_chars) {
    chars_.reserve(total_chars);
    offsets_.reserve(count + 1);
}

struct Hypergraph::IndexCache {
    std::once_flag once;
    std::unordered_map<std::string_view, Vertex> map;
};

Hypergraph::Hypergraph() : inc_offsets_{0}, index_(std::make_shared<IndexCache>()) {}

Hypergraph::Hypergraph(IdTable ids, const std::vector<std::vector<Vertex>>& edges, Options opt)
    : ids_(std::move(ids)), index_(std::make_shared<IndexCache>()) {
    std::size_t total = 0;
    for (const auto& e : edges) total += e.size();
    edge_data_.reserve(total);
    edge_offsets_.reserve(edges.size() + 1);
    for (const auto& e : edges) {
        edge_data_.insert(edge_data_.end(), e.begin(), e.end());
        edge_offsets_.push_back(edge_data_.size());
    }
    finish(opt);
}

Hypergraph::Hypergraph(IdTable ids, std::vector<Vertex> data, std::vector<std::uint64_t> offsets,
                       Options opt)
    : ids_(std::move(ids)),
      edge_data_(std::move(data)),
      edge_offsets_(std::move(offsets)),
      index_(std::make_shared<IndexCache>()) {
    if (edge_offsets_.empty() || edge_offsets_.front() != 0 ||
        edge_offsets_.back() != edge_data_.size())
        throw HypergraphError("malformed edge offsets");
    finish(opt);
}

void Hypergraph::finish(Options opt) {
    allow_dup_ = opt.allow_duplicate_edges;
    const std::size_t nv = ids_.size();
    const std::size_t ne = num_edges();

    for (std::size_t e = 0; e < ne; ++e) {
        auto b = edge_data_.begin() + static_cast<std::ptrdiff_t>(edge_offsets_[e]);
        auto en = edge_data_.begin() + static_cast<std::ptrdiff_t>(edge_offsets_[e + 1]);
        if (b == en) throw HypergraphError("edge " + std::to_string(e) + " is empty");
        std::sort(b, en);
        if (std::adjacent_find(b, en) != en)
            throw HypergraphError("edge " + std::to_string(e) + " repeats a vertex");
        if (*(en - 1) >= nv)
            throw HypergraphError("edge " + std::to_string(e) + " references an unknown vertex");
    }

    if (!allow_dup_ && ne > 1) {
        std::vector<std::uint32_t> order(ne);
        for (std::size_t i = 0; i < ne; ++i) order[i] = static_cast<std::uint32_t>(i);
        auto less = [&](std::uint32_t a, std::uint32_t b) {
            auto ea = edge(a), eb = edge(b);
            return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
        };
        std::sort(order.begin(), order.end(), less);
        for (std::size_t i = 1; i < ne; ++i) {
            auto ea = edge(order[i - 1]), eb = edge(order[i]);
            if (std::equal(ea.begin(), ea.end(), eb.begin(), eb.end()))
                throw HypergraphError("duplicate edge at indices " + std::to_string(order[i - 1]) +
                                      " and " + std::to_string(order[i]));
        }
    }

    if (opt.check_unique_ids) {
        std::unordered_map<std::string_view, Vertex> seen;
        seen.reserve(nv);
        for (Vertex v = 0; v < nv; ++v) {
            if (!seen.emplace(ids_[v], v).second)
                throw HypergraphError("duplicate vertex id '" + std::string(ids_[v]) + "'");
        }
    }

    inc_offsets_.assign(nv + 1, 0);
    for (Vertex v : edge_data_) ++inc_offsets_[v + 1];
    for (std::size_t v = 0; v < nv; ++v) inc_offsets_[v + 1] += inc_offsets_[v];
    inc_data_.resize(edge_data_.size());
    std::vector<std::uint64_t> fill(inc_offsets_.begin(), inc_offsets_.end() - 1);
    for (std::size_t e = 0; e < ne; ++e)
        for (Vertex v : edge(e)) inc_data_[fill[v]++] = static_cast<std::uint32_t>(e);
}

Hypergraph Hypergraph::from_ids(const std::vector<std::string>& vertices,
                                const std::vector<std::vector<std::string>>& edges, Options opt) {
    IdTable ids(vertices);
    std::unordered_map<std::string, Vertex> index;
    for (Vertex v = 0; v < vertices.size(); ++v) {
        if (!index.emplace(vertices[v], v).second)
            throw HypergraphError("duplicate vertex id '" + vertices[v] + "'");
    }
    std::vector<std::vector<Vertex>> es;
    es.reserve(edges.size());
    for (const auto& e : edges) {
        std::vector<Vertex> ev;
        for (const auto& id : e) {
            auto it = index.find(id);
            if (it == index.end()) throw HypergraphError("edge references unknown vertex '" + id + "'");
            ev.push_back(it->second);
        }
        es.push_back(std::move(ev));
    }
    opt.check_unique_ids = false;
    return Hypergraph(std::move(ids), es, opt);
}

std::optional<Vertex> Hypergraph::find(std::string_view id) const {
    std::call_once(index_->once, [&] {
        index_->map.reserve(num_vertices());
        for (Vertex v = 0; v < num_vertices(); ++v) index_->map.emplace(ids_[v], v);
    });
    auto it = index_->map.find(id);
    if (it == index_->map.end()) return std::nullopt;
    return it->second;
}

Vertex Hypergraph::at(std::string_view id) const {
    auto v = find(id);
    if (!v) throw HypergraphError("unknown vertex id '" + std::string(id) + "'");
    return *v;
}

std::optional<std::size_t> Hypergraph::uniformity() const {
    if (num_edges() == 0) return std::nullopt;
    std::size_t k = edge(0).size();
    for (std::size_t e = 1; e < num_edges(); ++e)
        if (edge(e).size() != k) return std::nullopt;
    return k;
}

DegreeStats degree_stats(const Hypergraph& h) {
    DegreeStats s;
    s.degree.resize(h.num_vertices());
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        s.degree[v] = h.degree(v);
        s.max_degree = std::max(s.max_degree, s.degree[v]);
    }
    return s;
}

NeighborhoodStats neighborhood_stats(const Hypergraph& h) {
    const std::size_t ne = h.num_edges();
    NeighborhoodStats s;
    s.size.assign(ne, 0);
    std::vector<std::uint32_t> stamp(ne, 0xFFFFFFFFu);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto tag = static_cast<std::uint32_t>(e);
        stamp[e] = tag;
        std::size_t count = 0;
        for (Vertex v : h.edge(e)) {
            for (std::uint32_t f : h.incident(v)) {
                if (stamp[f] != tag) {
                    stamp[f] = tag;
                    ++count;
                }
            }
        }
        s.size[e] = count;
        s.max_size = std::max(s.max_size, count);
    }
    return s;
}

bool is_uniform(const Hypergraph& h, std::size_t n) {
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        if (h.edge(e).size() != n) return false;
    return true;
}

std::vector<Vertex> partner_map(const Pairing& p, std::size_t num_vertices) {
    std::vector<Vertex> f(num_vertices, kNoVertex);
    for (auto [a, b] : p.pairs) {
        if (a >= num_vertices || b >= num_vertices)
            throw HypergraphError("pairing references an unknown vertex");
        if (a == b) throw HypergraphError("vertex paired with itself");
        if (f[a] != kNoVertex || f[b] != kNoVertex)
            throw HypergraphError("pairs are not disjoint");
        f[a] = b;
        f[b] = a;
    }
    if (p.leftover) {
        if (*p.leftover >= num_vertices) throw HypergraphError("leftover is an unknown vertex");
        if (f[*p.leftover] != kNoVertex) throw HypergraphError("leftover vertex is also paired");
    }
    return f;
}

void validate_pairing_strategy(const PairingStrategyMaker& p, std::size_t num_vertices) {
    auto f = partner_map(p.pairing, num_vertices);
    std::size_t unpaired = 0;
    for (Vertex v = 0; v < num_vertices; ++v) {
        if (f[v] != kNoVertex) continue;
        if (p.first_move && v == *p.first_move) continue;
        if (p.pairing.leftover && v == *p.pairing.leftover) continue;
        ++unpaired;
    }
    if (p.first_move) {
        if (*p.first_move >= num_vertices) throw HypergraphError("first move is an unknown vertex");
        if (f[*p.first_move] != kNoVertex) throw HypergraphError("first move vertex is also paired");
        if (p.pairing.leftover && *p.pairing.leftover == *p.first_move)
            throw HypergraphError("first move vertex is also the leftover");
    }
    if (unpaired != 0)
        throw HypergraphError(std::to_string(unpaired) + " vertices are neither paired nor leftover");
}

DoubledHypergraph disjoint_double(const Hypergraph& h) {
    const std::size_t nv = h.num_vertices();
    std::size_t primes = 0;
    std::size_t total = 0;
    for (Vertex v = 0; v < nv; ++v) {
        auto id = h.id(v);
        std::size_t k = 0;
        while (k < id.size() && id[id.size() - 1 - k] == '\'') ++k;
        primes = std::max(primes, k);
        total += id.size();
    }
    const std::string suffix(primes + 1, '\'');

    IdTable ids;
    ids.reserve(2 * nv, 2 * total + nv * suffix.size());
    for (Vertex v = 0; v < nv; ++v) ids.push_back(h.id(v));
    std::string buf;
    for (Vertex v = 0; v < nv; ++v) {
        buf.assign(h.id(v));
        buf += suffix;
        ids.push_back(buf);
    }

    const std::size_t ne = h.num_edges();
    std::vector<Vertex> data;
    std::vector<std::uint64_t> offsets{0};
    for (int copy = 0; copy < 2; ++copy) {
        for (std::size_t e = 0; e < ne; ++e) {
            for (Vertex v : h.edge(e)) data.push_back(copy ? static_cast<Vertex>(v + nv) : v);
            offsets.push_back(data.size());
        }
    }

    DoubledHypergraph out{
        Hypergraph(std::move(ids), std::move(data), std::move(offsets),
                   {.allow_duplicate_edges = h.allows_duplicate_edges(), .check_unique_ids = false}),
        {}};
    out.copy_of.resize(nv);
    for (Vertex v = 0; v < nv; ++v) out.copy_of[v] = static_cast<Vertex>(v + nv);
    return out;
}

Hypergraph mirror_closure(const Hypergraph& h, const Pairing& p) {
    if (p.leftover) throw HypergraphError("mirror closure needs a pairing without leftover");
    auto f = partner_map(p, h.num_vertices());
    for (Vertex v = 0; v < h.num_vertices(); ++v)
        if (f[v] == kNoVertex)
            throw HypergraphError("vertex '" + std::string(h.id(v)) + "' is not paired");

    std::set<std::vector<Vertex>> seen;
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        std::vector<Vertex> ev(h.edge(e).begin(), h.edge(e).end());
        if (seen.insert(ev).second) edges.push_back(ev);
    }
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        std::vector<Vertex> m;
        for (Vertex v : h.edge(e)) m.push_back(f[v]);
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        if (m.size() != h.edge(e).size())
            throw HypergraphError("mirrored edge " + std::to_string(e) + " collapses");
        if (seen.insert(m).second) edges.push_back(std::move(m));
    }
    return Hypergraph(h.ids(), edges, {.allow_duplicate_edges = false, .check_unique_ids = false});
}

}  // namespace egw
