#ifndef EGW_HYPERGRAPH_HPP
#define EGW_HYPERGRAPH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace egw {

using Vertex = std::uint32_t;

class HypergraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertex ids in a flat buffer. Ids are opaque strings; order is the vertex order.
class IdTable {
public:
    IdTable() = default;
    explicit IdTable(const std::vector<std::string>& ids);

    void push_back(std::string_view id);
    std::size_t size() const { return offsets_.size() - 1; }
    std::string_view operator[](Vertex v) const {
        return std::string_view(chars_).substr(offsets_[v], offsets_[v + 1] - offsets_[v]);
    }
    void reserve(std::size_t count, std::size_t total_chars);

private:
    std::string chars_;
    std::vector<std::uint64_t> offsets_{0};
};

struct HypergraphOptions {
    bool allow_duplicate_edges = false;
    bool check_unique_ids = true;
};

/// Finite hypergraph. Edges are stored sorted by vertex index in one flat array.
/// Immutable after construction.
class Hypergraph {
public:
    using Options = HypergraphOptions;

    Hypergraph();
    Hypergraph(IdTable ids, const std::vector<std::vector<Vertex>>& edges, Options opt);
    Hypergraph(IdTable ids, const std::vector<std::vector<Vertex>>& edges)
        : Hypergraph(std::move(ids), edges, Options{}) {}
    /// Flat form: edge i is data[offsets[i] .. offsets[i+1]).
    Hypergraph(IdTable ids, std::vector<Vertex> data, std::vector<std::uint64_t> offsets,
               Options opt);

    static Hypergraph from_ids(const std::vector<std::string>& vertices,
                               const std::vector<std::vector<std::string>>& edges,
                               Options opt = {});

    std::size_t num_vertices() const { return ids_.size(); }
    std::size_t num_edges() const { return edge_offsets_.size() - 1; }

    std::span<const Vertex> edge(std::size_t e) const {
        return {edge_data_.data() + edge_offsets_[e], edge_data_.data() + edge_offsets_[e + 1]};
    }
    /// Edge indices containing v, ascending.
    std::span<const std::uint32_t> incident(Vertex v) const {
        return {inc_data_.data() + inc_offsets_[v], inc_data_.data() + inc_offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return inc_offsets_[v + 1] - inc_offsets_[v]; }

    std::string_view id(Vertex v) const { return ids_[v]; }
    const IdTable& ids() const { return ids_; }
    std::optional<Vertex> find(std::string_view id) const;
    Vertex at(std::string_view id) const;

    /// Uniform edge size, if all edges share one.
    std::optional<std::size_t> uniformity() const;
    bool allows_duplicate_edges() const { return allow_dup_; }

private:
    void finish(Options opt);

    IdTable ids_;
    std::vector<Vertex> edge_data_;
    std::vector<std::uint64_t> edge_offsets_{0};
    std::vector<std::uint32_t> inc_data_;
    std::vector<std::uint64_t> inc_offsets_;
    bool allow_dup_ = false;
    struct IndexCache;
    std::shared_ptr<IndexCache> index_;
};

struct DegreeStats {
    std::vector<std::size_t> degree;
    std::size_t max_degree = 0;
};

struct NeighborhoodStats {
    std::vector<std::size_t> size;
    std::size_t max_size = 0;
};

DegreeStats degree_stats(const Hypergraph& h);
NeighborhoodStats neighborhood_stats(const Hypergraph& h);
bool is_uniform(const Hypergraph& h, std::size_t n);

/// Pairs of vertices plus at most one unpaired vertex.
struct Pairing {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::optional<Vertex> leftover;
};

constexpr Vertex kNoVertex = 0xFFFFFFFFu;

/// Partner map over num_vertices; unpaired vertices map to kNoVertex.
/// Throws if pairs overlap or reference unknown vertices.
std::vector<Vertex> partner_map(const Pairing& p, std::size_t num_vertices);

/// Maker's pairing strategy: optional first move, then the pairing answers Breaker.
/// Without a first move this is a pure pairing strategy and Breaker starts.
struct PairingStrategyMaker {
    std::optional<Vertex> first_move;
    Pairing pairing;

    bool pure() const { return !first_move.has_value(); }
};

/// Throws unless the pairs plus first move plus leftover partition the vertex set.
void validate_pairing_strategy(const PairingStrategyMaker& p, std::size_t num_vertices);

struct DoubledHypergraph {
    Hypergraph graph;
    std::vector<Vertex> copy_of;  // original vertex -> its copy
};

DoubledHypergraph disjoint_double(const Hypergraph& h);

/// E together with f(E) for the partner map f of a full pairing.
Hypergraph mirror_closure(const Hypergraph& h, const Pairing& p);

}  // namespace egw

#endif
