#ifndef EGW_JSON_IO_HPP
#define EGW_JSON_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "egw/binary_tree.hpp"
#include "egw/coloring.hpp"
#include "egw/game.hpp"
#include "egw/hypergraph.hpp"
#include "egw/plan.hpp"

namespace egw {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"n": k?, "vertices": [...], "edges": [[...]], "pairing": {...}?}
Json hypergraph_to_json(const Hypergraph& h, const PairingStrategyMaker* strategy = nullptr);

struct LoadedBoard {
    Hypergraph graph;
    std::optional<std::size_t> n;
    std::optional<PairingStrategyMaker> strategy;
};

LoadedBoard hypergraph_from_json(const Json& j);

/// Nested {"id", "left", "right"} with null for absent children.
Json tree_to_json(const BinaryTree& t);
BinaryTree tree_from_json(const Json& j);

/// Star expansion: one box per edge joined to its vertices.
std::string hypergraph_to_dot(const Hypergraph& h);
std::string tree_to_dot(const BinaryTree& t);

/// FNV-1a over vertex ids and edges, as 16 hex digits.
std::string board_digest(const Hypergraph& h);

Json transcript_to_json(const Hypergraph& h, const GameResult& r);
Json coloring_to_json(const Hypergraph& h, const TwoColoring& c, const ColoringCheck& check);

Json plan_report_json(const PlanOutcome& outcome, const SymbolicReport* report);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace egw

#endif
