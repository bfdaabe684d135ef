#include "egw/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace egw {

namespace {

std::string quote_dot(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::optional<Vertex> optional_vertex(const Hypergraph& h, const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return h.at(j.at(key).get<std::string>());
}

}  // namespace

Json hypergraph_to_json(const Hypergraph& h, const PairingStrategyMaker* strategy) {
    Json j = Json::object();
    if (auto k = h.uniformity()) j["n"] = *k;
    Json vs = Json::array();
    for (Vertex v = 0; v < h.num_vertices(); ++v) vs.push_back(std::string(h.id(v)));
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        Json edge = Json::array();
        for (Vertex v : h.edge(e)) edge.push_back(std::string(h.id(v)));
        es.push_back(std::move(edge));
    }
    j["edges"] = std::move(es);
    if (strategy) {
        Json p = Json::object();
        p["first_move"] = strategy->first_move ? Json(std::string(h.id(*strategy->first_move))) : Json(nullptr);
        Json pairs = Json::array();
        for (auto [a, b] : strategy->pairing.pairs)
            pairs.push_back(Json::array({std::string(h.id(a)), std::string(h.id(b))}));
        p["pairs"] = std::move(pairs);
        p["leftover"] =
            strategy->pairing.leftover ? Json(std::string(h.id(*strategy->pairing.leftover))) : Json(nullptr);
        j["pairing"] = std::move(p);
    }
    return j;
}

LoadedBoard hypergraph_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
            throw FormatError("hypergraph JSON needs \"vertices\" and \"edges\"");
        auto vertices = j.at("vertices").get<std::vector<std::string>>();
        auto edges = j.at("edges").get<std::vector<std::vector<std::string>>>();
        LoadedBoard b{Hypergraph::from_ids(vertices, edges), std::nullopt, std::nullopt};
        if (j.contains("n") && !j.at("n").is_null()) {
            b.n = j.at("n").get<std::size_t>();
            if (b.graph.num_edges() > 0 && b.graph.uniformity() != b.n)
                throw FormatError("hypergraph JSON: edges are not " + std::to_string(*b.n) + "-uniform");
        }
        if (j.contains("pairing") && !j.at("pairing").is_null()) {
            const Json& p = j.at("pairing");
            PairingStrategyMaker s;
            s.first_move = optional_vertex(b.graph, p, "first_move");
            s.pairing.leftover = optional_vertex(b.graph, p, "leftover");
            for (const auto& pr : p.at("pairs")) {
                auto ab = pr.get<std::vector<std::string>>();
                if (ab.size() != 2) throw FormatError("hypergraph JSON: a pair must have two vertices");
                s.pairing.pairs.push_back({b.graph.at(ab[0]), b.graph.at(ab[1])});
            }
            validate_pairing_strategy(s, b.graph.num_vertices());
            b.strategy = std::move(s);
        }
        return b;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("hypergraph JSON: ") + e.what());
    }
}

Json tree_to_json(const BinaryTree& t) {
    // Children are built before parents: reverse preorder.
    std::vector<Json> built(t.size());
    auto order = t.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        NodeId v = *it;
        Json node = Json::object();
        node["id"] = t.path_id(v);
        if (t.is_leaf(v)) {
            node["left"] = nullptr;
            node["right"] = nullptr;
        } else {
            node["left"] = std::move(built[t.left(v)]);
            node["right"] = std::move(built[t.right(v)]);
        }
        built[v] = std::move(node);
    }
    return std::move(built[t.root()]);
}

BinaryTree tree_from_json(const Json& j) {
    static const Json null_json(nullptr);
    BinaryTree t;
    std::vector<std::pair<const Json*, NodeId>> stack{{&j, t.root()}};
    while (!stack.empty()) {
        auto [node, v] = stack.back();
        stack.pop_back();
        if (!node->is_object()) throw FormatError("tree JSON: node is not an object");
        const Json* lp = &null_json;
        const Json* rp = &null_json;
        if (node->contains("left")) lp = &node->at("left");
        if (node->contains("right")) rp = &node->at("right");
        const Json& l = *lp;
        const Json& r = *rp;
        if (l.is_null() != r.is_null())
            throw FormatError("tree JSON: node " + t.path_id(v) + " has exactly one child");
        if (l.is_null()) continue;
        auto [lv, rv] = t.split_leaf(v);
        stack.push_back({&r, rv});
        stack.push_back({&l, lv});
    }
    return t;
}

std::string hypergraph_to_dot(const Hypergraph& h) {
    std::ostringstream os;
    os << "graph hypergraph {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < h.num_vertices(); ++v) os << "  v" << v << " [label=" << quote_dot(h.id(v)) << "];\n";
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        os << "  e" << e << " [shape=box, label=\"e" << e << "\"];\n";
        for (Vertex v : h.edge(e)) os << "  e" << e << " -- v" << v << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string tree_to_dot(const BinaryTree& t) {
    std::ostringstream os;
    os << "graph tree {\n  node [shape=point];\n";
    for (NodeId v : t.preorder()) {
        os << "  n" << v << " [tooltip=" << quote_dot(t.path_id(v)) << "];\n";
        if (!t.is_leaf(v)) os << "  n" << v << " -- n" << t.left(v) << ";\n  n" << v << " -- n" << t.right(v) << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string board_digest(const Hypergraph& h) {
    std::uint64_t x = 1469598103934665603ull;
    auto mix = [&x](unsigned char b) {
        x ^= b;
        x *= 1099511628211ull;
    };
    auto mix_u32 = [&](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) mix(static_cast<unsigned char>(v >> (8 * i)));
    };
    mix_u32(static_cast<std::uint32_t>(h.num_vertices()));
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        for (char ch : h.id(v)) mix(static_cast<unsigned char>(ch));
        mix(0);
    }
    mix_u32(static_cast<std::uint32_t>(h.num_edges()));
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        mix_u32(static_cast<std::uint32_t>(h.edge(e).size()));
        for (Vertex v : h.edge(e)) mix_u32(v);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

Json transcript_to_json(const Hypergraph& h, const GameResult& r) {
    Json j = Json::object();
    Json moves = Json::array();
    for (const Move& m : r.transcript)
        moves.push_back({{"player", to_string(m.player)}, {"vertex", std::string(h.id(m.vertex))}});
    j["moves"] = std::move(moves);
    j["winner"] = to_string(r.winner);
    j["board_digest"] = board_digest(h);
    if (r.forfeit) j["forfeit"] = *r.forfeit;
    return j;
}

Json coloring_to_json(const Hypergraph& h, const TwoColoring& c, const ColoringCheck& check) {
    Json colors = Json::object();
    for (Vertex v = 0; v < h.num_vertices(); ++v) colors[std::string(h.id(v))] = c[v] == Color::Red ? "R" : "B";
    Json j = Json::object();
    j["coloring"] = std::move(colors);
    j["verification"] = {{"proper", check.proper},
                         {"respects_pairing", check.respects_pairing},
                         {"red", check.red},
                         {"blue", check.blue},
                         {"halving", check.halving()}};
    return j;
}

Json plan_report_json(const PlanOutcome& outcome, const SymbolicReport* report) {
    const auto& k = outcome.constants;
    Json j = Json::object();
    j["constants"] = {{"n", k.n},
                      {"cn", k.cn},
                      {"log_s", k.log_s},
                      {"s", "2^" + std::to_string(k.log_s)},
                      {"r", k.r},
                      {"c", k.unit_c ? "1" : "64/63"}};
    Json guards = Json::array();
    for (const auto& g : outcome.guards) guards.push_back({{"rule", g.rule}, {"text", g.text}, {"passed", g.passed}});
    j["guards"] = std::move(guards);
    j["failure"] = outcome.failure ? Json({{"rule", outcome.failure->rule}, {"text", outcome.failure->text}})
                                   : Json(nullptr);
    if (outcome.plan) {
        const BuildPlan& plan = *outcome.plan;
        auto sizes = predicted_sizes(plan);
        Json nodes = Json::array();
        for (std::size_t i = 0; i < plan.nodes().size(); ++i) {
            const PlanNode& nd = plan.nodes()[i];
            Json n = Json::object();
            n["index"] = i;
            n["kind"] = to_string(nd.kind);
            n["rule"] = nd.rule;
            if (nd.kind == PlanKind::BaseFull || nd.kind == PlanKind::Attach) n["height"] = nd.height;
            if (nd.left >= 0) n["left"] = nd.left;
            if (nd.right >= 0) n["right"] = nd.right;
            if (nd.kind == PlanKind::KraftMerge) {
                Json groups = Json::array();
                for (const auto& g : nd.groups) groups.push_back({{"type", g.type}, {"depth", g.depth}, {"count", g.count}});
                n["groups"] = std::move(groups);
                n["exact"] = nd.exact;
            }
            n["claimed"] = nd.claimed.to_string();
            n["predicted_nodes"] = sizes[i].str();
            nodes.push_back(std::move(n));
        }
        j["plan"] = {{"root", plan.root()}, {"nodes", std::move(nodes)}};
    } else {
        j["plan"] = nullptr;
    }
    if (report) {
        Json viol = Json::array();
        for (const auto& v : report->violations) viol.push_back({{"node", v.node}, {"rule", v.rule}, {"what", v.what}});
        j["symbolic"] = {{"certified", report->certified()},
                         {"violations", std::move(viol)},
                         {"deviations", report->deviations},
                         {"predicted_nodes", report->predicted_nodes.str()},
                         {"root_degbar", report->root_degbar.to_string()},
                         {"root_is_x0_tree", report->root_is_x0_tree},
                         {"checks", report->checks},
                         {"exact_merges", report->exact_merges},
                         {"surplus_merges", report->surplus_merges}};
    }
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
    if (!out) throw FormatError("write failed: " + path);
}

}  // namespace egw
