#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "egw/bounds.hpp"
#include "egw/cnf.hpp"
#include "egw/coloring.hpp"
#include "egw/constructions.hpp"
#include "egw/game.hpp"
#include "egw/json_io.hpp"
#include "egw/plan.hpp"
#include "egw/sat_bridge.hpp"

using namespace egw;

namespace {

constexpr int kHolds = 0;
constexpr int kUsage = 1;
constexpr int kFails = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Limits {
    std::size_t vertices = kDefaultSolverVertexLimit;
    unsigned vars = 64;
    std::uint64_t nodes = kDefaultNodeLimit;
};

struct RunConfig {
    std::string input;
    std::string out;
    std::string format = "json";
    std::string family;
    std::string c = "1";
    unsigned n = 0;
    unsigned k = 0;
    std::uint64_t s = 0;
    std::uint64_t seed = 0;
    bool symbolic = false;
    bool doubled = false;
    bool halving = false;
    std::string maker = "pairing";
    std::string breaker = "erdos-selfridge";
    Limits limits;
    std::optional<std::size_t> flag_vertices;
    std::optional<unsigned> flag_vars;
    std::optional<std::uint64_t> flag_nodes;
};

void apply_limits(RunConfig& cfg) {
    if (const char* env = std::getenv("EGW_LIMITS_JSON")) {
        Json j;
        try {
            j = Json::parse(env);
        } catch (const std::exception& e) {
            throw UsageError(std::string("EGW_LIMITS_JSON: ") + e.what());
        }
        if (j.contains("vertices")) cfg.limits.vertices = j.at("vertices").get<std::size_t>();
        if (j.contains("vars")) cfg.limits.vars = j.at("vars").get<unsigned>();
        if (j.contains("nodes")) cfg.limits.nodes = j.at("nodes").get<std::uint64_t>();
    }
    if (cfg.flag_vertices) cfg.limits.vertices = *cfg.flag_vertices;
    if (cfg.flag_vars) cfg.limits.vars = *cfg.flag_vars;
    if (cfg.flag_nodes) cfg.limits.nodes = *cfg.flag_nodes;
    if (cfg.limits.vertices == 0 || cfg.limits.vars == 0 || cfg.limits.nodes == 0)
        throw UsageError("limits must be positive");
}

// Artifact goes to --out when given, else stdout; the report then goes to stderr.
void emit(const RunConfig& cfg, const std::optional<std::string>& artifact, const Json& report) {
    if (artifact) {
        if (!cfg.out.empty()) {
            write_text_file(cfg.out, *artifact);
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << *artifact;
            std::cerr << report.dump(2) << "\n";
        }
    } else if (!cfg.out.empty()) {
        write_text_file(cfg.out, report.dump(2) + "\n");
    } else {
        std::cout << report.dump(2) << "\n";
    }
}


StrongParams parse_c(const RunConfig& cfg) {
    StrongParams p;
    p.n = cfg.n;
    if (cfg.c == "1") return p;
    if (cfg.c == "64/63") {
        p.c_num = 64;
        p.c_den = 63;
        return p;
    }
    throw UsageError("--c must be 1 or 64/63");
}

std::string tree_artifact(const RunConfig& cfg, const BinaryTree& t, const TreeHypergraph& th) {
    if (cfg.format == "tree") return tree_to_json(t).dump() + "\n";
    if (cfg.format == "dot") return tree_to_dot(t);
    if (cfg.format == "json") {
        PairingStrategyMaker p = as_strategy(sibling_pairing(t));
        return hypergraph_to_json(th.graph, &p).dump() + "\n";
    }
    throw UsageError("--format must be json, tree or dot for tree families");
}

int cmd_construct(const RunConfig& cfg) {
    const unsigned n = cfg.n;
    Json report = Json::object();
    report["family"] = cfg.family;
    report["n"] = n;
    if (cfg.family == "neighborhood") {
        if (n < 3) throw UsageError("neighborhood needs --n >= 3");
        BinaryTree t = neighborhood_counterexample(n);
        TreeHypergraph th = hyperedges_of_tree(t, n);
        auto nb = neighborhood_stats(th.graph);
        std::uint64_t expected = (std::uint64_t{1} << (n - 2)) + (std::uint64_t{1} << (n - 3));
        bool ok = th.in_class_cn && is_uniform(th.graph, n) && nb.max_size == expected;
        report["tree_nodes"] = t.size();
        report["edges"] = th.graph.num_edges();
        report["every_leaf_depth_at_least_n_minus_1"] = th.in_class_cn;
        report["max_neighborhood"] = nb.max_size;
        report["expected"] = "2^{n-2}+2^{n-3} = " + std::to_string(expected);
        report["holds"] = ok;
        emit(cfg, tree_artifact(cfg, t, th), report);
        return ok ? kHolds : kFails;
    }
    if (cfg.family == "regular-weak") {
        if (n < 4) throw UsageError("regular-weak needs --n >= 4");
        BinaryTree t = regular_weak(n);
        std::uint64_t s = regular_weak_budget(n);
        TreeReport tr = verify_tree(t, n, s);
        TreeHypergraph th = hyperedges_of_tree(t, n);
        bool root_ok = tr.degree[t.root()] == s / 2;
        report["tree_nodes"] = t.size();
        report["s"] = "2^{n+1}/2^{floor(log n)} = " + std::to_string(s);
        report["degree_bound"] = "2^{n+2}/n = " + (BigRational(BigInt(1) << (n + 2)) / n).str();
        report["max_degree"] = tr.max_degree;
        report["root_degree"] = tr.degree[t.root()];
        report["root_degree_is_s_over_2"] = root_ok;
        report["min_leaf_depth"] = tr.min_leaf_depth;
        report["verify_tree"] = tr.passes;
        report["holds"] = tr.passes && root_ok;
        emit(cfg, tree_artifact(cfg, t, th), report);
        return tr.passes && root_ok ? kHolds : kFails;
    }
    if (cfg.family == "regular-strong") {
        PlanOutcome out = plan_strong(parse_c(cfg));
        std::optional<SymbolicReport> sym;
        if (out.plan) sym = check_plan_symbolic(*out.plan);
        Json plan_json = plan_report_json(out, sym ? &*sym : nullptr);
        bool certified = out.plan && sym->certified();
        if (cfg.symbolic || !certified) {
            if (out.failure) std::cerr << "guard failed: " << out.failure->rule << ": " << out.failure->text << "\n";
            emit(cfg, std::nullopt, plan_json);
            return certified ? kHolds : kFails;
        }
        Materialized m = execute_plan(*out.plan, cfg.limits.nodes);
        std::uint64_t s = std::uint64_t{1} << out.constants.log_s;
        TreeReport tr = verify_tree(m.tree, n, s);
        TreeHypergraph th = hyperedges_of_tree(m.tree, n);
        report["s"] = "2^{n-1}/(cn) = 2^" + std::to_string(out.constants.log_s);
        report["tree_nodes"] = m.tree.size();
        report["max_degree"] = tr.max_degree;
        report["verify_tree"] = tr.passes;
        report["holds"] = tr.passes;
        emit(cfg, tree_artifact(cfg, m.tree, th), report);
        return tr.passes ? kHolds : kFails;
    }
    if (cfg.family == "complete-game") {
        if (n < 1) throw UsageError("complete-game needs --n >= 1");
        BinaryTree t = BinaryTree::full(n - 1);
        TreeHypergraph th = hyperedges_of_tree(t, n);
        std::uint64_t expected = std::uint64_t{1} << (n - 1);
        report["vertices"] = th.graph.num_vertices();
        report["edges"] = th.graph.num_edges();
        report["expected_edges"] = "2^{n-1} = " + std::to_string(expected);
        report["holds"] = th.graph.num_edges() == expected;
        emit(cfg, tree_artifact(cfg, t, th), report);
        return th.graph.num_edges() == expected ? kHolds : kFails;
    }
    throw UsageError("unknown family '" + cfg.family + "'; use neighborhood, regular-weak, regular-strong or complete-game");
}

LoadedBoard load_board(const RunConfig& cfg) { return hypergraph_from_json(read_json_file(cfg.input)); }

int cmd_verify(const RunConfig& cfg) {
    Json j = read_json_file(cfg.input);
    if (j.contains("id")) {
        if (cfg.n == 0 || cfg.s == 0) throw UsageError("verifying a tree needs --n and --s");
        BinaryTree t = tree_from_json(j);
        TreeReport tr = verify_tree(t, cfg.n, cfg.s);
        Json report = {{"tree_nodes", t.size()},
                       {"min_leaf_depth", tr.min_leaf_depth},
                       {"max_degree", tr.max_degree},
                       {"s", cfg.s},
                       {"passes", tr.passes}};
        emit(cfg, std::nullopt, report);
        return tr.passes ? kHolds : kFails;
    }
    LoadedBoard b = hypergraph_from_json(j);
    if (!b.strategy) throw UsageError("board JSON has no \"pairing\"");
    PairingCheckLimits lim;
    lim.max_formula_vars = cfg.limits.vars;
    PairingVerdict v = verify_pairing_wins(b.graph, *b.strategy, std::nullopt, lim);
    auto opt = [](const std::optional<bool>& x) { return x ? Json(*x) : Json(nullptr); };
    Json report = {{"maker_wins", v.maker_wins},
                   {"side_selection", opt(v.side_selection)},
                   {"reduction", opt(v.reduction)},
                   {"notes", v.notes}};
    if (v.breaker_selection) {
        Json sel = Json::array();
        for (Vertex x : *v.breaker_selection) sel.push_back(std::string(b.graph.id(x)));
        report["breaker_selection"] = std::move(sel);
    }
    emit(cfg, std::nullopt, report);
    return v.maker_wins ? kHolds : kFails;
}

int cmd_solve(const RunConfig& cfg) {
    LoadedBoard b = load_board(cfg);
    SolveResult r = solve_exhaustive(b.graph, Player::Maker, cfg.limits.vertices);
    Json report = {{"vertices", b.graph.num_vertices()},
                   {"edges", b.graph.num_edges()},
                   {"winner", to_string(r.winner)},
                   {"states", r.states},
                   {"board_digest", board_digest(b.graph)}};
    emit(cfg, std::nullopt, report);
    return r.winner == Player::Maker ? kHolds : kFails;
}

int cmd_play(const RunConfig& cfg) {
    LoadedBoard b = load_board(cfg);
    std::unique_ptr<Strategy> maker, breaker;
    if (cfg.maker == "pairing") {
        if (!b.strategy) throw UsageError("--maker pairing needs a \"pairing\" in the board JSON");
        maker = std::make_unique<PairingStrategy>(b.graph, *b.strategy);
    } else if (cfg.maker == "random") {
        maker = std::make_unique<RandomStrategy>(cfg.seed);
    } else if (cfg.maker == "lowest") {
        maker = std::make_unique<LowestFreeStrategy>();
    } else {
        throw UsageError("--maker must be pairing, random or lowest");
    }
    if (cfg.breaker == "erdos-selfridge") breaker = std::make_unique<ErdosSelfridgeBreaker>();
    else if (cfg.breaker == "random") breaker = std::make_unique<RandomStrategy>(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    else if (cfg.breaker == "lowest") breaker = std::make_unique<LowestFreeStrategy>();
    else throw UsageError("--breaker must be erdos-selfridge, random or lowest");
    Player starter = b.strategy && b.strategy->pure() && cfg.maker == "pairing" ? Player::Breaker : Player::Maker;
    GameResult r = play(b.graph, *maker, *breaker, starter);
    emit(cfg, std::nullopt, transcript_to_json(b.graph, r));
    return r.winner == Player::Maker ? kHolds : kFails;
}

int cmd_to_cnf(const RunConfig& cfg) {
    LoadedBoard b = load_board(cfg);
    if (!b.strategy) throw UsageError("board JSON has no \"pairing\"");
    GameFormula g;
    Json report = Json::object();
    if (cfg.doubled) {
        DoubledGame d = double_with_pairing(b.graph, *b.strategy);
        g = hypergraph_to_cnf(d.doubled.graph, d.pure);
        report["doubled_vertices"] = d.doubled.graph.num_vertices();
    } else {
        g = hypergraph_to_cnf(b.graph, *b.strategy);
    }
    report["variables"] = g.formula.num_vars;
    report["clauses"] = g.formula.clauses.size();
    report["deficiency"] = deficiency(g.formula);
    emit(cfg, write_dimacs(g.formula), report);
    return kHolds;
}

int cmd_from_cnf(const RunConfig& cfg) {
    CnfFormula f = read_dimacs_file(cfg.input);
    BoardFromCnf b = cnf_to_hypergraph(f);
    Json report = {{"vertices", b.graph.num_vertices()},
                   {"edges", b.graph.num_edges()},
                   {"max_degree", degree_stats(b.graph).max_degree}};
    emit(cfg, hypergraph_to_json(b.graph, &b.strategy).dump() + "\n", report);
    return kHolds;
}

int cmd_sat(const RunConfig& cfg) {
    CnfFormula f = read_dimacs_file(cfg.input);
    DpllLimits lim;
    lim.max_vars = cfg.limits.vars;
    DpllResult r = dpll_sat(f, lim);
    Json report = {{"result", r.sat ? "SAT" : "UNSAT"}, {"decisions", r.decisions}};
    if (r.sat) {
        Json model = Json::array();
        for (unsigned v = 1; v <= f.num_vars; ++v) model.push_back(r.model[v] ? static_cast<int>(v) : -static_cast<int>(v));
        report["model"] = std::move(model);
    }
    emit(cfg, std::nullopt, report);
    return r.sat ? kHolds : kFails;
}

int cmd_mu1(const RunConfig& cfg) {
    CnfFormula f = read_dimacs_file(cfg.input);
    Mu1Result r = mu1_check(f, std::min(cfg.limits.vars, 24u));
    Json report = {{"in_mu1", r.in_mu1},
                   {"deficiency", "m - n = " + std::to_string(r.deficiency)},
                   {"minimal_unsat", r.minimal_unsat ? Json(*r.minimal_unsat) : Json(nullptr)},
                   {"split_tree", r.trace}};
    emit(cfg, std::nullopt, report);
    return r.in_mu1 ? kHolds : kFails;
}

int cmd_color(const RunConfig& cfg) {
    LoadedBoard b = load_board(cfg);
    std::optional<Pairing> pairing;
    if (b.strategy) {
        if (b.strategy->first_move) throw UsageError("coloring needs a pure pairing (no first move)");
        pairing = b.strategy->pairing;
    }
    ColoringLimits lim;
    lim.max_nodes = cfg.limits.nodes;
    auto c = find_proper_2coloring(b.graph, pairing, cfg.halving, lim);
    if (!c) {
        emit(cfg, std::nullopt, Json{{"found", false}});
        return kFails;
    }
    Json report = coloring_to_json(b.graph, *c, check_coloring(b.graph, *c, pairing));
    report["found"] = true;
    emit(cfg, std::nullopt, report);
    return kHolds;
}

bool looks_like_dimacs(const std::string& path) {
    std::ifstream in(path);
    char ch = 0;
    while (in.get(ch) && std::isspace(static_cast<unsigned char>(ch))) {}
    return ch == 'p' || ch == 'c';
}

int cmd_stats(const RunConfig& cfg) {
    Json report = Json::object();
    if (looks_like_dimacs(cfg.input)) {
        CnfFormula f = read_dimacs_file(cfg.input);
        auto occ = occurrence_and_balance_stats(f);
        auto nb = clause_neighborhood_stats(f);
        report["variables"] = f.num_vars;
        report["clauses"] = f.clauses.size();
        report["width"] = occ.width ? Json(*occ.width) : Json(nullptr);
        report["deficiency"] = deficiency(f);
        report["max_var_occurrences"] = occ.max_var_occurrences;
        report["max_literal_occurrences"] = occ.max_literal_occurrences;
        report["max_sharing_neighborhood"] = nb.max_sharing;
        report["max_conflict_neighborhood"] = nb.max_conflict;
        if (occ.width && *occ.width >= 3) {
            unsigned k = static_cast<unsigned>(*occ.width);
            report["l_upper_row"] = "2^{k-1}+2^{k-2} = " + (BigInt(3) << (k - 2)).str();
            if (f.num_vars <= cfg.limits.vars) {
                try {
                    Json ws = Json::array();
                    for (const auto& w : witness_bounds(k, f))
                        ws.push_back({{"implied", w.implied},
                                      {"table", w.table_value ? Json(w.table_value->str()) : Json(nullptr)},
                                      {"witnessed", w.witnessed}});
                    report["witness"] = std::move(ws);
                } catch (const CnfError& e) {
                    report["witness"] = e.what();
                }
            }
        }
    } else {
        LoadedBoard b = load_board(cfg);
        auto lll = lll_halving_predicate(b.graph);
        report["vertices"] = b.graph.num_vertices();
        report["edges"] = b.graph.num_edges();
        report["uniformity"] = b.graph.uniformity() ? Json(*b.graph.uniformity()) : Json(nullptr);
        report["max_degree"] = lll.max_degree;
        report["max_neighborhood"] = lll.max_neighborhood;
        report["degree_threshold"] = "2^{n-2}/(en) = " + std::to_string(lll.degree_threshold_approx);
        report["degree_hypothesis"] = lll.degree_hypothesis;
        report["neighborhood_threshold"] = "2^{n-3} = " + lll.neighborhood_threshold.str();
        report["neighborhood_hypothesis"] = lll.neighborhood_hypothesis;
        report["halving_neighborhood_threshold"] = "2^{n-4}/n = " + lll.halving_neighborhood_threshold.str();
        report["halving_neighborhood_hypothesis"] = lll.halving_neighborhood_hypothesis;
        report["board_digest"] = board_digest(b.graph);
    }
    emit(cfg, std::nullopt, report);
    return kHolds;
}

int cmd_plan(const RunConfig& cfg) {
    PlanOutcome out = plan_strong(parse_c(cfg));
    std::optional<SymbolicReport> sym;
    if (out.plan) sym = check_plan_symbolic(*out.plan);
    if (out.failure) std::cerr << "guard failed: " << out.failure->rule << ": " << out.failure->text << "\n";
    emit(cfg, std::nullopt, plan_report_json(out, sym ? &*sym : nullptr));
    return out.plan && sym->certified() ? kHolds : kFails;
}

int cmd_bounds(const RunConfig& cfg) {
    Json rows = Json::array();
    for (const auto& r : bound_table(cfg.k))
        rows.push_back({{"quantity", r.quantity},
                        {"side", r.side},
                        {"expression", r.expression},
                        {"condition", r.condition},
                        {"applies", r.applies},
                        {"value", r.value.str()}});
    emit(cfg, std::nullopt, Json{{"k", cfg.k}, {"rows", std::move(rows)}});
    return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maker-Breaker constructions, pairing games and their CNF counterparts"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Output path");
        sub->add_option("--limit-vertices", cfg.flag_vertices, "Solver vertex limit");
        sub->add_option("--limit-vars", cfg.flag_vars, "DPLL variable limit");
        sub->add_option("--limit-nodes", cfg.flag_nodes, "Executor / search node limit");
        sub->add_option("--seed", cfg.seed, "Seed for randomized strategies");
    };
    auto add_input = [&](CLI::App* sub) { sub->add_option("input", cfg.input, "Input file")->required(); };

    std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> cmds;

    auto* construct = app.add_subcommand("construct", "Build a family instance and verify it");
    construct->add_option("family,--family", cfg.family, "neighborhood | regular-weak | regular-strong | complete-game");
    construct->add_option("--n", cfg.n, "Uniformity")->required();
    construct->add_option("--c", cfg.c, "Scaling constant: 1 or 64/63");
    construct->add_option("--format", cfg.format, "json (board with pairing) | tree | dot");
    construct->add_flag("--symbolic", cfg.symbolic, "Plan report only, no materialization");
    add_common(construct);
    cmds.push_back({construct, cmd_construct});

    auto* verify = app.add_subcommand("verify", "Check a pairing strategy on a board, or a tree against --n/--s");
    add_input(verify);
    verify->add_option("--n", cfg.n, "Uniformity (trees)");
    verify->add_option("--s", cfg.s, "Degree budget (trees)");
    add_common(verify);
    cmds.push_back({verify, cmd_verify});

    auto* solve = app.add_subcommand("solve", "Exhaustive Maker-Breaker solve, Maker first");
    add_input(solve);
    add_common(solve);
    cmds.push_back({solve, cmd_solve});

    auto* playc = app.add_subcommand("play", "Play one game and print the transcript");
    add_input(playc);
    playc->add_option("--maker", cfg.maker, "pairing | random | lowest");
    playc->add_option("--breaker", cfg.breaker, "erdos-selfridge | random | lowest");
    add_common(playc);
    cmds.push_back({playc, cmd_play});

    auto* tocnf = app.add_subcommand("to-cnf", "Board with pure pairing to DIMACS");
    add_input(tocnf);
    tocnf->add_flag("--double", cfg.doubled, "Double the board first and pair the first moves");
    add_common(tocnf);
    cmds.push_back({tocnf, cmd_to_cnf});

    auto* fromcnf = app.add_subcommand("from-cnf", "DIMACS to board JSON with the literal pairing");
    add_input(fromcnf);
    add_common(fromcnf);
    cmds.push_back({fromcnf, cmd_from_cnf});

    auto* sat = app.add_subcommand("sat", "DPLL; exit 0 on SAT, 2 on UNSAT");
    add_input(sat);
    add_common(sat);
    cmds.push_back({sat, cmd_sat});

    auto* mu1 = app.add_subcommand("mu1", "Membership in MU(1) with the split tree");
    add_input(mu1);
    add_common(mu1);
    cmds.push_back({mu1, cmd_mu1});

    auto* color = app.add_subcommand("color", "Proper 2-coloring search (respects the board pairing if any)");
    add_input(color);
    color->add_flag("--halving", cfg.halving, "Require |red - blue| <= 1");
    add_common(color);
    cmds.push_back({color, cmd_color});

    auto* stats = app.add_subcommand("stats", "Degree / neighborhood / occurrence statistics");
    add_input(stats);
    add_common(stats);
    cmds.push_back({stats, cmd_stats});

    auto* planc = app.add_subcommand("plan", "Planner with symbolic check for the strong family");
    planc->add_option("--n", cfg.n, "Uniformity")->required();
    planc->add_option("--c", cfg.c, "Scaling constant: 1 or 64/63");
    add_common(planc);
    cmds.push_back({planc, cmd_plan});

    auto* bounds = app.add_subcommand("bounds", "Bound table for f, f_bal, l at k");
    bounds->add_option("--k", cfg.k, "Clause width, k >= 3")->required();
    add_common(bounds);
    cmds.push_back({bounds, cmd_bounds});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        apply_limits(cfg);
        for (auto [sub, fn] : cmds)
            if (sub->parsed()) return fn(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kUsage;
}
