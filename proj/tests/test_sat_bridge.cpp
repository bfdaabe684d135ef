#include <doctest.h>

#include <fstream>
#include <sstream>

#include "egw/bounds.hpp"
#include "egw/cnf.hpp"
#include "egw/constructions.hpp"
#include "egw/game.hpp"
#include "egw/sat_bridge.hpp"
#include "gen.hpp"

using namespace egw;

namespace {

CnfFormula parse(const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
}

std::size_t dimacs_error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const DimacsError& e) {
        return e.line;
    }
    return 0;
}

// Unsatisfiable, minimal, deficiency one, by brute force.
bool brute_mu1(const CnfFormula& f) {
    if (gen::brute_sat(f)) return false;
    if (deficiency(f) != 1) return false;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        CnfFormula g = f;
        g.clauses.erase(g.clauses.begin() + static_cast<long>(i));
        if (!gen::brute_sat(g)) return false;
    }
    return true;
}

// Random member of MU(1): glue two smaller members on a fresh variable.
std::vector<Clause> random_mu1(gen::Rng& rng, int& next_var, int budget) {
    if (budget <= 0 || gen::uniform(rng, 0, 3) == 0) return {Clause{}};
    int x = next_var++;
    int left = static_cast<int>(gen::uniform(rng, 0, static_cast<std::size_t>(budget - 1)));
    auto a = random_mu1(rng, next_var, left);
    auto b = random_mu1(rng, next_var, budget - 1 - left);
    // x may appear in only some clauses of each side; here it joins all of them.
    for (auto& c : a) c.push_back(x);
    for (auto& c : b) c.push_back(-x);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

CnfFormula pipeline_formula() {
    BinaryTree t = neighborhood_counterexample(3);
    TreeHypergraph th = hyperedges_of_tree(t, 3);
    DoubledGame d = double_with_pairing(th.graph, as_strategy(sibling_pairing(t)));
    return hypergraph_to_cnf(d.doubled.graph, d.pure).formula;
}

// 60-digit decimal bracket of e, independent of the library's series.
const boost::multiprecision::cpp_rational kELow(
    boost::multiprecision::cpp_int("2718281828459045235360287471352662497757247093699959574966967"),
    boost::multiprecision::cpp_int("1000000000000000000000000000000000000000000000000000000000000"));
const boost::multiprecision::cpp_rational kEHigh =
    kELow + boost::multiprecision::cpp_rational(1, boost::multiprecision::cpp_int("1000000000000000000000000000000000000000000000000000000000000"));

BigInt floor_rat(const BigRational& q) {
    BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

BigInt oracle_floor_pow2_over_e(unsigned a, unsigned b) {
    BigRational p = BigRational(BigInt(1) << a);
    BigInt lo = floor_rat(p / (kEHigh * b));
    BigInt hi = floor_rat(p / (kELow * b));
    REQUIRE(lo == hi);
    return lo;
}

}  // namespace

TEST_CASE("DIMACS examples") {
    CnfFormula f{2, {{1, -2}}};
    CHECK(write_dimacs(f) == "p cnf 2 1\n1 -2 0\n");
    CHECK(write_dimacs(CnfFormula{3, {{-3, 1}}}) == "p cnf 3 1\n1 -3 0\n");
    CHECK(write_dimacs(f, {"hello"}) == "c hello\np cnf 2 1\n1 -2 0\n");

    CnfFormula g = parse("c comment\np cnf 3 2\n1 -2\n 3 0 -1 0\n");
    CHECK(g.num_vars == 3);
    REQUIRE(g.clauses.size() == 2);
    CHECK(g.clauses[0] == Clause{1, -2, 3});
    CHECK(g.clauses[1] == Clause{-1});
    CHECK(parse("p cnf 1 1\n0\n").clauses[0].empty());

    CHECK(dimacs_error_line("p cnf x 1\n") == 1);
    CHECK(dimacs_error_line("1 2 0\n") == 1);
    CHECK(dimacs_error_line("c\np cnf 2 1\n1 z 0\n") == 3);
    CHECK(dimacs_error_line("p cnf 2 1\n1 3 0\n") == 2);
    CHECK(dimacs_error_line("p cnf 2 1\n\n1 2\n") == 3);    // unterminated, reports where it began
    CHECK(dimacs_error_line("p cnf 2 2\n1 2 0\n") == 2);    // count mismatch
    CHECK(dimacs_error_line("p cnf 2 1\np cnf 2 1\n") == 2);
    CHECK_THROWS_AS(parse(""), DimacsError);
}

TEST_CASE("DIMACS round trip on random formulas") {
    gen::Rng rng(100);
    for (int it = 0; it < 100; ++it) {
        unsigned nv = static_cast<unsigned>(gen::uniform(rng, 1, 30));
        unsigned k = static_cast<unsigned>(gen::uniform(rng, 1, std::min(nv, 6u)));
        CnfFormula f = gen::kcnf(rng, k, nv, gen::uniform(rng, 0, 40));
        for (auto& c : f.clauses)
            std::sort(c.begin(), c.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
        CnfFormula back = parse(write_dimacs(f));
        CHECK(back == f);
        CHECK(write_dimacs(back) == write_dimacs(f));
    }
}

TEST_CASE("DPLL examples and brute-force agreement") {
    CHECK_FALSE(dpll_sat(CnfFormula{2, {{1, 2}, {-1}, {-2}}}).sat);
    DpllResult e = dpll_sat(CnfFormula{0, {}});
    CHECK(e.sat);
    CHECK_FALSE(dpll_sat(CnfFormula{1, {{}}}).sat);
    CHECK_FALSE(dpll_sat(pipeline_formula()).sat);
    CHECK_THROWS_AS(dpll_sat(CnfFormula{100, {{100}}}), LimitExceeded);

    gen::Rng rng(7);
    int sat = 0, unsat = 0;
    for (int it = 0; it < 400; ++it) {
        unsigned nv = static_cast<unsigned>(gen::uniform(rng, 1, 12));
        unsigned k = static_cast<unsigned>(gen::uniform(rng, 1, std::min(nv, 3u)));
        CnfFormula f = gen::kcnf(rng, k, nv, gen::uniform(rng, 1, 60));
        DpllResult r = dpll_sat(f);
        CHECK(r.sat == gen::brute_sat(f));
        if (r.sat) CHECK(evaluate(f, r.model));
        (r.sat ? sat : unsat)++;
    }
    CHECK(sat > 20);
    CHECK(unsat > 20);
}

TEST_CASE("statistics") {
    CnfFormula f{2, {{1}, {1, 2}}};
    OccurrenceStats s = occurrence_and_balance_stats(f);
    CHECK(s.var_occurrences[1] == 2);
    CHECK(s.pos_occurrences[1] == 2);
    CHECK(s.neg_occurrences[1] == 0);
    CHECK_FALSE(s.width.has_value());

    for (unsigned k = 1; k <= 8; ++k) {
        CnfFormula c = complete_formula(k);
        CHECK(c.clauses.size() == (std::size_t{1} << k));
        OccurrenceStats cs = occurrence_and_balance_stats(c);
        CHECK(cs.max_var_occurrences == (std::size_t{1} << k));
        CHECK(cs.max_literal_occurrences == (std::size_t{1} << (k - 1)));
        CHECK(cs.is_ks(k, std::size_t{1} << k));
        CHECK(cs.is_balanced(std::size_t{1} << k));
        CHECK_FALSE(dpll_sat(c).sat);
        CHECK(deficiency(c) == static_cast<long long>((1 << k) - k));
    }
    ClauseNeighborhoodStats n2 = clause_neighborhood_stats(complete_formula(2));
    for (auto v : n2.sharing) CHECK(v == 3);
    CHECK(clause_neighborhood_stats(CnfFormula{4, {{1, 2}, {3, 4}}}).max_sharing == 0);
    ClauseNeighborhoodStats mixed = clause_neighborhood_stats(CnfFormula{3, {{1, 2}, {1, 3}, {-1, 3}}});
    CHECK(mixed.sharing[0] == 2);
    CHECK(mixed.conflict[0] == 1);
    CHECK(mixed.conflict[2] == 2);

    // Neighborhoods against a pairwise scan.
    gen::Rng rng(9);
    for (int it = 0; it < 100; ++it) {
        CnfFormula r = gen::kcnf(rng, 3, 8, gen::uniform(rng, 1, 25));
        ClauseNeighborhoodStats st = clause_neighborhood_stats(r);
        for (std::size_t a = 0; a < r.clauses.size(); ++a) {
            std::size_t share = 0, conf = 0;
            for (std::size_t b = 0; b < r.clauses.size(); ++b) {
                if (a == b) continue;
                bool sh = false, cf = false;
                for (int x : r.clauses[a])
                    for (int y : r.clauses[b]) {
                        sh |= std::abs(x) == std::abs(y);
                        cf |= x == -y;
                    }
                share += sh;
                conf += cf;
            }
            CHECK(st.sharing[a] == share);
            CHECK(st.conflict[a] == conf);
        }
    }
}

TEST_CASE("hypergraph_to_cnf") {
    Hypergraph two = Hypergraph::from_ids({"a", "b", "a'", "b'"}, {{"a", "b"}, {"a'", "b'"}});
    PairingStrategyMaker p{std::nullopt, Pairing{{{0, 2}, {1, 3}}, std::nullopt}};
    GameFormula g = hypergraph_to_cnf(two, p);
    CHECK(g.formula == CnfFormula{2, {{1, 2}, {-1, -2}}});
    CHECK(dpll_sat(g.formula).sat);
    CHECK_FALSE(verify_pairing_wins(two, p).maker_wins);

    Hypergraph taut = Hypergraph::from_ids({"a", "b"}, {{"a", "b"}});
    PairingStrategyMaker tp{std::nullopt, Pairing{{{0, 1}}, std::nullopt}};
    CHECK_THROWS(hypergraph_to_cnf(taut, tp));
    CHECK(is_tautology(hypergraph_to_cnf(taut, tp, true).formula.clauses[0]));
    PairingStrategyMaker nonpure{std::optional<Vertex>(0), Pairing{{}, std::optional<Vertex>(1)}};
    CHECK_THROWS(hypergraph_to_cnf(taut, nonpure));
}

TEST_CASE("pipeline formula") {
    BinaryTree t = neighborhood_counterexample(3);
    TreeHypergraph th = hyperedges_of_tree(t, 3);
    DoubledGame d = double_with_pairing(th.graph, as_strategy(sibling_pairing(t)));
    CHECK(d.doubled.graph.num_vertices() == 30);
    CHECK(d.doubled.graph.num_edges() == 16);
    CHECK(d.pure.pure());
    CHECK(d.pure.pairing.pairs.size() == 15);

    CnfFormula f = pipeline_formula();
    CHECK(f.num_vars == 15);
    CHECK(f.clauses.size() == 16);
    CHECK(deficiency(f) == 1);
    OccurrenceStats s = occurrence_and_balance_stats(f);
    CHECK(s.width == std::optional<std::size_t>(3));
    CHECK(s.max_literal_occurrences <= degree_stats(th.graph).max_degree);
    CHECK(s.is_balanced(2 * degree_stats(th.graph).max_degree));
    CHECK_FALSE(dpll_sat(f).sat);
    CHECK(is_minimal_unsat(f));
    Mu1Result m = mu1_check(f);
    CHECK(m.in_mu1);
    CHECK(m.minimal_unsat == std::optional<bool>(true));
    CHECK(brute_mu1(f));
    CHECK(clause_neighborhood_stats(f).max_sharing <= 7);

    std::string text = write_dimacs(f);
    CHECK(std::count(text.begin(), text.end(), '\n') == 17);
    std::ifstream golden(std::string(EGW_TEST_DATA_DIR) + "/pipeline_n3.cnf");
    REQUIRE(golden.good());
    std::stringstream buf;
    buf << golden.rdbuf();
    CHECK(buf.str() == text);
}

TEST_CASE("doubled boards give balanced formulas") {
    gen::Rng rng(21);
    for (int it = 0; it < 100; ++it) {
        std::size_t nv = gen::uniform(rng, 3, 12);
        Hypergraph h = gen::hypergraph(rng, nv, gen::uniform(rng, 1, 10), 3, 3);
        PairingStrategyMaker s;
        std::vector<Vertex> all(nv);
        for (std::size_t i = 0; i < nv; ++i) all[i] = static_cast<Vertex>(i);
        std::shuffle(all.begin(), all.end(), rng);
        std::size_t at = 0;
        s.first_move = all[at++];
        while (at + 1 < nv) s.pairing.pairs.push_back({all[at], all[at + 1]}), at += 2;
        if (at < nv) s.pairing.leftover = all[at];
        DoubledGame d = double_with_pairing(h, s);
        GameFormula g;
        try {
            g = hypergraph_to_cnf(d.doubled.graph, d.pure);
        } catch (const std::exception&) {
            continue;  // an edge holds both members of a pair
        }
        OccurrenceStats st = occurrence_and_balance_stats(g.formula);
        CHECK(st.max_literal_occurrences <= degree_stats(h).max_degree);
        // Maker wins on the doubled board iff the pairing won on the original.
        CHECK(verify_pairing_wins(d.doubled.graph, d.pure).maker_wins == verify_pairing_wins(h, s).maker_wins);
    }
}

TEST_CASE("cnf_to_hypergraph") {
    BoardFromCnf a = cnf_to_hypergraph(CnfFormula{1, {{1}, {-1}}});
    CHECK(a.graph.num_vertices() == 2);
    CHECK(a.graph.num_edges() == 2);
    CHECK(a.graph.id(0) == "x1");
    CHECK(a.graph.id(1) == "~x1");
    CHECK(verify_pairing_wins(a.graph, a.strategy).maker_wins);

    BoardFromCnf c = cnf_to_hypergraph(complete_formula(2));
    CHECK(c.graph.num_edges() == 4);
    CHECK(verify_pairing_wins(c.graph, c.strategy).maker_wins);
    CHECK_FALSE(dpll_sat(hypergraph_to_cnf(c.graph, c.strategy).formula).sat);

    CHECK(cnf_to_hypergraph(CnfFormula{12, {{12}}}).graph.id(0) == "x01");
    CHECK_THROWS(cnf_to_hypergraph(CnfFormula{2, {{1}, {1, 2}}}));
    CHECK_THROWS(cnf_to_hypergraph(CnfFormula{1, {{1, -1}}}));
    CHECK_THROWS(cnf_to_hypergraph(CnfFormula{1, {{}}}));
}

TEST_CASE("game and formula agree on random formulas") {
    gen::Rng rng(200);
    for (int it = 0; it < 200; ++it) {
        unsigned nv = static_cast<unsigned>(gen::uniform(rng, 2, 9));
        unsigned k = static_cast<unsigned>(gen::uniform(rng, 1, std::min(nv, 3u)));
        CnfFormula f = gen::kcnf(rng, k, nv, gen::uniform(rng, 1, 24));
        BoardFromCnf b = cnf_to_hypergraph(f);
        bool unsat = !dpll_sat(f).sat;
        CHECK(unsat == !gen::brute_sat(f));
        PairingVerdict v = verify_pairing_wins(b.graph, b.strategy);
        CHECK(v.maker_wins == unsat);
        if (!unsat) {
            REQUIRE(v.breaker_selection.has_value());
            std::vector<bool> a(nv + 1, false);
            for (Vertex x : *v.breaker_selection) {
                auto id = b.graph.id(x);
                int var = std::stoi(std::string(id.substr(id[0] == '~' ? 2 : 1)));
                a[static_cast<std::size_t>(var)] = id[0] != '~';
            }
            CHECK(evaluate(f, a));
        }
        // Round trip keeps width and occurrence bound, and unsatisfiability.
        GameFormula back = hypergraph_to_cnf(b.graph, b.strategy);
        OccurrenceStats so = occurrence_and_balance_stats(f), sb = occurrence_and_balance_stats(back.formula);
        CHECK(sb.width == so.width);
        CHECK(sb.max_var_occurrences <= so.max_var_occurrences);
        CHECK(!dpll_sat(back.formula).sat == unsat);
        CHECK(degree_stats(b.graph).max_degree <= so.max_literal_occurrences);
    }
}

TEST_CASE("pairing_game_formula special cases") {
    // The first move alone completes an edge.
    Hypergraph h = Hypergraph::from_ids({"a", "b", "c"}, {{"a"}, {"b", "c"}});
    GameFormula g = pairing_game_formula(h, PairingStrategyMaker{std::optional<Vertex>(0), Pairing{{{1, 2}}, {}}});
    CHECK(g.maker_wins_immediately);
    // An edge holding a whole pair is always blocked.
    Hypergraph w = Hypergraph::from_ids({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c", "d"}});
    GameFormula d = pairing_game_formula(w, PairingStrategyMaker{std::optional<Vertex>(1), Pairing{{{0, 2}}, {3}}});
    CHECK_FALSE(d.maker_wins_immediately);
    CHECK(d.dropped_edges >= 1);
}

TEST_CASE("mu1_check") {
    Mu1Result e = mu1_check(CnfFormula{0, {{}}});
    CHECK(e.in_mu1);
    Mu1Result x = mu1_check(CnfFormula{1, {{1}, {-1}}});
    CHECK(x.in_mu1);
    REQUIRE_FALSE(x.trace.empty());
    CHECK(x.trace[0].find("x1") != std::string::npos);
    CHECK_FALSE(mu1_check(CnfFormula{0, {}}).in_mu1);
    CHECK_FALSE(mu1_check(CnfFormula{1, {{1}, {-1}, {1}}}).in_mu1);
    CHECK_FALSE(mu1_check(complete_formula(2)).in_mu1);   // deficiency 2
    CHECK_FALSE(mu1_check(CnfFormula{2, {{1}, {-1}, {2}}}).in_mu1);
    CHECK(mu1_check(CnfFormula{2, {{1, 2}, {1, -2}, {-1}}}).in_mu1);

    gen::Rng rng(44);
    int members = 0;
    for (int it = 0; it < 300; ++it) {
        int next = 1;
        auto clauses = random_mu1(rng, next, static_cast<int>(gen::uniform(rng, 0, 9)));
        CnfFormula f{static_cast<unsigned>(next - 1), clauses};
        // Perturb half of them.
        if (gen::uniform(rng, 0, 1) && f.clauses.size() > 1) {
            switch (gen::uniform(rng, 0, 2)) {
                case 0: f.clauses.pop_back(); break;
                case 1: f.clauses.push_back(f.clauses[0]); break;
                default: {
                    auto& c = f.clauses[gen::uniform(rng, 0, f.clauses.size() - 1)];
                    if (!c.empty()) c.pop_back();
                    break;
                }
            }
        }
        Mu1Result r = mu1_check(f);
        bool truth = brute_mu1(f);
        INFO("formula " << write_dimacs(f));
        CHECK(r.in_mu1 == truth);
        if (r.in_mu1) {
            CHECK(r.deficiency == 1);
            ++members;
        }
    }
    CHECK(members > 50);
}

TEST_CASE("bound table") {
    auto t3 = bound_table(3);
    REQUIRE(t3.size() == 10);
    CHECK(t3[0].value == 0);
    CHECK(t3[8].value == 6);
    CHECK(t3[8].quantity == "l");

    auto t8 = bound_table(8);
    CHECK(t8[0].value == 11);
    CHECK(t8[3].applies);        // 8 is a power of 2
    CHECK(t8[3].value == 31);
    CHECK_FALSE(t8[1].applies);  // 8 is not 63 * 2^j
    CHECK(t8[8].value == 128 + 64);
    CHECK(t8[6].value == 254);

    for (unsigned k = 3; k <= 60; ++k) {
        auto t = bound_table(k);
        CHECK(BigRational(oracle_floor_pow2_over_e(k, k)) == t[0].value);
        CHECK(BigRational(oracle_floor_pow2_over_e(k + 1, k)) == t[2].value);
        CHECK(BigRational(oracle_floor_pow2_over_e(k, 1) - 1) == t[5].value);
        CHECK(floor_pow2_over_e(k, k) == oracle_floor_pow2_over_e(k, k));
        CHECK(t[8].value == BigRational((BigInt(1) << (k - 1)) + (BigInt(1) << (k - 2))));
    }
    CHECK(floor_pow2_over_e(150, 7) == oracle_floor_pow2_over_e(150, 7));
    CHECK_THROWS(bound_table(2));
}

TEST_CASE("bound witnesses from the pipeline formula") {
    auto w = witness_bounds(3, pipeline_formula());
    bool saw_l = false;
    for (const auto& b : w) {
        if (b.quantity == "l") {
            saw_l = true;
            CHECK(b.implied_value == 6);
            CHECK(b.witnessed);
        }
    }
    CHECK(saw_l);
    CHECK_THROWS(witness_bounds(3, CnfFormula{3, {{1, 2, 3}}}));
    CHECK_THROWS(witness_bounds(2, pipeline_formula()));
}
