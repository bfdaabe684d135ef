#include <doctest.h>

#include "egw/plan.hpp"
#include "gen.hpp"

using namespace egw;

namespace {

DistanceSequence seq(unsigned log_s, std::vector<long long> xs) {
    std::vector<Dyadic> d(xs.begin(), xs.end());
    return DistanceSequence(static_cast<unsigned>(xs.size()), log_s, d);
}

// Brute-force sequences of every plan node's anchor in the materialized tree.
void check_exact_anchors(const BuildPlan& plan, const Materialized& m) {
    for (std::size_t i = 0; i < plan.nodes().size(); ++i) {
        if (m.anchor[i] == kNoNode) continue;
        auto bf = distance_sequence_bruteforce(m.tree, m.anchor[i], plan.n(), plan.log_s());
        INFO("plan node " << i);
        CHECK(bf == plan.nodes()[i].claimed);
    }
}

// Leaves within the horizon of the merge root, summed per component: a component
// of height h at depth d contributes 2^h leaves iff d + h <= n - 1.
std::uint64_t merge_root_degree(const std::vector<std::pair<unsigned, unsigned>>& comps, unsigned n) {
    std::uint64_t deg = 0;
    for (auto [depth, height] : comps)
        if (depth + height <= n - 1) deg += std::uint64_t{1} << height;
    return deg;
}

BuildPlan toy_plan() {
    BuildPlan plan(4, 2);
    int a = plan.add_base_full(0);
    int b = plan.add_base_full(0);
    int c = plan.add_base_full(1);
    int j1 = plan.add_join(b, c);
    int j2 = plan.add_join(a, j1);
    plan.add_attach(j2, 2);
    return plan;
}

}  // namespace

TEST_CASE("realize_base: all mass on single nodes") {
    for (unsigned n = 2; n <= 9; ++n)
        for (unsigned L = 1; L <= n; ++L) {
            DistanceSequence y(n, L);
            y[L - 1] = Dyadic::pow2(n - L);
            // degbar = 2^{n-2L}
            if (2 * L < n) {
                CHECK_THROWS_AS(realize_base(y), GuardFailure);
                continue;
            }
            PlanNode p = realize_base(y);
            CHECK(p.exact);
            REQUIRE(p.groups.size() == 1);
            CHECK(p.groups[0].depth == n - L);
            BuildPlan plan(n, L);
            plan.add(p);
            Materialized m = execute_plan(plan);
            CHECK(m.tree.size() == (std::size_t{2} << (n - L)) - 1);
            CHECK(distance_sequence_bruteforce(m.tree, m.tree.root(), n, L) == y);
        }
}

TEST_CASE("realize_base: small budget examples and guards") {
    // At n = 4, s = 4 the pair (2, 2) has degbar 3/2 and is rejected.
    CHECK_THROWS_AS(realize_base(seq(2, {2, 2, 0, 0})), GuardFailure);

    PlanNode p = realize_base(seq(2, {0, 4, 0, 0}));
    CHECK(p.exact);
    BuildPlan plan(4, 2);
    plan.add(p);
    Materialized m = execute_plan(plan);
    CHECK(distance_sequence_bruteforce(m.tree, m.tree.root(), 4, 2) == seq(2, {0, 4, 0, 0}));

    // degbar = 1 + 1/2^n
    try {
        realize_base(seq(4, {2, 0, 0, 1}));
        FAIL("expected a guard failure");
    } catch (const GuardFailure& g) {
        CHECK(g.record.text.find("degbar 17/16") != std::string::npos);
    }
    CHECK_THROWS_AS(realize_base(seq(2, {1, 0, 0, 0})), GuardFailure);   // sum below 2^{n-log s}
    CHECK_THROWS_AS(realize_base(seq(2, {0, 0, 1, 0})), GuardFailure);   // support
    CHECK_THROWS_AS(realize_base(seq(2, {0, 3, 0, 0})), GuardFailure);   // 3 < 4
}

TEST_CASE("realize_base exact merges match brute force") {
    gen::Rng rng(41);
    int done = 0;
    for (int it = 0; it < 400 && done < 120; ++it) {
        unsigned n = static_cast<unsigned>(gen::uniform(rng, 2, 9));
        unsigned L = static_cast<unsigned>(gen::uniform(rng, 1, n));
        std::uint64_t slots = std::uint64_t{1} << (n - L);
        DistanceSequence y(n, L);
        for (std::uint64_t k = 0; k < slots; ++k) {
            unsigned i = static_cast<unsigned>(gen::uniform(rng, 0, L - 1));
            y[i] = y[i] + Dyadic(1);
        }
        if (y.degbar() > Dyadic(1)) continue;
        PlanNode p = realize_base(y);
        CHECK(p.exact);
        BuildPlan plan(n, L);
        plan.add(p);
        CHECK(check_plan_symbolic(plan).ok());
        Materialized m = execute_plan(plan);
        CHECK(distance_sequence_bruteforce(m.tree, m.tree.root(), n, L) == y);
        CHECK(BigInt(m.tree.size()) == predicted_sizes(plan).back());
        ++done;
    }
    CHECK(done > 50);
}

TEST_CASE("surplus merges stay under the claimed profile") {
    gen::Rng rng(43);
    int done = 0;
    for (int it = 0; it < 600 && done < 150; ++it) {
        unsigned n = static_cast<unsigned>(gen::uniform(rng, 3, 9));
        unsigned L = static_cast<unsigned>(gen::uniform(rng, 2, n));
        std::uint64_t slots = std::uint64_t{1} << (n - L);
        std::uint64_t total = slots + gen::uniform(rng, 1, slots + 3);
        DistanceSequence y(n, L);
        for (std::uint64_t k = 0; k < total; ++k) {
            unsigned i = static_cast<unsigned>(gen::uniform(rng, 0, L - 1));
            y[i] = y[i] + Dyadic(1);
        }
        if (y.degbar() > Dyadic(1)) continue;
        PlanNode p = realize_base(y);
        CHECK_FALSE(p.exact);
        BuildPlan plan(n, L);
        plan.add(p);
        SymbolicReport rep = check_plan_symbolic(plan);
        CHECK(rep.ok());
        CHECK(rep.deviations.size() == 1);
        Materialized m = execute_plan(plan);
        auto bf = distance_sequence_bruteforce(m.tree, m.tree.root(), n, L);
        Dyadic acc_real, acc_claim;
        for (unsigned d = 0; d < n; ++d) {
            acc_real += bf.leaf_count(n - 1 - d);
            acc_claim += y.leaf_count(n - 1 - d);
            CHECK(acc_real <= acc_claim);
        }
        CHECK(verify_tree(m.tree, n, std::uint64_t{1} << L).max_degree <= (std::uint64_t{1} << L));

        // Per-component accounting agrees with the tree; deepening never adds degree.
        std::vector<std::pair<unsigned, unsigned>> comps;
        for (const auto& g : p.groups)
            for (std::uint64_t c = 0; c < g.count; ++c) comps.emplace_back(g.depth, L - 1 - g.type);
        CHECK(merge_root_degree(comps, n) == verify_tree(m.tree, n, 1).degree[m.tree.root()]);
        auto deeper = comps;
        unsigned min_before = 1000, min_after = 1000;
        for (auto& [d, h] : deeper) {
            min_before = std::min(min_before, d + h);
            if (gen::uniform(rng, 0, 1)) ++d;
            min_after = std::min(min_after, d + h);
        }
        CHECK(merge_root_degree(deeper, n) <= merge_root_degree(comps, n));
        CHECK(min_after >= min_before);
        ++done;
    }
    CHECK(done > 50);
}

TEST_CASE("joining two type-i components gives a type-(i-1) component") {
    for (unsigned L = 1; L <= 10; ++L)
        for (unsigned i = 1; i < L; ++i) {
            unsigned n = L + 1;
            auto one = distance_sequence_bruteforce(BinaryTree::full(L - 1 - i), 0, n, L);
            auto up = distance_sequence_bruteforce(BinaryTree::full(L - i), 0, n, L);
            CHECK(join_under_root(one, one) == up);
            CHECK(distance_sequence_bruteforce(BinaryTree::join(BinaryTree::full(L - 1 - i),
                                                                BinaryTree::full(L - 1 - i)),
                                               0, n, L) == up);
        }
}

TEST_CASE("execute_plan basics") {
    for (unsigned h = 0; h <= 6; ++h) {
        BuildPlan p(8, 3);
        p.add_base_full(h);
        CHECK(execute_plan(p).tree.size() == (std::size_t{2} << h) - 1);
    }
    BuildPlan j(3, 2);
    int a = j.add_base_full(0);
    int b = j.add_base_full(0);
    j.add_join(a, b);
    Materialized m = execute_plan(j);
    CHECK(m.tree.size() == 3);
    CHECK(distance_sequence_bruteforce(m.tree, 0, 3, 2) == seq(2, {0, 2, 0}));
    CHECK(j.node(j.root()).claimed == seq(2, {0, 2, 0}));

    BuildPlan big(30, 2);
    big.add_base_full(28);
    CHECK_THROWS_AS(execute_plan(big), PlanTooLarge);
    CHECK(predicted_sizes(big).back() == (BigInt(1) << 29) - 1);
}

TEST_CASE("toy plan end to end") {
    BuildPlan plan = toy_plan();
    CHECK(plan.node(plan.root()).claimed == seq(2, {2, 0, 0, 0}));
    SymbolicReport rep = check_plan_symbolic(plan);
    CHECK(rep.ok());
    CHECK(rep.certified());
    CHECK(rep.root_degbar == Dyadic(1));
    Materialized m = execute_plan(plan);
    CHECK(BigInt(m.tree.size()) == rep.predicted_nodes);
    auto sizes = predicted_sizes(plan);
    CHECK(BigInt(m.tree.size()) == sizes.back());
    check_exact_anchors(plan, m);
    TreeReport tr = verify_tree(m.tree, 4, 4);
    CHECK(tr.passes);
}

TEST_CASE("symbolic checker flags a join child with x_0 != 0") {
    BuildPlan plan(3, 2);
    int a = plan.add_base_full(2);   // (2, 0, 0)
    int b = plan.add_base_full(0);
    plan.add_join(a, b);
    SymbolicReport rep = check_plan_symbolic(plan);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& v : rep.violations) found |= v.what.find("x_0") != std::string::npos;
    CHECK(found);
}

TEST_CASE("symbolic checker flags over-budget ladders") {
    BuildPlan plan(4, 1);
    int a = plan.add_base_full(0);   // degbar 1/2
    plan.add_attach(a, 3);           // eight leaves for s = 2
    CHECK_FALSE(check_plan_symbolic(plan).ok());
}

TEST_CASE("strong planner constants and small n") {
    StrongConstants k = resolve_strong({64, 1, 1});
    CHECK(k.log_s == 57);
    CHECK(k.r == 27);
    CHECK(k.cn == 64);
    CHECK_THROWS_AS(resolve_strong({60, 1, 1}), GuardFailure);
    CHECK_THROWS_AS(resolve_strong({64, 64, 63}), GuardFailure);
    StrongConstants q = resolve_strong({1008, 64, 63});
    CHECK(q.cn == 1024);
    CHECK_FALSE(q.unit_c);

    for (unsigned n : {64u, 128u, 256u}) {
        PlanOutcome out = plan_strong({n, 1, 1});
        bool certified = false;
        if (out.plan) certified = check_plan_symbolic(*out.plan).certified();
        CHECK_FALSE(certified);
        CHECK((out.failure.has_value() || !certified));
        if (out.failure) {
            CHECK_FALSE(out.failure->passed);
            CHECK_FALSE(out.failure->text.empty());
            CHECK_FALSE(out.guards.back().passed);
        }
    }
}

TEST_CASE("pinned smallest certified sizes") {
    PlanOutcome a = plan_strong({kSmallestCertifiedUnitN, 1, 1});
    REQUIRE(a.plan.has_value());
    SymbolicReport ra = check_plan_symbolic(*a.plan);
    CHECK(ra.certified());
    CHECK(ra.predicted_nodes > BigInt(kDefaultNodeLimit));
    CHECK_FALSE(a.failure.has_value());
    for (const auto& g : a.guards) CHECK(g.passed);

    PlanOutcome half = plan_strong({kSmallestCertifiedUnitN / 2, 1, 1});
    bool half_certified = half.plan && check_plan_symbolic(*half.plan).certified();
    CHECK_FALSE(half_certified);
}
