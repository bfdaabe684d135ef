#include "egw/plan.hpp"

#include <algorithm>
#include <cmath>

#include "egw/constructions.hpp"

namespace egw {

namespace {

std::string num(long long v) { return std::to_string(v); }

std::string big(const BigInt& v) {
    if (v < 0 || boost::multiprecision::msb(v + 1) < 120) return v.str();
    // log2 with two decimals is enough to compare sizes at a glance
    auto bits = static_cast<long long>(boost::multiprecision::msb(v));
    BigInt top = v >> static_cast<unsigned>(bits - 52);
    double l = static_cast<double>(bits - 52) + std::log2(top.convert_to<double>());
    char buf[64];
    std::snprintf(buf, sizeof buf, "~2^%.2f", l);
    return buf;
}

BigInt pow2(unsigned k) { return BigInt(1) << k; }

}  // namespace

const char* to_string(PlanKind k) {
    switch (k) {
        case PlanKind::BaseFull: return "BASE_FULL";
        case PlanKind::KraftMerge: return "KRAFT_MERGE";
        case PlanKind::Join: return "JOIN";
        case PlanKind::Attach: return "ATTACH";
    }
    return "?";
}

int BuildPlan::add(PlanNode node) {
    if (node.claimed.n() != n_ || node.claimed.log_s() != log_s_)
        throw std::invalid_argument("plan node sequence disagrees with the plan's n or s");
    auto check_child = [&](int c) {
        if (c < 0 || c >= static_cast<int>(nodes_.size()))
            throw std::invalid_argument("plan child index out of range");
    };
    if (node.kind == PlanKind::Join) {
        check_child(node.left);
        check_child(node.right);
    } else if (node.kind == PlanKind::Attach) {
        check_child(node.left);
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
}

int BuildPlan::add_base_full(unsigned h, std::string rule) {
    PlanNode p;
    p.kind = PlanKind::BaseFull;
    p.height = h;
    p.rule = std::move(rule);
    DistanceSequence single = DistanceSequence::single_node(n_, log_s_);
    p.claimed = h < n_ ? attach_to_full_tree(single, h) : DistanceSequence(n_, log_s_);
    return add(std::move(p));
}

int BuildPlan::add_join(int l, int r, std::string rule) {
    PlanNode p;
    p.kind = PlanKind::Join;
    p.left = l;
    p.right = r;
    p.rule = std::move(rule);
    p.claimed = join_under_root(node(l).claimed, node(r).claimed);
    return add(std::move(p));
}

int BuildPlan::add_attach(int child, unsigned h, std::string rule) {
    PlanNode p;
    p.kind = PlanKind::Attach;
    p.left = child;
    p.height = h;
    p.rule = std::move(rule);
    p.claimed = attach_to_full_tree(node(child).claimed, h);
    return add(std::move(p));
}

PlanNode realize_base(const DistanceSequence& y, const std::string& rule,
                      std::uint64_t max_components) {
    const unsigned n = y.n(), L = y.log_s();
    auto fail = [&](const std::string& text) { throw GuardFailure({rule, text, false}); };
    if (L == 0 || L > n) fail("log s = " + num(L) + " outside [1, n]");
    long long se = y.support_end();
    if (se >= static_cast<long long>(L))
        fail("support: entry " + num(se) + " is nonzero but log s = " + num(L));
    BigInt total = 0;
    for (unsigned i = 0; i < L; ++i) {
        if (!y[i].is_integer() || y[i].sign() < 0)
            fail("entry " + num(i) + " = " + y[i].to_string() + " is not a nonnegative integer");
        total += y[i].numerator();
    }
    Dyadic db = y.degbar();
    if (db > Dyadic(1)) fail("degbar " + db.to_string() + " <= 1");
    const unsigned d0 = n - L;
    BigInt need = pow2(d0);
    if (total < need)
        fail("Kraft sum " + total.str() + " >= 2^{n-log s} = " + need.str());
    if (total > max_components)
        fail("component count " + total.str() + " <= limit " + std::to_string(max_components));

    const auto N = total.convert_to<std::uint64_t>();
    const unsigned D = floor_log2(N);
    const std::uint64_t shallow = (N == (std::uint64_t{1} << D)) ? N : (std::uint64_t{2} << D) - N;

    PlanNode p;
    p.kind = PlanKind::KraftMerge;
    p.rule = rule;
    p.claimed = y;
    p.exact = (total == need);
    std::uint64_t placed = 0;
    for (unsigned i = 0; i < L; ++i) {
        auto c = y[i].numerator().convert_to<std::uint64_t>();
        while (c > 0) {
            unsigned depth = placed < shallow ? D : D + 1;
            std::uint64_t room = placed < shallow ? shallow - placed : c;
            std::uint64_t take = std::min(c, room);
            if (!p.groups.empty() && p.groups.back().type == i && p.groups.back().depth == depth)
                p.groups.back().count += take;
            else
                p.groups.push_back({i, depth, take});
            placed += take;
            c -= take;
        }
    }
    return p;
}

StrongConstants resolve_strong(const StrongParams& p) {
    auto fail = [&](const std::string& text) { throw GuardFailure({"parameters", text, false}); };
    if (p.c_den == 0 || p.c_num == 0) fail("c must be positive");
    if (p.n < 2) fail("n = " + num(p.n) + " >= 2");
    const std::uint64_t scaled = static_cast<std::uint64_t>(p.n) * p.c_num;
    if (scaled % p.c_den != 0) fail("c*n = " + num(p.n) + "*" + num(p.c_num) + "/" + num(p.c_den) +
                                    " is an integer");
    const std::uint64_t cn = scaled / p.c_den;
    if (cn == 0 || (cn & (cn - 1)) != 0) fail("c*n = " + std::to_string(cn) + " is a power of 2");
    const unsigned lg = floor_log2(cn);
    if (lg + 2 > p.n) fail("s = 2^{n-1}/(cn) = 2^" + num(static_cast<long long>(p.n) - 1 - lg) + " >= 2");
    StrongConstants k;
    k.n = p.n;
    k.cn = static_cast<unsigned>(cn);
    k.log_s = p.n - 1 - lg;
    k.r = static_cast<long long>(k.log_s / 2) - 1;
    k.unit_c = (p.c_num == p.c_den);
    return k;
}

namespace {

using Runs = std::vector<std::pair<Dyadic, long long>>;

class Planner {
public:
    explicit Planner(const StrongConstants& k) : k_(k), plan_(k.n, k.log_s) {}

    BuildPlan run();
    std::vector<GuardRecord> guards;

private:
    void guard(bool ok, const std::string& rule, const std::string& text) {
        guards.push_back({rule, text, ok});
        if (!ok) throw GuardFailure(guards.back());
    }

    DistanceSequence seq(const std::string& rule, const Runs& runs) {
        try {
            return DistanceSequence::from_runs(k_.n, k_.log_s, runs);
        } catch (const SequenceError& e) {
            guard(false, rule, e.what());
        }
        return {};
    }

    int kraft(const std::string& rule, const DistanceSequence& y) {
        try {
            PlanNode p = realize_base(y, rule);
            BigInt total = 0;
            for (const auto& g : p.groups) total += g.count;
            guards.push_back({rule, "Kraft sum " + total.str() + " >= 2^{n-log s} = " +
                                        pow2(k_.n - k_.log_s).str() + "; support, integrality, degbar <= 1",
                              true});
            return plan_.add(std::move(p));
        } catch (GuardFailure& g) {
            guards.push_back(g.record);
            throw;
        }
    }

    // Full tree of height h over a tree with sequence `child`, which must start with h ones.
    int ladder(const std::string& rule, int child, long long h, const DistanceSequence& goal) {
        guard(h >= 0 && h <= static_cast<long long>(k_.n) - 1, rule,
              "ladder height " + num(h) + " in [0, n-1]");
        int a = plan_.add_attach(child, static_cast<unsigned>(h), rule + " ladder");
        expect(rule, plan_.node(a).claimed, goal);
        return a;
    }

    int join(const std::string& rule, int l, int r, const DistanceSequence& goal) {
        int j = plan_.add_join(l, r, rule + " join");
        expect(rule, plan_.node(j).claimed, goal);
        return j;
    }

    void expect(const std::string& rule, const DistanceSequence& got, const DistanceSequence& want) {
        guard(got == want, rule, "combinator result " + got.to_string() + " equals " + want.to_string());
    }

    int seed();
    int shift_fours(int cur, long long j);
    int drop_twos(int cur, long long i);

    StrongConstants k_;
    BuildPlan plan_;
};

BuildPlan Planner::run() {
    const long long r = k_.r;
    guard(r >= 1, "parameters", "r = floor(log s / 2) - 1 = " + num(r) + " >= 1");
    int cur = seed();
    for (long long j = r / 2 - 1; j >= 0; --j) cur = shift_fours(cur, j);
    for (long long i = r - 1; i >= 0; --i) cur = drop_twos(cur, i);
    return std::move(plan_);
}

int Planner::seed() {
    const long long r = k_.r, L = k_.log_s, cn = k_.cn;
    const long long a2 = (r + 1) / 2, a4 = r / 2;
    const std::string rule = "seed";
    guard(cn / 2 - 2 * a4 >= 0, rule, "cn/2 - 2*floor(r/2) = " + num(cn / 2 - 2 * a4) + " >= 0");
    const long long m = a2 + 2 * a4 - cn / 2;
    guard(m >= 0, rule, "ceil(r/2) + 2*floor(r/2) - cn/2 = " + num(m) + " >= 0");
    guard(L - r - 4 >= 1, rule, "log s - r - 4 = " + num(L - r - 4) + " >= 1");

    DistanceSequence t = seq(rule, {{0, L - r - 3}, {0, 1}, {0, m}, {4, cn / 2 - 2 * a4}, {0, 1}, {8, a4}});
    int tn = kraft(rule + " left merge", t);

    const long long h = cn / 2 - a4;
    DistanceSequence base = seq(rule, {{1, h}, {0, 1}, {2, L - r - 4}, {0, 1}, {4, m}});
    int bn = kraft(rule + " right merge", base);
    DistanceSequence right = seq(rule, {{0, 1}, {2, L - r - 4}, {0, 1}, {4, m}});
    int rn = ladder(rule + " right", bn, h, right);

    DistanceSequence x = seq(rule, {{1, L - r - 4}, {0, 1}, {2, a2}, {0, 1}, {4, a4}});
    int xn = join(rule, tn, rn, x);
    DistanceSequence goal = seq(rule, {{0, 1}, {2, a2}, {0, 1}, {4, a4}});
    return ladder(rule, xn, L - r - 4, goal);
}

int Planner::shift_fours(int cur, long long j) {
    const long long r = k_.r, L = k_.log_s, cn = k_.cn;
    const bool case1 = 8 * j <= cn;
    const std::string rule = "shift-fours j=" + num(j) + (case1 ? " case 1" : " case 2");
    guard(2 * r - j + 1 <= L - 1, rule, "2r - j + 1 = " + num(2 * r - j + 1) + " <= log s - 1 = " + num(L - 1));
    guard(r - 2 * j - 1 > 0, rule, "r - 2j - 1 = " + num(r - 2 * j - 1) + " > 0");

    int tn, rn;
    if (case1) {
        guard(r - cn / 4 - 1 >= 0, rule, "r - cn/4 - 1 = " + num(r - cn / 4 - 1) + " >= 0");
        DistanceSequence t = seq(rule, {{0, r + 3}, {0, r - cn / 4 - 1}, {8, cn / 4 - 2 * j}, {0, 1}, {16, j}});
        tn = kraft(rule + " left merge", t);
        const long long h = 4 * cn - 8 * r + 8;
        guard(h + (r + 3) + (r - cn / 4 - 1) <= L, rule,
              "(4cn - 8r + 8) + (r + 3) + (r - cn/4 - 1) = " + num(h + (r + 3) + (r - cn / 4 - 1)) +
                  " <= log s = " + num(L));
        DistanceSequence base = seq(rule, {{1, h}, {0, r + 3}, {8, r - cn / 4 - 1}});
        int bn = kraft(rule + " right merge", base);
        rn = ladder(rule + " right", bn, h, seq(rule, {{0, r + 3}, {8, r - cn / 4 - 1}}));
    } else {
        DistanceSequence t = seq(rule, {{0, r + 3}, {0, r - 2 * j - 1}, {0, 1}, {0, j - cn / 8}, {16, cn / 8}});
        tn = kraft(rule + " left merge", t);
        const long long h = cn / 8;
        DistanceSequence base =
            seq(rule, {{1, h}, {0, r + 3}, {8, r - 2 * j - 1}, {0, 1}, {16, j - cn / 8}});
        int bn = kraft(rule + " right merge", base);
        rn = ladder(rule + " right", bn, h,
                    seq(rule, {{0, r + 3}, {8, r - 2 * j - 1}, {0, 1}, {16, j - cn / 8}}));
    }
    int un = join(rule + " fours", tn, rn, seq(rule, {{0, r + 2}, {4, r - 2 * j - 1}, {0, 1}, {8, j}}));
    int xn = join(rule, cur, un, seq(rule, {{1, r - j - 1}, {0, 1}, {2, r - j}, {0, 1}, {4, j}}));
    return ladder(rule, xn, r - j - 1, seq(rule, {{0, 1}, {2, r - j}, {0, 1}, {4, j}}));
}

int Planner::drop_twos(int cur, long long i) {
    const long long L = k_.log_s, cn = k_.cn, n = k_.n;
    const bool case1 = 4 * i <= cn;
    const std::string rule = "drop-twos i=" + num(i) + (case1 ? " case 1" : " case 2");
    guard(2 * i <= L - 4, rule, "2i = " + num(2 * i) + " <= log s - 4 = " + num(L - 4));

    int tn, rn;
    if (case1) {
        guard(L - cn / 2 - 4 >= 0, rule, "log s - cn/2 - 4 = " + num(L - cn / 2 - 4) + " >= 0");
        DistanceSequence t = seq(rule, {{0, i + 3}, {0, L - cn / 2 - 4}, {4, cn / 2 - 2 * i}, {0, 1}, {8, i}});
        tn = kraft(rule + " left merge", t);
        const long long h = k_.unit_c ? n / 2 - i + 1 : cn / 2 - i;
        DistanceSequence base = seq(rule, {{1, h}, {0, i + 3}, {4, L - cn / 2 - 4}});
        int bn = kraft(rule + " right merge", base);
        rn = ladder(rule + " right", bn, h, seq(rule, {{0, i + 3}, {4, L - cn / 2 - 4}}));
    } else {
        DistanceSequence t = seq(rule, {{0, i + 3}, {0, L - 2 * i - 4}, {0, 1}, {0, i - cn / 4}, {8, cn / 4}});
        tn = kraft(rule + " left merge", t);
        const long long h = cn / 4;
        DistanceSequence base =
            seq(rule, {{1, h}, {0, i + 3}, {4, L - 2 * i - 4}, {0, 1}, {8, i - cn / 4}});
        int bn = kraft(rule + " right merge", base);
        rn = ladder(rule + " right", bn, h,
                    seq(rule, {{0, i + 3}, {4, L - 2 * i - 4}, {0, 1}, {8, i - cn / 4}}));
    }
    int vn = join(rule + " twos", tn, rn, seq(rule, {{0, i + 2}, {2, L - 2 * i - 4}, {0, 1}, {4, i}}));
    int xn = join(rule, cur, vn, seq(rule, {{1, L - i - 3}, {0, 1}, {2, i}}));
    return ladder(rule, xn, L - i - 3, seq(rule, {{0, 1}, {2, i}}));
}

}  // namespace

PlanOutcome plan_strong(const StrongParams& p) {
    PlanOutcome out;
    try {
        out.constants = resolve_strong(p);
    } catch (const GuardFailure& g) {
        out.guards.push_back(g.record);
        out.failure = g.record;
        return out;
    }
    Planner planner(out.constants);
    try {
        out.plan = planner.run();
    } catch (const GuardFailure& g) {
        out.failure = g.record;
    }
    out.guards = std::move(planner.guards);
    return out;
}

std::vector<BigInt> predicted_sizes(const BuildPlan& plan) {
    const unsigned L = plan.log_s();
    std::vector<BigInt> size(plan.nodes().size());
    for (std::size_t i = 0; i < size.size(); ++i) {
        const PlanNode& p = plan.nodes()[i];
        switch (p.kind) {
            case PlanKind::BaseFull: size[i] = pow2(p.height + 1) - 1; break;
            case PlanKind::KraftMerge: {
                BigInt total = 0, comps = 0;
                for (const auto& g : p.groups) {
                    total += BigInt(g.count) * (pow2(L - g.type) - 1);
                    comps += g.count;
                }
                size[i] = total + comps - 1;
                break;
            }
            case PlanKind::Join:
                size[i] = 1 + size[static_cast<std::size_t>(p.left)] + size[static_cast<std::size_t>(p.right)];
                break;
            case PlanKind::Attach:
                size[i] = pow2(p.height) - 1 + (size[static_cast<std::size_t>(p.left)] << p.height);
                break;
        }
    }
    return size;
}

SymbolicReport check_plan_symbolic(const BuildPlan& plan) {
    SymbolicReport rep;
    const unsigned n = plan.n(), L = plan.log_s();
    const Dyadic one(1);
    auto flag = [&](int i, const std::string& what) {
        rep.violations.push_back({i, plan.node(i).rule, what});
    };

    for (int i = 0; i < static_cast<int>(plan.nodes().size()); ++i) {
        const PlanNode& p = plan.node(i);
        DistanceSequence derived;
        switch (p.kind) {
            case PlanKind::BaseFull: {
                DistanceSequence single = DistanceSequence::single_node(n, L);
                derived = p.height < n ? attach_to_full_tree(single, p.height) : DistanceSequence(n, L);
                ++rep.checks;
                if (std::min(p.height, n - 1) > L)
                    flag(i, "full tree of height " + num(p.height) + " has a node of degree above s");
                break;
            }
            case PlanKind::KraftMerge: {
                Dyadic kraft_sum;
                BigInt leaves_total = 0;
                std::vector<BigInt> counts(n, 0);
                std::uint64_t comps = 0;
                unsigned min_depth = ~0u, max_depth = 0;
                for (const auto& g : p.groups) {
                    if (g.type >= L) {
                        flag(i, "component type " + num(g.type) + " >= log s");
                        continue;
                    }
                    const unsigned height = L - 1 - g.type;
                    kraft_sum += Dyadic(BigInt(g.count), 0).shifted(-static_cast<long long>(g.depth));
                    leaves_total += BigInt(g.count) << height;
                    const unsigned dist = g.depth + height;
                    if (dist < n) counts[dist] += BigInt(g.count) << height;
                    comps += g.count;
                    min_depth = std::min(min_depth, g.depth);
                    max_depth = std::max(max_depth, g.depth);
                    if (g.depth < n - L)
                        flag(i, "component at depth " + num(g.depth) + " above n - log s = " + num(n - L));
                }
                rep.checks += 3;
                if (kraft_sum != one) flag(i, "Kraft sum of slot weights " + kraft_sum.to_string() + " != 1");
                // Every skeleton or component node sees a subset of all component leaves.
                if (leaves_total > pow2(L))
                    flag(i, "total component leaves " + leaves_total.str() + " exceed s");
                derived = DistanceSequence::from_leaf_counts(n, L, counts);
                if (p.exact) {
                    ++rep.exact_merges;
                    ++rep.checks;
                    if (derived != p.claimed)
                        flag(i, "exact merge realizes " + derived.to_string() + " not " + p.claimed.to_string());
                } else {
                    ++rep.surplus_merges;
                    BigInt acc_actual = 0, acc_claimed = 0;
                    bool dominated = true;
                    for (unsigned d = 0; d < n; ++d) {
                        acc_actual += counts[d];
                        Dyadic c = p.claimed.leaf_count(n - 1 - d);
                        acc_claimed += c.floor();
                        if (acc_actual > acc_claimed) dominated = false;
                    }
                    ++rep.checks;
                    if (!dominated) flag(i, "surplus merge is not dominated by its claimed sequence");
                    rep.deviations.push_back(
                        "node " + num(i) + " (" + p.rule + "): " + std::to_string(comps) +
                        " components for 2^" + num(n - L) + " slots at depths " + num(min_depth) + ".." +
                        num(max_depth) + "; realized " + derived.to_string() + " under claimed " +
                        p.claimed.to_string());
                }
                break;
            }
            case PlanKind::Join: {
                const auto& l = plan.node(p.left).claimed;
                const auto& r = plan.node(p.right).claimed;
                rep.checks += 2;
                if (!l[0].is_zero()) flag(i, "left child starts with x_0 = " + l[0].to_string());
                if (!r[0].is_zero()) flag(i, "right child starts with x_0 = " + r[0].to_string());
                derived = join_under_root(l, r);
                break;
            }
            case PlanKind::Attach: {
                const auto& c = plan.node(p.left).claimed;
                if (p.height > n - 1) {
                    flag(i, "attach height " + num(p.height) + " > n - 1");
                    derived = DistanceSequence(n, L);
                    break;
                }
                derived = attach_to_full_tree(c, p.height);
                // acc at index k is degbar of the full-tree node at height k.
                Dyadic acc;
                for (std::size_t k = n; k-- > 0;) {
                    acc = (acc + c[k]).half();
                    if (k <= p.height) {
                        ++rep.checks;
                        if (acc > one)
                            flag(i, "level at height " + num(static_cast<long long>(k)) + " has degbar " +
                                        acc.to_string() + " > 1");
                    }
                }
                break;
            }
        }
        if (p.kind != PlanKind::KraftMerge) {
            ++rep.checks;
            if (derived != p.claimed)
                flag(i, "claimed " + p.claimed.to_string() + " but combinators give " + derived.to_string());
        }
        rep.checks += 4;
        if (!p.claimed.is_plausible()) flag(i, "claimed sequence is not plausible");
        if (!derived.is_plausible()) flag(i, "realized sequence is not plausible");
        if (p.claimed.degbar() > one) flag(i, "claimed degbar " + p.claimed.degbar().to_string() + " > 1");
        if (derived.degbar() > one) flag(i, "realized degbar " + derived.degbar().to_string() + " > 1");
    }

    if (plan.root() >= 0) {
        const auto& root = plan.node(plan.root()).claimed;
        rep.root_degbar = root.degbar();
        rep.root_is_x0_tree = true;
        for (unsigned k = 1; k < n; ++k)
            if (!root[k].is_zero()) rep.root_is_x0_tree = false;
        rep.predicted_nodes = predicted_sizes(plan).back();
    }
    return rep;
}

PlanTooLarge::PlanTooLarge(BigInt p, std::uint64_t l)
    : std::runtime_error("plan needs " + big(p) + " nodes, limit is " + std::to_string(l)),
      predicted(std::move(p)),
      limit(l) {}

namespace {

void expand(const BuildPlan& plan, int i, NodeId v, Materialized& m) {
    const PlanNode& p = plan.node(i);
    if (m.anchor[static_cast<std::size_t>(i)] == kNoNode) m.anchor[static_cast<std::size_t>(i)] = v;
    BinaryTree& t = m.tree;
    switch (p.kind) {
        case PlanKind::BaseFull: t.grow_full(v, p.height); break;
        case PlanKind::KraftMerge: {
            // Canonical code: components in slot order, depths nondecreasing.
            std::vector<std::pair<unsigned, unsigned>> comps;  // depth, type
            for (const auto& g : p.groups)
                for (std::uint64_t c = 0; c < g.count; ++c) comps.emplace_back(g.depth, g.type);
            std::size_t next = 0;
            std::vector<std::pair<NodeId, unsigned>> stack{{v, 0}};
            while (!stack.empty() && next < comps.size()) {
                auto [u, d] = stack.back();
                stack.pop_back();
                if (comps[next].first == d) {
                    t.grow_full(u, plan.log_s() - 1 - comps[next].second);
                    ++next;
                } else if (comps[next].first > d) {
                    auto [a, b] = t.split_leaf(u);
                    stack.push_back({b, d + 1});
                    stack.push_back({a, d + 1});
                } else {
                    throw std::logic_error("Kraft merge depths are not in slot order");
                }
            }
            if (next != comps.size() || !stack.empty())
                throw std::logic_error("Kraft merge slot weights do not sum to 1");
            break;
        }
        case PlanKind::Join: {
            auto [a, b] = t.split_leaf(v);
            expand(plan, p.left, a, m);
            expand(plan, p.right, b, m);
            break;
        }
        case PlanKind::Attach:
            for (NodeId leaf : t.grow_full(v, p.height)) expand(plan, p.left, leaf, m);
            break;
    }
}

}  // namespace

Materialized execute_plan(const BuildPlan& plan, std::uint64_t node_limit) {
    if (plan.root() < 0) throw std::invalid_argument("empty plan");
    BigInt size = predicted_sizes(plan).back();
    if (size > node_limit) throw PlanTooLarge(size, node_limit);
    Materialized m;
    m.tree.reserve(size.convert_to<std::size_t>());
    m.anchor.assign(plan.nodes().size(), kNoNode);
    expand(plan, plan.root(), m.tree.root(), m);
    return m;
}

}  // namespace egw
