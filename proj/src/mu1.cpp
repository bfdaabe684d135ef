#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "egw/cnf.hpp"

namespace egw {

namespace {

using ClauseSet = std::vector<Clause>;  // each clause sorted, set sorted

std::string digest(const ClauseSet& f) {
    std::string d;
    for (const Clause& c : f) {
        for (Literal l : c) d += std::to_string(l) + ",";
        d += ";";
    }
    return d;
}

long long set_deficiency(const ClauseSet& f) {
    std::set<int> vars;
    for (const Clause& c : f)
        for (Literal l : c) vars.insert(std::abs(l));
    return static_cast<long long>(f.size()) - static_cast<long long>(vars.size());
}

class Mu1Search {
public:
    bool check(const ClauseSet& f, unsigned depth, std::vector<std::string>& trace) {
        std::string key = digest(f);
        if (auto it = memo_.find(key); it != memo_.end()) {
            if (it->second) trace.push_back(indent(depth) + "memo hit: " + std::to_string(f.size()) + " clauses");
            return it->second;
        }
        std::vector<std::string> local;
        bool ok = search(f, depth, local);
        memo_[key] = ok;
        if (ok) trace.insert(trace.end(), local.begin(), local.end());
        return ok;
    }

private:
    static std::string indent(unsigned depth) { return std::string(2 * depth, ' '); }

    bool search(const ClauseSet& f, unsigned depth, std::vector<std::string>& trace) {
        if (f.size() == 1 && f[0].empty()) {
            trace.push_back(indent(depth) + "{()}");
            return true;
        }
        if (f.empty()) return false;
        for (const Clause& c : f)
            if (c.empty()) return false;
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) return false;
        if (set_deficiency(f) != 1) return false;

        std::set<int> pos, neg;
        for (const Clause& c : f)
            for (Literal l : c) (l > 0 ? pos : neg).insert(std::abs(l));
        for (int x : pos) {
            if (!neg.count(x)) continue;
            std::vector<std::size_t> comp = components_without(f, x);
            std::size_t ncomp = 1 + *std::max_element(comp.begin(), comp.end());
            if (ncomp != 2) continue;
            // side[k]: +1 if component k holds x, -1 if it holds -x.
            std::vector<int> side(ncomp, 0);
            bool bad = false;
            for (std::size_t i = 0; i < f.size() && !bad; ++i)
                for (Literal l : f[i]) {
                    if (std::abs(l) != x) continue;
                    int sgn = l > 0 ? 1 : -1;
                    if (side[comp[i]] == -sgn) bad = true;
                    side[comp[i]] = sgn;
                }
            if (bad || side[0] == 0 || side[1] == 0) continue;
            ClauseSet f1, f2;
            for (std::size_t i = 0; i < f.size(); ++i) {
                Clause stripped;
                for (Literal l : f[i])
                    if (std::abs(l) != x) stripped.push_back(l);
                (side[comp[i]] > 0 ? f1 : f2).push_back(std::move(stripped));
            }
            std::sort(f1.begin(), f1.end());
            std::sort(f2.begin(), f2.end());
            std::vector<std::string> sub;
            sub.push_back(indent(depth) + "split on x" + std::to_string(x) + ": " + std::to_string(f1.size()) +
                          " clauses with x" + std::to_string(x) + ", " + std::to_string(f2.size()) +
                          " with -x" + std::to_string(x));
            if (!check(f1, depth + 1, sub)) continue;
            if (!check(f2, depth + 1, sub)) continue;
            trace.insert(trace.end(), sub.begin(), sub.end());
            return true;
        }
        return false;
    }

    // Component label per clause in the graph joining clauses that share a variable other than x.
    static std::vector<std::size_t> components_without(const ClauseSet& f, int x) {
        std::vector<std::size_t> parent(f.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        std::map<int, std::size_t> owner;
        for (std::size_t i = 0; i < f.size(); ++i)
            for (Literal l : f[i]) {
                int v = std::abs(l);
                if (v == x) continue;
                auto [it, fresh] = owner.emplace(v, i);
                if (!fresh) parent[find(i)] = find(it->second);
            }
        std::map<std::size_t, std::size_t> label;
        std::vector<std::size_t> comp(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto [it, fresh] = label.emplace(find(i), label.size());
            comp[i] = it->second;
        }
        return comp;
    }

    std::map<std::string, bool> memo_;
};

}  // namespace

Mu1Result mu1_check(const CnfFormula& f, unsigned crosscheck_vars) {
    validate(f, true);
    ClauseSet cs;
    for (Clause c : f.clauses) {
        std::sort(c.begin(), c.end());
        cs.push_back(std::move(c));
    }
    std::sort(cs.begin(), cs.end());

    Mu1Result r;
    r.deficiency = deficiency(f);
    Mu1Search search;
    r.in_mu1 = search.check(cs, 0, r.trace);
    if (occurring_variables(f) <= crosscheck_vars) {
        DpllLimits lim;
        lim.max_vars = std::max<unsigned>(f.num_vars, lim.max_vars);
        r.minimal_unsat = is_minimal_unsat(f, lim);
    }
    return r;
}

}  // namespace egw
