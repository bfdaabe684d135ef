#include "egw/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace egw {

bool is_tautology(const Clause& c) {
    for (Literal a : c)
        for (Literal b : c)
            if (a == -b) return true;
    return false;
}

void validate(const CnfFormula& f, bool allow_tautology) {
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause& c = f.clauses[i];
        std::set<Literal> seen;
        for (Literal l : c) {
            if (l == 0) throw CnfError("clause " + std::to_string(i) + " contains literal 0");
            if (static_cast<unsigned>(std::abs(l)) > f.num_vars)
                throw CnfError("clause " + std::to_string(i) + " uses variable " + std::to_string(std::abs(l)) +
                               " beyond " + std::to_string(f.num_vars));
            if (!seen.insert(l).second)
                throw CnfError("clause " + std::to_string(i) + " repeats literal " + std::to_string(l));
        }
        if (!allow_tautology && is_tautology(c))
            throw CnfError("clause " + std::to_string(i) + " is tautological");
    }
}

bool evaluate(const CnfFormula& f, const std::vector<bool>& a) {
    for (const Clause& c : f.clauses) {
        bool sat = false;
        for (Literal l : c) {
            bool v = a.at(static_cast<std::size_t>(std::abs(l)));
            if ((l > 0) == v) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::size_t occurring_variables(const CnfFormula& f) {
    std::vector<bool> seen(f.num_vars + 1, false);
    std::size_t count = 0;
    for (const Clause& c : f.clauses)
        for (Literal l : c) {
            auto v = static_cast<std::size_t>(std::abs(l));
            if (v < seen.size() && !seen[v]) {
                seen[v] = true;
                ++count;
            }
        }
    return count;
}

long long deficiency(const CnfFormula& f) {
    return static_cast<long long>(f.clauses.size()) - static_cast<long long>(occurring_variables(f));
}

bool OccurrenceStats::is_ks(std::size_t k, std::size_t s) const {
    return width && *width == k && max_var_occurrences <= s;
}

bool OccurrenceStats::is_balanced(std::size_t s) const { return 2 * max_literal_occurrences <= s; }

OccurrenceStats occurrence_and_balance_stats(const CnfFormula& f) {
    OccurrenceStats s;
    s.var_occurrences.assign(f.num_vars + 1, 0);
    s.pos_occurrences.assign(f.num_vars + 1, 0);
    s.neg_occurrences.assign(f.num_vars + 1, 0);
    bool uniform = true;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause& c = f.clauses[i];
        if (i == 0) s.width = c.size();
        else if (c.size() != *s.width) uniform = false;
        std::set<unsigned> vars;
        for (Literal l : c) {
            auto v = static_cast<unsigned>(std::abs(l));
            vars.insert(v);
            ++(l > 0 ? s.pos_occurrences : s.neg_occurrences)[v];
        }
        for (unsigned v : vars) ++s.var_occurrences[v];
    }
    if (!uniform) s.width.reset();
    for (unsigned v = 1; v <= f.num_vars; ++v) {
        s.max_var_occurrences = std::max(s.max_var_occurrences, s.var_occurrences[v]);
        s.max_literal_occurrences =
            std::max({s.max_literal_occurrences, s.pos_occurrences[v], s.neg_occurrences[v]});
    }
    return s;
}

ClauseNeighborhoodStats clause_neighborhood_stats(const CnfFormula& f) {
    const std::size_t m = f.clauses.size();
    std::vector<std::vector<std::pair<std::size_t, bool>>> occ(f.num_vars + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (Literal l : f.clauses[i]) occ[static_cast<std::size_t>(std::abs(l))].push_back({i, l > 0});

    ClauseNeighborhoodStats s;
    s.sharing.assign(m, 0);
    s.conflict.assign(m, 0);
    std::vector<std::size_t> stamp_share(m, m), stamp_conf(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        stamp_share[i] = i;
        stamp_conf[i] = i;
        for (Literal l : f.clauses[i]) {
            for (auto [j, pos] : occ[static_cast<std::size_t>(std::abs(l))]) {
                if (stamp_share[j] != i) {
                    stamp_share[j] = i;
                    ++s.sharing[i];
                }
                if (pos != (l > 0) && stamp_conf[j] != i) {
                    stamp_conf[j] = i;
                    ++s.conflict[i];
                }
            }
        }
        s.max_sharing = std::max(s.max_sharing, s.sharing[i]);
        s.max_conflict = std::max(s.max_conflict, s.conflict[i]);
    }
    return s;
}

CnfFormula complete_formula(unsigned k) {
    if (k == 0 || k > 20) throw CnfError("complete formula needs 1 <= k <= 20");
    CnfFormula f{k, {}};
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Clause c;
        for (unsigned v = 1; v <= k; ++v) c.push_back((mask >> (v - 1)) & 1 ? -static_cast<Literal>(v) : static_cast<Literal>(v));
        f.clauses.push_back(std::move(c));
    }
    return f;
}

}  // namespace egw
