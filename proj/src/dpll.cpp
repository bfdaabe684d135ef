#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "egw/cnf.hpp"

namespace egw {

namespace {

class Dpll {
public:
    explicit Dpll(const CnfFormula& f) : f_(f), value_(f.num_vars + 1, 0), count_(f.num_vars + 1, 0) {}

    bool solve() {
        std::size_t mark = trail_.size();
        if (!propagate()) {
            undo(mark);
            return false;
        }
        unsigned v = pick();
        if (v == 0) return true;
        ++decisions;
        for (std::int8_t val : {std::int8_t{1}, std::int8_t{-1}}) {
            std::size_t m2 = trail_.size();
            set(v, val);
            if (solve()) return true;
            undo(m2);
        }
        undo(mark);
        return false;
    }

    std::vector<bool> model() const {
        std::vector<bool> m(f_.num_vars + 1, false);
        for (unsigned v = 1; v <= f_.num_vars; ++v) m[v] = value_[v] > 0;
        return m;
    }

    std::size_t decisions = 0;

private:
    int lit_value(Literal l) const {
        int v = value_[static_cast<std::size_t>(std::abs(l))];
        return l > 0 ? v : -v;
    }
    void set(unsigned v, std::int8_t val) {
        value_[v] = val;
        trail_.push_back(v);
    }
    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            value_[trail_.back()] = 0;
            trail_.pop_back();
        }
    }

    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Clause& c : f_.clauses) {
                Literal unit = 0;
                std::size_t free = 0;
                bool sat = false;
                for (Literal l : c) {
                    int lv = lit_value(l);
                    if (lv > 0) {
                        sat = true;
                        break;
                    }
                    if (lv == 0) {
                        ++free;
                        unit = l;
                    }
                }
                if (sat) continue;
                if (free == 0) return false;
                if (free == 1) {
                    set(static_cast<unsigned>(std::abs(unit)), unit > 0 ? 1 : -1);
                    changed = true;
                }
            }
        }
        return true;
    }

    // Most frequent unassigned variable in unsatisfied clauses; 0 if all satisfied.
    unsigned pick() {
        std::fill(count_.begin(), count_.end(), 0);
        unsigned best = 0;
        for (const Clause& c : f_.clauses) {
            bool sat = false;
            for (Literal l : c)
                if (lit_value(l) > 0) {
                    sat = true;
                    break;
                }
            if (sat) continue;
            for (Literal l : c) {
                auto v = static_cast<unsigned>(std::abs(l));
                if (value_[v] != 0) continue;
                ++count_[v];
                if (best == 0 || count_[v] > count_[best]) best = v;
            }
        }
        return best;
    }

    const CnfFormula& f_;
    std::vector<std::int8_t> value_;
    std::vector<std::size_t> count_;
    std::vector<unsigned> trail_;
};

}  // namespace

DpllResult dpll_sat(const CnfFormula& f, const DpllLimits& limits) {
    if (f.num_vars > limits.max_vars)
        throw LimitExceeded("DPLL: " + std::to_string(f.num_vars) + " variables exceeds limit " +
                            std::to_string(limits.max_vars));
    if (f.clauses.size() > limits.max_clauses)
        throw LimitExceeded("DPLL: " + std::to_string(f.clauses.size()) + " clauses exceeds limit " +
                            std::to_string(limits.max_clauses));
    validate(f, true);
    Dpll d(f);
    DpllResult r;
    r.sat = d.solve();
    r.decisions = d.decisions;
    if (r.sat) {
        r.model = d.model();
        if (!evaluate(f, r.model)) throw std::logic_error("DPLL produced a model that does not satisfy the formula");
    }
    return r;
}

bool is_minimal_unsat(const CnfFormula& f, const DpllLimits& limits) {
    if (dpll_sat(f, limits).sat) return false;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        CnfFormula g{f.num_vars, {}};
        g.clauses.reserve(f.clauses.size() - 1);
        for (std::size_t j = 0; j < f.clauses.size(); ++j)
            if (j != i) g.clauses.push_back(f.clauses[j]);
        if (!dpll_sat(g, limits).sat) return false;
    }
    return true;
}

}  // namespace egw
