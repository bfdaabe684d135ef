#ifndef EGW_CNF_HPP
#define EGW_CNF_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace egw {

using Literal = int;
using Clause = std::vector<Literal>;

class CnfError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Clause list over variables 1..num_vars. Clauses keep construction order.
struct CnfFormula {
    unsigned num_vars = 0;
    std::vector<Clause> clauses;

    std::size_t num_clauses() const { return clauses.size(); }
    bool operator==(const CnfFormula&) const = default;
};

bool is_tautology(const Clause& c);
/// Throws on a zero literal, an out-of-range variable, a repeated literal, or a
/// tautological clause (unless allowed).
void validate(const CnfFormula& f, bool allow_tautology = false);

/// assignment[v] for v in 1..num_vars; index 0 unused.
bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment);

/// Variables that occur in some clause.
std::size_t occurring_variables(const CnfFormula& f);
/// m(F) - n(F) with n(F) counting occurring variables.
long long deficiency(const CnfFormula& f);

struct OccurrenceStats {
    std::vector<std::size_t> var_occurrences;  // index by variable
    std::vector<std::size_t> pos_occurrences;
    std::vector<std::size_t> neg_occurrences;
    std::size_t max_var_occurrences = 0;
    std::size_t max_literal_occurrences = 0;
    std::optional<std::size_t> width;  // common clause length

    /// Every clause has exactly k distinct literals; each variable occurs <= s times.
    bool is_ks(std::size_t k, std::size_t s) const;
    /// Every literal occurs in at most s/2 clauses.
    bool is_balanced(std::size_t s) const;
};

OccurrenceStats occurrence_and_balance_stats(const CnfFormula& f);

struct ClauseNeighborhoodStats {
    std::vector<std::size_t> sharing;    // clauses sharing >= 1 variable
    std::vector<std::size_t> conflict;   // clauses sharing a variable with opposite signs
    std::size_t max_sharing = 0;
    std::size_t max_conflict = 0;
};

ClauseNeighborhoodStats clause_neighborhood_stats(const CnfFormula& f);

/// Complete formula: all 2^k sign patterns over variables 1..k.
CnfFormula complete_formula(unsigned k);

// DIMACS

class DimacsError : public CnfError {
public:
    DimacsError(const std::string& source, std::size_t line, const std::string& msg);
    std::size_t line;
};

CnfFormula read_dimacs(std::istream& in, const std::string& source = "<input>");
CnfFormula read_dimacs_file(const std::string& path);
/// "p cnf V C" then one zero-terminated line per clause, literals ascending by |lit|.
std::string write_dimacs(const CnfFormula& f, const std::vector<std::string>& comments = {});

// DPLL

class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DpllLimits {
    unsigned max_vars = 64;
    std::size_t max_clauses = 100000;
};

struct DpllResult {
    bool sat = false;
    std::vector<bool> model;  // index 0 unused; valid when sat
    std::size_t decisions = 0;
};

DpllResult dpll_sat(const CnfFormula& f, const DpllLimits& limits = {});

// MU(1)

struct Mu1Result {
    bool in_mu1 = false;
    std::vector<std::string> trace;       // split tree, indented by depth
    long long deficiency = 0;
    std::optional<bool> minimal_unsat;    // DPLL cross-check when small enough
};

/// Recursive splitting test for membership in MU(1). The minimal-unsatisfiability
/// cross-check runs when the formula has at most crosscheck_vars variables.
Mu1Result mu1_check(const CnfFormula& f, unsigned crosscheck_vars = 24);

/// F unsatisfiable and every one-clause deletion satisfiable.
bool is_minimal_unsat(const CnfFormula& f, const DpllLimits& limits = {});

}  // namespace egw

#endif
