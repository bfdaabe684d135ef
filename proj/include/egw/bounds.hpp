#ifndef EGW_BOUNDS_HPP
#define EGW_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "egw/cnf.hpp"
#include "egw/dyadic.hpp"

namespace egw {

using BigRational = boost::multiprecision::cpp_rational;

struct BoundRow {
    std::string quantity;    // "f", "f_bal" or "l"
    std::string side;        // "lower" or "upper"
    std::string expression;  // e.g. "floor(2^k/(e*k))"
    std::string condition;   // when the bound is stated, e.g. "k a power of 2"
    bool applies = true;     // condition holds at this k
    BigRational value;       // exact
};

/// Lower and upper bounds for f, f_bal and l at a concrete k >= 3.
std::vector<BoundRow> bound_table(unsigned k);

/// floor(2^a / (e * b)), exact: refines a rational enclosure of e until both ends agree.
BigInt floor_pow2_over_e(unsigned a, unsigned b);

struct BoundWitness {
    std::string quantity;
    std::string implied;    // e.g. "l(3) <= 6"
    BigInt implied_value;
    std::optional<BigRational> table_value;  // tightest applicable table upper bound
    bool witnessed = false;                  // implied_value <= table_value
};

/// Upper bounds implied by an unsatisfiable k-CNF: f(k) <= s - 1 for its occurrence bound s,
/// f_bal(k) <= s' - 1 with s' = max(s, 2 * max literal occurrence), l(k) <= N - 1 for its
/// clause-neighborhood maximum N. Throws if F is satisfiable or not exactly k-uniform.
std::vector<BoundWitness> witness_bounds(unsigned k, const CnfFormula& f);

}  // namespace egw

#endif
