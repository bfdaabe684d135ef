#include "egw/bounds.hpp"

#include <stdexcept>

namespace egw {

namespace {

// [lo, hi] enclosing e from the first `terms` terms of sum 1/j!.
std::pair<BigRational, BigRational> e_enclosure(unsigned terms) {
    BigRational sum = 0;
    BigInt fact = 1;
    for (unsigned j = 0; j < terms; ++j) {
        if (j > 0) fact *= j;
        sum += BigRational(BigInt(1), fact);
    }
    // Tail after the last term 1/(terms-1)! is below 1/((terms-1)! * (terms-1)).
    BigRational tail(BigInt(1), fact * (terms - 1));
    return {sum, sum + tail};
}

BigInt floor_div(const BigRational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

bool is_pow2(unsigned long long x) { return x && !(x & (x - 1)); }

BigRational pow2(unsigned k) { return BigRational(BigInt(1) << k); }

}  // namespace

BigInt floor_pow2_over_e(unsigned a, unsigned b) {
    if (b == 0) throw std::invalid_argument("floor_pow2_over_e: zero divisor");
    const BigRational x(BigInt(1) << a, BigInt(b));
    for (unsigned terms = 24;; terms *= 2) {
        auto [lo, hi] = e_enclosure(terms);
        BigInt q_hi = floor_div(x / lo);  // x/e < x/lo
        BigInt q_lo = floor_div(x / hi);
        if (q_hi == q_lo) return q_lo;
        if (terms > 4096) throw std::logic_error("floor_pow2_over_e did not converge");
    }
}

std::vector<BoundRow> bound_table(unsigned k) {
    if (k < 3) throw std::invalid_argument("bound_table needs k >= 3");
    if (k > 4000) throw std::invalid_argument("bound_table supports k <= 4000");
    const BigRational K(k);
    const BigRational c(64, 63);
    const bool k_pow2 = is_pow2(k);
    // c*k = 64k/63 is a power of 2 iff k = 63 * 2^j.
    const bool ck_pow2 = k % 63 == 0 && is_pow2(k / 63);

    std::vector<BoundRow> rows;
    rows.push_back({"f", "lower", "floor(2^k/(e*k))", "all k", true, BigRational(floor_pow2_over_e(k, k))});
    rows.push_back({"f", "upper", "2^{k-1}/(c*k) - 1, c = 64/63", "sufficiently large k with c*k a power of 2",
                    ck_pow2, pow2(k - 1) / (c * K) - 1});
    rows.push_back({"f_bal", "lower", "floor(2^{k+1}/(e*k))", "all k", true,
                    BigRational(floor_pow2_over_e(k + 1, k))});
    rows.push_back({"f_bal", "upper", "2^k/k - 1", "sufficiently large k, k a power of 2", k_pow2, pow2(k) / K - 1});
    rows.push_back({"f_bal", "upper", "2*2^k/k - 1", "sufficiently large k", true, 2 * pow2(k) / K - 1});
    rows.push_back({"l", "lower", "floor(2^k/e) - 1", "all k", true, BigRational(floor_pow2_over_e(k, 1) - 1)});
    rows.push_back({"l", "upper", "2^k - 2", "all k (complete formula)", true, pow2(k) - 2});
    rows.push_back({"l", "upper", "2^{k-1} - 1", "sufficiently large k, k a power of 2", k_pow2, pow2(k - 1) - 1});
    rows.push_back({"l", "upper", "2^{k-1} + 2^{k-2}", "k >= 3", true, pow2(k - 1) + pow2(k - 2)});
    rows.push_back({"l", "upper", "2^{k-1}/c - 1, c = 64/63", "sufficiently large k with c*k a power of 2", ck_pow2,
                    pow2(k - 1) / c - 1});
    return rows;
}

std::vector<BoundWitness> witness_bounds(unsigned k, const CnfFormula& f) {
    auto occ = occurrence_and_balance_stats(f);
    if (!occ.width || *occ.width != k) throw CnfError("witness_bounds needs an exactly k-uniform formula");
    DpllLimits lim;
    lim.max_vars = std::max(lim.max_vars, f.num_vars);
    if (dpll_sat(f, lim).sat) throw CnfError("witness_bounds needs an unsatisfiable formula");
    auto nb = clause_neighborhood_stats(f);
    auto table = bound_table(k);

    auto tightest = [&](const std::string& q) {
        std::optional<BigRational> best;
        for (const auto& r : table)
            if (r.quantity == q && r.side == "upper" && r.applies && (!best || r.value < *best)) best = r.value;
        return best;
    };
    auto make = [&](const std::string& q, std::size_t s) {
        BoundWitness w;
        w.quantity = q;
        w.implied_value = BigInt(s) - 1;
        w.implied = q + "(" + std::to_string(k) + ") <= " + w.implied_value.str();
        w.table_value = tightest(q);
        w.witnessed = w.table_value && BigRational(w.implied_value) <= *w.table_value;
        return w;
    };
    std::size_t s = occ.max_var_occurrences;
    std::size_t s_bal = std::max(s, 2 * occ.max_literal_occurrences);
    return {make("f", s), make("f_bal", s_bal), make("l", nb.max_sharing)};
}

}  // namespace egw
