#ifndef EGW_COLORING_HPP
#define EGW_COLORING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "egw/bounds.hpp"
#include "egw/hypergraph.hpp"

namespace egw {

enum class Color : std::uint8_t { Red, Blue };
using TwoColoring = std::vector<Color>;  // indexed by vertex

class ColoringLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ColoringLimits {
    std::size_t max_vertices = 4096;
    std::size_t max_nodes = 20'000'000;
};

/// Exact backtracking search for a coloring with no monochromatic edge. With a pairing,
/// paired vertices get different colors; with halving, |red - blue| <= 1. Returns nullopt
/// only after exhausting the search; throws ColoringLimitExceeded otherwise.
std::optional<TwoColoring> find_proper_2coloring(const Hypergraph& h, const std::optional<Pairing>& pairing = {},
                                                 bool halving = false, const ColoringLimits& limits = {});

struct ColoringCheck {
    bool proper = false;
    bool respects_pairing = true;
    std::size_t red = 0;
    std::size_t blue = 0;
    std::optional<std::size_t> monochromatic_edge;

    bool halving() const { return (red > blue ? red - blue : blue - red) <= 1; }
};

ColoringCheck check_coloring(const Hypergraph& h, const TwoColoring& c, const std::optional<Pairing>& pairing = {});

struct LllReport {
    unsigned n = 0;
    std::size_t max_degree = 0;
    std::size_t max_neighborhood = 0;
    BigRational degree_threshold;        // 2^{n-2}/(e n), stored as its floor
    double degree_threshold_approx = 0;  // 2^{n-2}/(e n)
    bool degree_hypothesis = false;      // max degree <= 2^{n-2}/(e n)
    BigRational neighborhood_threshold;  // 2^{n-3}
    bool neighborhood_hypothesis = false;
    BigRational halving_neighborhood_threshold;  // 2^{n-4}/n
    bool halving_neighborhood_hypothesis = false;
};

/// Numeric hypotheses only; nothing is searched. Throws on a non-uniform board.
LllReport lll_halving_predicate(const Hypergraph& h);

struct AppendixReduction {
    Hypergraph closure;           // E together with its mirror image
    PairingStrategyMaker pure;    // Maker's pure pairing on the closure
};

AppendixReduction appendix_reduction(const Hypergraph& h, const Pairing& p);

}  // namespace egw

#endif
