#include "egw/coloring.hpp"

#include <cmath>
#include <numbers>

namespace egw {

namespace {

// Search over decision variables: a pair is one variable (its first member's color),
// an unpaired vertex is its own variable.
class ColoringSearch {
public:
    ColoringSearch(const Hypergraph& h, const std::optional<Pairing>& p, bool halving, const ColoringLimits& lim)
        : h_(h), limits_(lim), var_of_(h.num_vertices()), flip_(h.num_vertices(), 0) {
        if (p) {
            auto partner = partner_map(*p, h.num_vertices());
            for (auto [a, b] : p->pairs) {
                var_of_[a] = var_of_[b] = nvars_++;
                flip_[b] = 1;
                members_.push_back({a, b});
            }
            for (Vertex v = 0; v < h.num_vertices(); ++v)
                if (partner[v] == kNoVertex) {
                    var_of_[v] = nvars_++;
                    members_.push_back({v, kNoVertex});
                    ++singles_;
                }
        } else {
            for (Vertex v = 0; v < h.num_vertices(); ++v) {
                var_of_[v] = nvars_++;
                members_.push_back({v, kNoVertex});
            }
            singles_ = h.num_vertices();
        }
        // Paired vertices always split evenly, so only singles affect the balance.
        halving_ = halving;
        const std::size_t nv = h.num_vertices();
        lo_red_ = nv / 2;
        hi_red_ = (nv + 1) / 2;
        val_.assign(nvars_, -1);
        red_ = nvars_ - singles_;  // one red per pair; singles add as they are assigned
        unassigned_singles_ = singles_;
    }

    std::optional<TwoColoring> run() {
        if (halving_ && (red_ + unassigned_singles_ < lo_red_ || red_ > hi_red_)) return std::nullopt;
        if (!search(true)) return std::nullopt;
        TwoColoring c(h_.num_vertices());
        for (Vertex v = 0; v < h_.num_vertices(); ++v) c[v] = color(v) == 0 ? Color::Red : Color::Blue;
        return c;
    }

private:
    int color(Vertex v) const {
        int x = val_[var_of_[v]];
        return x < 0 ? -1 : x ^ flip_[v];
    }
    bool single(std::size_t var) const { return members_[var].second == kNoVertex; }

    void assign(std::size_t var, int x) {
        val_[var] = x;
        if (single(var)) {
            --unassigned_singles_;
            if (x == 0) ++red_;
        }
    }
    void unassign(std::size_t var) {
        if (single(var)) {
            ++unassigned_singles_;
            if (val_[var] == 0) --red_;
        }
        val_[var] = -1;
    }

    bool balance_ok() const { return !halving_ || (red_ <= hi_red_ && red_ + unassigned_singles_ >= lo_red_); }

    bool search(bool first) {
        if (++nodes_ > limits_.max_nodes)
            throw ColoringLimitExceeded("coloring search exceeded " + std::to_string(limits_.max_nodes) + " nodes");
        // Most constrained unsatisfied edge: fewest unassigned vertices.
        std::size_t best_edge = SIZE_MAX, best_free = SIZE_MAX;
        for (std::size_t e = 0; e < h_.num_edges(); ++e) {
            bool red = false, blue = false;
            std::size_t nfree = 0;
            for (Vertex v : h_.edge(e)) {
                int c = color(v);
                if (c < 0) ++nfree;
                else (c == 0 ? red : blue) = true;
            }
            if (red && blue) continue;
            if (nfree == 0) return false;
            if (nfree < best_free) {
                best_free = nfree;
                best_edge = e;
            }
        }
        if (best_edge == SIZE_MAX) return complete();
        std::size_t var = SIZE_MAX;
        for (Vertex v : h_.edge(best_edge))
            if (color(v) < 0) {
                var = var_of_[v];
                break;
            }
        // Swapping colors maps solutions to solutions, so the first decision is fixed.
        for (int x : {0, 1}) {
            if (first && x == 1) break;
            assign(var, x);
            if (balance_ok() && search(false)) return true;
            unassign(var);
        }
        return false;
    }

    // Every edge is already bichromatic; fill the rest to meet the balance.
    bool complete() {
        for (std::size_t var = 0; var < nvars_; ++var) {
            if (val_[var] >= 0) continue;
            int x = 0;
            if (single(var) && halving_ && red_ >= lo_red_) x = 1;
            assign(var, x);
        }
        return balance_ok();
    }

    const Hypergraph& h_;
    ColoringLimits limits_;
    std::vector<std::size_t> var_of_;
    std::vector<int> flip_;
    std::vector<std::pair<Vertex, Vertex>> members_;
    std::size_t nvars_ = 0;
    std::size_t singles_ = 0;
    std::vector<int> val_;
    bool halving_ = false;
    std::size_t lo_red_ = 0, hi_red_ = 0;
    std::size_t red_ = 0;
    std::size_t unassigned_singles_ = 0;
    std::size_t nodes_ = 0;
};

}  // namespace

std::optional<TwoColoring> find_proper_2coloring(const Hypergraph& h, const std::optional<Pairing>& pairing,
                                                 bool halving, const ColoringLimits& limits) {
    if (h.num_vertices() > limits.max_vertices)
        throw ColoringLimitExceeded("coloring: " + std::to_string(h.num_vertices()) + " vertices exceeds limit " +
                                    std::to_string(limits.max_vertices));
    if (pairing) {
        auto partner = partner_map(*pairing, h.num_vertices());
        if (pairing->leftover && partner[*pairing->leftover] != kNoVertex)
            throw HypergraphError("coloring: leftover vertex is also paired");
    }
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        if (h.edge(e).size() == 1) return std::nullopt;
    ColoringSearch s(h, pairing, halving, limits);
    auto c = s.run();
    if (c) {
        auto chk = check_coloring(h, *c, pairing);
        if (!chk.proper || !chk.respects_pairing || (halving && !chk.halving()))
            throw std::logic_error("coloring search returned an invalid coloring");
    }
    return c;
}

ColoringCheck check_coloring(const Hypergraph& h, const TwoColoring& c, const std::optional<Pairing>& pairing) {
    if (c.size() != h.num_vertices()) throw HypergraphError("coloring size differs from vertex count");
    ColoringCheck r;
    for (Color x : c) (x == Color::Red ? r.red : r.blue)++;
    r.proper = true;
    for (std::size_t e = 0; e < h.num_edges() && r.proper; ++e) {
        auto edge = h.edge(e);
        bool mono = true;
        for (Vertex v : edge)
            if (c[v] != c[edge[0]]) mono = false;
        if (mono) {
            r.proper = false;
            r.monochromatic_edge = e;
        }
    }
    if (pairing)
        for (auto [a, b] : pairing->pairs)
            if (c[a] == c[b]) r.respects_pairing = false;
    return r;
}

LllReport lll_halving_predicate(const Hypergraph& h) {
    auto k = h.uniformity();
    if (h.num_edges() > 0 && !k) throw HypergraphError("lll_halving_predicate needs a uniform hypergraph");
    LllReport r;
    r.n = k ? static_cast<unsigned>(*k) : 0;
    r.max_degree = degree_stats(h).max_degree;
    r.max_neighborhood = neighborhood_stats(h).max_size;
    const unsigned n = r.n;
    auto pow2 = [](int e) {
        return e >= 0 ? BigRational(BigInt(1) << e) : BigRational(BigInt(1), BigInt(1) << -e);
    };
    if (n >= 2) {
        r.degree_threshold = BigRational(floor_pow2_over_e(n - 2, n));
        r.degree_threshold_approx = std::ldexp(1.0, static_cast<int>(n) - 2) / (std::numbers::e * n);
    }
    // Degrees are integers, so comparing with the floor is exact.
    r.degree_hypothesis = r.max_degree == 0 || (n >= 2 && BigRational(r.max_degree) <= r.degree_threshold);
    r.neighborhood_threshold = pow2(static_cast<int>(n) - 3);
    r.neighborhood_hypothesis = BigRational(r.max_neighborhood) <= r.neighborhood_threshold;
    if (n > 0) {
        r.halving_neighborhood_threshold = pow2(static_cast<int>(n) - 4) / BigRational(n);
        r.halving_neighborhood_hypothesis = BigRational(r.max_neighborhood) <= r.halving_neighborhood_threshold;
    } else {
        r.halving_neighborhood_hypothesis = true;
    }
    return r;
}

AppendixReduction appendix_reduction(const Hypergraph& h, const Pairing& p) {
    AppendixReduction r{mirror_closure(h, p), {}};
    r.pure.pairing = p;
    return r;
}

}  // namespace egw
