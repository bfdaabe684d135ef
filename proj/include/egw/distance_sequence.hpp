#ifndef EGW_DISTANCE_SEQUENCE_HPP
#define EGW_DISTANCE_SEQUENCE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "egw/dyadic.hpp"

namespace egw {

class SequenceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weighted leaf-distance profile (x_0, ..., x_{n-1}) of a tree node for a degree
/// budget s = 2^log_s. Entry i stands for x_i * s / 2^{i+1} leaves at distance n-1-i.
class DistanceSequence {
public:
    DistanceSequence() = default;
    DistanceSequence(unsigned n, unsigned log_s);
    DistanceSequence(unsigned n, unsigned log_s, std::vector<Dyadic> x);

    /// (0, ..., 0, 2^{n - log_s}).
    static DistanceSequence single_node(unsigned n, unsigned log_s);
    /// counts[d] = number of leaves at distance d, for d < n.
    static DistanceSequence from_leaf_counts(unsigned n, unsigned log_s,
                                             const std::vector<BigInt>& counts);
    /// Concatenate (value, repeat) runs and pad with zeros. Throws on a negative
    /// run length or overflow past n.
    static DistanceSequence from_runs(unsigned n, unsigned log_s,
                                      const std::vector<std::pair<Dyadic, long long>>& runs);

    unsigned n() const { return n_; }
    unsigned log_s() const { return log_s_; }
    const Dyadic& operator[](std::size_t i) const { return x_[i]; }
    Dyadic& operator[](std::size_t i) { return x_[i]; }
    const std::vector<Dyadic>& entries() const { return x_; }

    /// Leaves at distance n-1-i: x_i * 2^{log_s - i - 1}.
    Dyadic leaf_count(std::size_t i) const;
    bool is_plausible() const;
    /// Sum of x_i / 2^{i+1}; the degree divided by s.
    Dyadic degbar() const;
    /// Index of the last nonzero entry, or -1.
    long long support_end() const;

    bool operator==(const DistanceSequence& o) const = default;
    /// Run-length form, e.g. "(0, 2x14, 0, 4x13, 0x484)".
    std::string to_string() const;

private:
    unsigned n_ = 0;
    unsigned log_s_ = 0;
    std::vector<Dyadic> x_;
};

inline Dyadic degbar(const DistanceSequence& x) { return x.degbar(); }

/// Sequence of a new root whose subtrees have sequences l and r.
DistanceSequence join_under_root(const DistanceSequence& l, const DistanceSequence& r);
/// Sequence of the root of a full tree of height h with a copy of x at each leaf.
DistanceSequence attach_to_full_tree(const DistanceSequence& x, unsigned h);

}  // namespace egw

#endif
