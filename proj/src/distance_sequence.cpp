#include "egw/distance_sequence.hpp"

namespace egw {

DistanceSequence::DistanceSequence(unsigned n, unsigned log_s) : n_(n), log_s_(log_s), x_(n) {
    if (n == 0) throw SequenceError("distance sequence needs n >= 1");
}

DistanceSequence::DistanceSequence(unsigned n, unsigned log_s, std::vector<Dyadic> x)
    : n_(n), log_s_(log_s), x_(std::move(x)) {
    if (n == 0) throw SequenceError("distance sequence needs n >= 1");
    if (x_.size() != n) throw SequenceError("distance sequence length differs from n");
}

DistanceSequence DistanceSequence::single_node(unsigned n, unsigned log_s) {
    DistanceSequence d(n, log_s);
    d.x_[n - 1] = Dyadic::pow2(static_cast<long long>(n) - log_s);
    return d;
}

DistanceSequence DistanceSequence::from_leaf_counts(unsigned n, unsigned log_s,
                                                    const std::vector<BigInt>& counts) {
    DistanceSequence d(n, log_s);
    for (std::size_t dist = 0; dist < counts.size() && dist < n; ++dist) {
        std::size_t i = n - 1 - dist;
        // x_i = count * 2^{i+1} / s
        d.x_[i] = Dyadic(counts[dist], 0).shifted(static_cast<long long>(i) + 1 - log_s);
    }
    return d;
}

DistanceSequence DistanceSequence::from_runs(unsigned n, unsigned log_s,
                                             const std::vector<std::pair<Dyadic, long long>>& runs) {
    DistanceSequence d(n, log_s);
    long long pos = 0;
    for (const auto& [value, len] : runs) {
        if (len < 0)
            throw SequenceError("run of " + value.to_string() + " has negative length " +
                                std::to_string(len));
        if (pos + len > static_cast<long long>(n))
            throw SequenceError("runs overflow the sequence length " + std::to_string(n));
        for (long long k = 0; k < len; ++k) d.x_[static_cast<std::size_t>(pos + k)] = value;
        pos += len;
    }
    return d;
}

Dyadic DistanceSequence::leaf_count(std::size_t i) const {
    return x_[i].shifted(static_cast<long long>(log_s_) - static_cast<long long>(i) - 1);
}

bool DistanceSequence::is_plausible() const {
    for (std::size_t i = 0; i < n_; ++i) {
        Dyadic c = leaf_count(i);
        if (c.sign() < 0 || !c.is_integer()) return false;
    }
    return true;
}

Dyadic DistanceSequence::degbar() const {
    // Horner from the far end: sum x_i / 2^{i+1}.
    Dyadic acc;
    for (std::size_t k = n_; k-- > 0;) acc = (acc + x_[k]).half();
    return acc;
}

long long DistanceSequence::support_end() const {
    for (std::size_t k = n_; k-- > 0;)
        if (!x_[k].is_zero()) return static_cast<long long>(k);
    return -1;
}

std::string DistanceSequence::to_string() const {
    std::string out = "(";
    std::size_t i = 0;
    bool first = true;
    while (i < n_) {
        std::size_t j = i;
        while (j < n_ && x_[j] == x_[i]) ++j;
        if (!first) out += ", ";
        first = false;
        out += x_[i].to_string();
        if (j - i > 1) out += "x" + std::to_string(j - i);
        i = j;
    }
    return out + ")";
}

static void require_same_shape(const DistanceSequence& a, const DistanceSequence& b) {
    if (a.n() != b.n() || a.log_s() != b.log_s())
        throw SequenceError("sequences disagree on n or s");
}

DistanceSequence join_under_root(const DistanceSequence& l, const DistanceSequence& r) {
    require_same_shape(l, r);
    const unsigned n = l.n();
    DistanceSequence out(n, l.log_s());
    for (unsigned i = 0; i + 1 < n; ++i) out[i] = (l[i + 1] + r[i + 1]).half();
    return out;
}

DistanceSequence attach_to_full_tree(const DistanceSequence& x, unsigned h) {
    const unsigned n = x.n();
    if (h > n - 1)
        throw SequenceError("attach height " + std::to_string(h) + " exceeds n-1 = " +
                            std::to_string(n - 1));
    DistanceSequence out(n, x.log_s());
    for (unsigned i = 0; i + h < n; ++i) out[i] = x[i + h];
    return out;
}

}  // namespace egw
