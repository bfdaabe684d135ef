#ifndef EGW_PLAN_HPP
#define EGW_PLAN_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "egw/binary_tree.hpp"
#include "egw/distance_sequence.hpp"

namespace egw {

/// A checked inequality from the planner, rendered with concrete numbers.
struct GuardRecord {
    std::string rule;
    std::string text;
    bool passed = true;
};

class GuardFailure : public std::runtime_error {
public:
    explicit GuardFailure(GuardRecord g)
        : std::runtime_error(g.rule + ": " + g.text), record(std::move(g)) {}
    GuardRecord record;
};

enum class PlanKind { BaseFull, KraftMerge, Join, Attach };
const char* to_string(PlanKind k);

/// `count` components of one type, all at the same depth below the merge root.
struct KraftGroup {
    unsigned type = 0;   // full tree of height log_s - 1 - type
    unsigned depth = 0;
    std::uint64_t count = 0;
};

struct PlanNode {
    PlanKind kind = PlanKind::BaseFull;
    unsigned height = 0;   // BaseFull, Attach
    int left = -1;         // Join left; Attach child
    int right = -1;        // Join right
    std::vector<KraftGroup> groups;  // KraftMerge, in left-to-right slot order
    DistanceSequence claimed;
    std::string rule;
    bool exact = true;     // KraftMerge: every component at depth n - log_s
};

/// Tree of plan nodes in an arena; children precede parents.
class BuildPlan {
public:
    BuildPlan() = default;
    BuildPlan(unsigned n, unsigned log_s) : n_(n), log_s_(log_s) {}

    unsigned n() const { return n_; }
    unsigned log_s() const { return log_s_; }
    const std::vector<PlanNode>& nodes() const { return nodes_; }
    const PlanNode& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
    int root() const { return nodes_.empty() ? -1 : static_cast<int>(nodes_.size()) - 1; }

    int add_base_full(unsigned h, std::string rule = "base");
    int add_join(int l, int r, std::string rule = "join");
    int add_attach(int child, unsigned h, std::string rule = "ladder");
    int add(PlanNode node);  // used by realize_base results and tests

private:
    unsigned n_ = 0;
    unsigned log_s_ = 0;
    std::vector<PlanNode> nodes_;
};

/// Kraft merge realizing y, which must be supported on the first log_s entries,
/// integral, with degbar <= 1 and sum >= 2^{n - log_s}. Surplus components go one
/// level deeper in a complete-tree slot layout. Throws GuardFailure.
PlanNode realize_base(const DistanceSequence& y, const std::string& rule = "kraft-merge",
                      std::uint64_t max_components = std::uint64_t{1} << 32);

struct StrongParams {
    unsigned n = 0;
    unsigned c_num = 1;
    unsigned c_den = 1;
};

struct StrongConstants {
    unsigned n = 0;
    unsigned cn = 0;      // c * n, a power of two
    unsigned log_s = 0;   // s = 2^{n-1} / (cn)
    long long r = 0;      // floor(log_s / 2) - 1
    bool unit_c = true;
};

/// Throws GuardFailure if c*n is not an integer power of two or s < 2.
StrongConstants resolve_strong(const StrongParams& p);

struct PlanOutcome {
    StrongConstants constants;
    std::optional<BuildPlan> plan;
    std::vector<GuardRecord> guards;
    std::optional<GuardRecord> failure;
};

/// Goal-directed rewrite from the all-zero root sequence down to Kraft merges.
PlanOutcome plan_strong(const StrongParams& p);

/// Exact node counts per plan node.
std::vector<BigInt> predicted_sizes(const BuildPlan& plan);

struct PlanViolation {
    int node = -1;
    std::string rule;
    std::string what;
};

struct SymbolicReport {
    std::vector<PlanViolation> violations;
    std::vector<std::string> deviations;   // surplus merges, one line each
    BigInt predicted_nodes = 0;
    Dyadic root_degbar;
    bool root_is_x0_tree = false;          // x_1 = ... = x_{n-1} = 0 at the root
    std::size_t checks = 0;
    std::size_t exact_merges = 0;
    std::size_t surplus_merges = 0;

    bool ok() const { return violations.empty(); }
    bool certified() const { return ok() && root_is_x0_tree; }
};

SymbolicReport check_plan_symbolic(const BuildPlan& plan);

struct Materialized {
    BinaryTree tree;
    std::vector<NodeId> anchor;   // first tree node realizing each plan node
};

class PlanTooLarge : public std::runtime_error {
public:
    PlanTooLarge(BigInt predicted, std::uint64_t limit);
    BigInt predicted;
    std::uint64_t limit;
};

constexpr std::uint64_t kDefaultNodeLimit = std::uint64_t{1} << 27;

Materialized execute_plan(const BuildPlan& plan, std::uint64_t node_limit = kDefaultNodeLimit);

/// Smallest n of the form 2^k with all guards passing and a certified plan (c = 1),
/// and of the form 63 * 2^k for c = 64/63. Found by sweeping the planner.
constexpr unsigned kSmallestCertifiedUnitN = 512;
constexpr unsigned kSmallestCertifiedScaledN = 1008;

}  // namespace egw

#endif
