#ifndef ARRAYPROP_ARRAC_HPP
#define ARRAYPROP_ARRAC_HPP

#include "arrayprop/rules.hpp"

#include <optional>
#include <set>
#include <vector>

namespace arrayprop {

struct ArracOptions {
    // When the first loop stops because every Y_k is empty, the tuples
    // still in B are handed to S so the second loop can clear X with them.
    // false reproduces the bare pseudocode, which drops them and can prune
    // supported values from D_x.
    bool transfer_unprocessed = true;

    // Abort the run as soon as some value of Y_k has had every tuple that
    // contains it processed: that value is definitely unsupported. The
    // removal is committed and the caller re-runs.
    bool early_restart = false;

    // Processing order for B. Tuples listed here go first, in this order;
    // any remaining addressable tuples follow lexicographically.
    std::optional<std::vector<IndexTuple>> order;

    bool trace = false;
};

/// What one run touched, in order.
struct ArracTrace {
    std::vector<IndexTuple> t_computations; // first loop, cell domain read
    std::vector<IndexTuple> skipped;        // first loop, guard false -> S
    std::vector<IndexTuple> transferred;    // left in B at first-loop exit -> S
    std::vector<IndexTuple> dropped;        // left in B and discarded (literal mode)
    std::vector<IndexTuple> second_loop_reads;
};

struct ArracRunResult {
    bool changed = false;
    bool failed = false;
    bool restarted = false; // ended by early restart
    // (variable, removed values) for each reduced domain
    std::vector<std::pair<VarId, Domain>> removed;
    PropagationStats stats;
    ArracTrace trace;
};

/// One ARRAC run on x = a[y...]: reads every addressable cell domain at
/// most once and reduces D_x and the D_{y_i} in `domains` in place.
ArracRunResult arrac_run(const Model& model, const ArrayEq& c, DomainTable& domains,
                         const ArracOptions& opts = {});

struct ArracFixpointOptions {
    ArracOptions run;
    bool use_rara_prime = false;
    bool record_log = true;
    std::optional<std::uint64_t> shuffle_seed;
};

/// Repeats ARRAC runs per array constraint, together with Rara (or Rara'
/// and Eq) and Eq/Neq propagation, until nothing changes.
ClosureResult arrac_fixpoint(const Model& model, const ArracFixpointOptions& opts = {});
ClosureResult arrac_fixpoint(const Model& model, DomainTable start, const ArracFixpointOptions& opts);

/// Addressable indices b with D_x /\ D_{a[b]} nonempty. Throws
/// ModelError(not_arc_consistent) when a verification run would still
/// reduce the constraint.
std::set<IndexTuple> supporting_cells(const Model& model, const ArrayEq& c, const DomainTable& domains);

} // namespace arrayprop

#endif
