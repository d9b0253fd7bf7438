#ifndef ARRAYPROP_STATS_HPP
#define ARRAYPROP_STATS_HPP

#include <cstdint>
#include <map>
#include <string>

namespace arrayprop {

/// Engine-local counters. Exported as a flat key -> integer map.
struct PropagationStats {
    std::uint64_t runs = 0;              // ARRAC runs, or rule evaluations for the rule engine
    std::uint64_t cell_domain_reads = 0; // reads of some D_{a[b]}
    std::uint64_t t_computations = 0;    // T := D_x /\ D_{a[b]} in the first ARRAC loop
    std::uint64_t values_pruned = 0;
    std::uint64_t skipped_indices = 0;   // tuples routed to S
    std::uint64_t rule_applications = 0; // relevant (changing) applications
    std::uint64_t decisions = 0;
    std::uint64_t backtracks = 0;

    PropagationStats& operator+=(const PropagationStats& o);
    std::map<std::string, std::uint64_t> to_map() const;
};

} // namespace arrayprop

#endif
